#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "evoc/metrics.hpp"
#include "evoc/params.hpp"

namespace evoc {

std::string version();

/// Invalid configuration; maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File-system failure; the message carries the offending path. Exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Variant {
    std::string name;
    SimParams params;  // base with the variant's overrides applied
};

struct ExperimentConfig {
    SimParams base;
    int replicates = 250;
    std::vector<Variant> variants;
    std::filesystem::path output_dir = "out";
    unsigned jobs = 0;  // 0 = available parallelism
    bool charts = false;
    std::size_t bootstrap_resamples = 10000;
};

/// Paper-default world with the sr_on / sr_off variant pair.
ExperimentConfig default_config();

/// Keys absent from the document keep their defaults. Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

void validate(const ExperimentConfig& cfg);

/// Replicate k of a variant runs with seed base + k.
SimParams replicate_params(const SimParams& params, int index);

/// Runs replicates 0..count-1 on a bounded worker pool; results are ordered
/// by replicate index regardless of completion order.
std::vector<TimeSeries> run_replicates(const SimParams& params, int count, unsigned jobs);

struct VariantResult {
    Variant variant;
    std::vector<TimeSeries> replicates;
    AggregateSeries aggregate;
};

struct ExperimentResult {
    std::vector<VariantResult> variants;

    const VariantResult* find(const std::string& name) const;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string aggregate_csv(const AggregateSeries& series);
nlohmann::json variant_meta(const VariantResult& result);

/// Writes <variant>_aggregate.csv and <variant>_meta.json (and charts when
/// enabled) into cfg.output_dir.
void write_outputs(const ExperimentConfig& cfg, const ExperimentResult& result);

struct BootstrapInterval {
    double estimate = 0.0;  // mean of the original sample
    double lower = 0.0;
    double upper = 0.0;
    std::size_t resamples = 0;

    bool excludes_zero() const { return lower > 0.0 || upper < 0.0; }
};

/// Percentile bootstrap interval for the mean of `samples`.
BootstrapInterval bootstrap_mean_ci(std::span<const double> samples, std::size_t resamples,
                                    std::uint64_t seed, double level = 0.95);

struct ComparisonReport {
    std::vector<double> fitness_difference;  // sr_on - sr_off per iteration
    Peak diversity_peak_on;
    Peak diversity_peak_off;
    double final_frac_imitators_on = 0.0;
    double final_frac_creators_on = 0.0;
    BootstrapInterval final_difference;
};

/// Needs variants named sr_on and sr_off; throws ConfigError otherwise.
/// Replicates are paired by index.
ComparisonReport compare_sr(const ExperimentResult& result, std::size_t resamples,
                             std::uint64_t seed);

nlohmann::json to_json(const ComparisonReport& report);
void write_comparison(const std::filesystem::path& dir, const ComparisonReport& report);

struct OracleRuleReport {
    HeadRule rule = HeadRule::Prose;
    OracleResult result;
};

struct OracleReport {
    OracleRuleReport prose;
    OracleRuleReport literal;

    /// Prose rule yields max 10 with 8 optima.
    bool ok() const;
};

OracleReport verify_oracle();
std::string format_oracle(const OracleReport& report);

struct ChartSeries {
    std::string name;
    std::vector<double> values;  // one per iteration
};

/// Static SVG line chart, iteration on the x axis.
std::string svg_line_chart(const std::string& title, const std::string& y_label,
                           std::span<const ChartSeries> series);

}  // namespace evoc
