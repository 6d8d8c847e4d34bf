#include "evoc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "evoc/params_json.hpp"
#include "evoc/random.hpp"
#include "evoc/world.hpp"

#ifndef EVOC_VERSION
#define EVOC_VERSION "0.0.0"
#endif

namespace evoc {

std::string version() { return EVOC_VERSION; }

namespace {

constexpr const char* kSrOn = "sr_on";
constexpr const char* kSrOff = "sr_off";

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

Variant make_variant(const std::string& name, const SimParams& base, const nlohmann::json& overrides) {
    Variant v{name, base};
    try {
        apply_overrides(overrides, v.params);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("variant \"" + name + "\": " + e.what());
    }
    return v;
}

template <typename T>
T config_value(const nlohmann::json& v, const char* key) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("config key \"") + key + "\" has the wrong type");
    }
}

}  // namespace

ExperimentConfig default_config() {
    ExperimentConfig cfg;
    SimParams on = cfg.base;
    on.sr_enabled = true;
    SimParams off = cfg.base;
    off.sr_enabled = false;
    cfg.variants = {{kSrOn, on}, {kSrOff, off}};
    return cfg;
}

ExperimentConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    ExperimentConfig cfg = default_config();

    if (doc.contains("base")) {
        try {
            apply_overrides(doc.at("base"), cfg.base);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("base: ") + e.what());
        }
    }
    for (const auto& [key, v] : doc.items()) {
        if (key == "base" || key == "variants") continue;
        if (key == "replicates") cfg.replicates = config_value<int>(v, "replicates");
        else if (key == "output_dir")
            cfg.output_dir = config_value<std::string>(v, "output_dir");
        else if (key == "jobs") cfg.jobs = config_value<unsigned>(v, "jobs");
        else if (key == "charts") cfg.charts = config_value<bool>(v, "charts");
        else if (key == "bootstrap_resamples")
            cfg.bootstrap_resamples = config_value<std::size_t>(v, "bootstrap_resamples");
        else throw ConfigError("unknown config key \"" + key + "\"");
    }

    cfg.variants.clear();
    if (!doc.contains("variants")) {
        cfg.variants.push_back(make_variant(kSrOn, cfg.base, {{"sr_enabled", true}}));
        cfg.variants.push_back(make_variant(kSrOff, cfg.base, {{"sr_enabled", false}}));
    } else {
        const auto& list = doc.at("variants");
        if (!list.is_array()) throw ConfigError("variants must be an array");
        for (const auto& entry : list) {
            if (!entry.is_object() || !entry.contains("name")) {
                throw ConfigError("each variant needs a \"name\"");
            }
            for (const auto& [key, _] : entry.items()) {
                if (key != "name" && key != "params") {
                    throw ConfigError("unknown variant key \"" + key + "\"");
                }
            }
            const auto name = config_value<std::string>(entry.at("name"), "name");
            const nlohmann::json overrides =
                entry.contains("params") ? entry.at("params") : nlohmann::json::object();
            cfg.variants.push_back(make_variant(name, cfg.base, overrides));
        }
    }
    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.replicates < 1) throw ConfigError("replicates must be at least 1");
    if (cfg.variants.empty()) throw ConfigError("at least one variant is required");
    if (cfg.bootstrap_resamples < 1) throw ConfigError("bootstrap_resamples must be positive");
    std::set<std::string> names;
    for (const Variant& v : cfg.variants) {
        if (v.name.empty()) throw ConfigError("variant names must not be empty");
        if (v.name.find_first_of("/\\") != std::string::npos) {
            throw ConfigError("variant name \"" + v.name + "\" contains a path separator");
        }
        if (!names.insert(v.name).second) {
            throw ConfigError("duplicate variant name \"" + v.name + "\"");
        }
        try {
            validate(v.params);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("variant \"" + v.name + "\": " + e.what());
        }
    }
}

SimParams replicate_params(const SimParams& params, int index) {
    SimParams p = params;
    p.seed = params.seed + static_cast<std::uint64_t>(index);
    return p;
}

std::vector<TimeSeries> run_replicates(const SimParams& params, int count, unsigned jobs) {
    std::vector<TimeSeries> out(static_cast<std::size_t>(count));
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(count));

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (int k = next++; k < count && !failed; k = next++) {
            try {
                out[static_cast<std::size_t>(k)] = run(replicate_params(params, k));
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

const VariantResult* ExperimentResult::find(const std::string& name) const {
    for (const VariantResult& v : variants) {
        if (v.variant.name == name) return &v;
    }
    return nullptr;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    ExperimentResult result;
    for (const Variant& v : cfg.variants) {
        VariantResult vr;
        vr.variant = v;
        vr.replicates = run_replicates(v.params, cfg.replicates, cfg.jobs);
        vr.aggregate = aggregate(vr.replicates);
        result.variants.push_back(std::move(vr));
    }
    return result;
}

std::string aggregate_csv(const AggregateSeries& series) {
    std::ostringstream out;
    out << "iteration,mean_fitness_mean,mean_fitness_std,diversity_mean,diversity_std,"
           "mean_pc_mean,frac_imitators_mean,frac_creators_mean\n";
    for (const AggregatePoint& p : series.points) {
        out << p.iteration << ',' << fixed6(p.mean_fitness.mean) << ','
            << fixed6(p.mean_fitness.std) << ',' << fixed6(p.diversity.mean) << ','
            << fixed6(p.diversity.std) << ',' << fixed6(p.mean_p_create.mean) << ','
            << fixed6(p.frac_imitators.mean) << ',' << fixed6(p.frac_creators.mean) << '\n';
    }
    return out.str();
}

nlohmann::json variant_meta(const VariantResult& result) {
    const auto n = result.replicates.size();
    return {
        {"variant", result.variant.name},
        {"params", result.variant.params},
        {"replicates", n},
        {"seeds", {result.variant.params.seed, result.variant.params.seed + n - 1}},
        {"tool_version", version()},
    };
}

void write_outputs(const ExperimentConfig& cfg, const ExperimentResult& result) {
    ensure_dir(cfg.output_dir);
    for (const VariantResult& v : result.variants) {
        write_file(cfg.output_dir / (v.variant.name + "_aggregate.csv"),
                   aggregate_csv(v.aggregate));
        write_file(cfg.output_dir / (v.variant.name + "_meta.json"),
                   variant_meta(v).dump(2) + "\n");
    }
    if (!cfg.charts) return;

    std::vector<ChartSeries> fitness;
    std::vector<ChartSeries> diversity;
    for (const VariantResult& v : result.variants) {
        ChartSeries f{v.variant.name, {}};
        ChartSeries d{v.variant.name, {}};
        for (const AggregatePoint& p : v.aggregate.points) {
            f.values.push_back(p.mean_fitness.mean);
            d.values.push_back(p.diversity.mean);
        }
        fitness.push_back(std::move(f));
        diversity.push_back(std::move(d));
    }
    write_file(cfg.output_dir / "mean_fitness.svg",
               svg_line_chart("Mean fitness of implemented actions", "mean fitness", fitness));
    write_file(cfg.output_dir / "diversity.svg",
               svg_line_chart("Number of different actions", "diversity", diversity));
}

BootstrapInterval bootstrap_mean_ci(std::span<const double> samples, std::size_t resamples,
                                    std::uint64_t seed, double level) {
    if (samples.empty()) throw std::invalid_argument("bootstrap of an empty sample");
    if (resamples == 0) throw std::invalid_argument("bootstrap needs at least one resample");
    const std::size_t n = samples.size();
    RandomStream rng(seed);
    std::vector<double> means(resamples);
    for (double& m : means) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += samples[rng.below(n)];
        m = sum / static_cast<double>(n);
    }
    std::sort(means.begin(), means.end());
    // Linear interpolation between order statistics.
    const auto quantile = [&](double q) {
        const double h = q * static_cast<double>(resamples - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const auto hi = std::min(lo + 1, resamples - 1);
        return means[lo] + (h - static_cast<double>(lo)) * (means[hi] - means[lo]);
    };
    BootstrapInterval ci;
    ci.estimate = summarize(samples).mean;
    ci.lower = quantile((1.0 - level) / 2.0);
    ci.upper = quantile(1.0 - (1.0 - level) / 2.0);
    ci.resamples = resamples;
    return ci;
}

ComparisonReport compare_sr(const ExperimentResult& result, std::size_t resamples,
                             std::uint64_t seed) {
    const VariantResult* on = result.find(kSrOn);
    const VariantResult* off = result.find(kSrOff);
    if (!on || !off) throw ConfigError("comparison needs variants named sr_on and sr_off");
    if (on->replicates.size() != off->replicates.size() ||
        on->aggregate.points.size() != off->aggregate.points.size()) {
        throw ConfigError("sr_on and sr_off must have equal replicates and iterations");
    }

    ComparisonReport report;
    for (std::size_t t = 0; t < on->aggregate.points.size(); ++t) {
        report.fitness_difference.push_back(on->aggregate.points[t].mean_fitness.mean -
                                            off->aggregate.points[t].mean_fitness.mean);
    }
    report.diversity_peak_on = diversity_peak(on->aggregate);
    report.diversity_peak_off = diversity_peak(off->aggregate);
    const AggregatePoint& last = on->aggregate.points.back();
    report.final_frac_imitators_on = last.frac_imitators.mean;
    report.final_frac_creators_on = last.frac_creators.mean;

    std::vector<double> diffs;
    for (std::size_t k = 0; k < on->replicates.size(); ++k) {
        diffs.push_back(on->replicates[k].records.back().mean_fitness -
                        off->replicates[k].records.back().mean_fitness);
    }
    report.final_difference = bootstrap_mean_ci(diffs, resamples, seed);
    return report;
}

nlohmann::json to_json(const ComparisonReport& r) {
    return {
        {"final_fitness_difference",
         {{"mean", r.final_difference.estimate},
          {"ci95_lower", r.final_difference.lower},
          {"ci95_upper", r.final_difference.upper},
          {"resamples", r.final_difference.resamples},
          {"excludes_zero", r.final_difference.excludes_zero()}}},
        {"diversity_peak",
         {{"sr_on", {{"iteration", r.diversity_peak_on.iteration},
                     {"value", r.diversity_peak_on.value}}},
          {"sr_off", {{"iteration", r.diversity_peak_off.iteration},
                      {"value", r.diversity_peak_off.value}}}}},
        {"sr_on_final_segregation",
         {{"frac_imitators", r.final_frac_imitators_on},
          {"frac_creators", r.final_frac_creators_on},
          {"total", r.final_frac_imitators_on + r.final_frac_creators_on}}},
    };
}

void write_comparison(const std::filesystem::path& dir, const ComparisonReport& report) {
    ensure_dir(dir);
    std::ostringstream csv;
    csv << "iteration,mean_fitness_difference\n";
    for (std::size_t t = 0; t < report.fitness_difference.size(); ++t) {
        csv << t << ',' << fixed6(report.fitness_difference[t]) << '\n';
    }
    write_file(dir / "comparison.csv", csv.str());
    write_file(dir / "comparison.json", to_json(report).dump(2) + "\n");
}

bool OracleReport::ok() const {
    return prose.result.max == 10.0 && prose.result.argmax.size() == 8;
}

OracleReport verify_oracle() {
    OracleReport r;
    r.prose = {HeadRule::Prose, oracle_max_and_argmax(HeadRule::Prose)};
    r.literal = {HeadRule::Literal, oracle_max_and_argmax(HeadRule::Literal)};
    return r;
}

std::string format_oracle(const OracleReport& report) {
    std::ostringstream out;
    for (const OracleRuleReport* r : {&report.prose, &report.literal}) {
        out << "fitness_head_rule=" << (r->rule == HeadRule::Prose ? "prose" : "literal")
            << " max=" << fixed6(r->result.max) << " optima=" << r->result.argmax.size() << '\n';
        for (const Action& a : r->result.argmax) out << "  " << a.encode() << '\n';
    }
    out << (report.ok() ? "oracle OK\n" : "oracle FAILED: prose rule must give max 10 with 8 optima\n");
    return out.str();
}

}  // namespace evoc
