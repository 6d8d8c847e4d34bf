#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "evoc/agent.hpp"
#include "evoc/params.hpp"

namespace evoc {

inline constexpr std::size_t kHistogramBins = 10;
inline constexpr double kImitatorCeiling = 0.1;  // p_create <= this
inline constexpr double kCreatorFloor = 0.9;     // p_create >= this

struct IterationRecord {
    int iteration = 0;
    double mean_fitness = 0.0;
    int diversity = 0;
    double mean_p_create = 0.0;
    double frac_imitators = 0.0;
    double frac_creators = 0.0;
    std::array<int, kHistogramBins> p_create_histogram{};

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct TimeSeries {
    SimParams params;
    std::string params_digest;
    std::vector<IterationRecord> records;  // indexed 0..iterations
    std::vector<double> final_p_create;    // row-major agent order

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

struct Summary {
    double mean = 0.0;
    double std = 0.0;  // sample (n-1); 0 for a single replicate
};

struct AggregatePoint {
    int iteration = 0;
    Summary mean_fitness;
    Summary diversity;
    Summary mean_p_create;
    Summary frac_imitators;
    Summary frac_creators;
    std::array<Summary, kHistogramBins> histogram{};
};

struct AggregateSeries {
    std::size_t replicates = 0;
    std::vector<AggregatePoint> points;
};

class BatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Histogram bin of p: floor(10 p), with p = 1.0 folded into the last bin.
std::size_t histogram_bin(double p);

/// Number of structurally distinct chains. Requires a non-empty input.
int diversity(std::span<const Chain> chains);
int diversity(std::span<const AgentState> agents);

double mean_fitness(std::span<const AgentState> agents);

IterationRecord measure(std::span<const AgentState> agents, int iteration);

Summary summarize(std::span<const double> values);

/// Throws BatchError when lengths or non-seed parameters differ.
AggregateSeries aggregate(std::span<const TimeSeries> series);

struct Peak {
    int iteration = 0;
    double value = 0.0;
};

/// Iteration of maximum mean diversity; earliest wins ties.
Peak diversity_peak(const AggregateSeries& series);
Peak peak_of(std::span<const double> values);

}  // namespace evoc
