#include "evoc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace evoc {

std::size_t histogram_bin(double p) {
    if (!(p > 0.0)) return 0;
    const auto bin = static_cast<std::size_t>(std::floor(p * static_cast<double>(kHistogramBins)));
    return std::min(bin, kHistogramBins - 1);
}

namespace {

int count_distinct(std::vector<const Chain*> chains) {
    if (chains.empty()) throw std::invalid_argument("diversity of an empty population");
    const auto less = [](const Chain* a, const Chain* b) { return *a < *b; };
    const auto equal = [](const Chain* a, const Chain* b) { return *a == *b; };
    std::sort(chains.begin(), chains.end(), less);
    return static_cast<int>(std::unique(chains.begin(), chains.end(), equal) - chains.begin());
}

template <typename Field>
Summary summarize_field(std::span<const TimeSeries> series, std::size_t t, Field field) {
    std::vector<double> values;
    values.reserve(series.size());
    for (const TimeSeries& s : series) values.push_back(field(s.records[t]));
    return summarize(values);
}

}  // namespace

int diversity(std::span<const Chain> chains) {
    std::vector<const Chain*> ptrs;
    ptrs.reserve(chains.size());
    for (const Chain& c : chains) ptrs.push_back(&c);
    return count_distinct(std::move(ptrs));
}

int diversity(std::span<const AgentState> agents) {
    std::vector<const Chain*> ptrs;
    ptrs.reserve(agents.size());
    for (const AgentState& a : agents) ptrs.push_back(&a.chain);
    return count_distinct(std::move(ptrs));
}

double mean_fitness(std::span<const AgentState> agents) {
    if (agents.empty()) throw std::invalid_argument("mean fitness of an empty population");
    double sum = 0.0;
    for (const AgentState& a : agents) sum += a.fitness;
    return sum / static_cast<double>(agents.size());
}

IterationRecord measure(std::span<const AgentState> agents, int iteration) {
    IterationRecord r;
    r.iteration = iteration;
    r.mean_fitness = mean_fitness(agents);
    r.diversity = diversity(agents);
    int imitators = 0;
    int creators = 0;
    double p_sum = 0.0;
    for (const AgentState& a : agents) {
        p_sum += a.p_create;
        if (a.p_create <= kImitatorCeiling) ++imitators;
        if (a.p_create >= kCreatorFloor) ++creators;
        ++r.p_create_histogram[histogram_bin(a.p_create)];
    }
    const auto n = static_cast<double>(agents.size());
    r.mean_p_create = p_sum / n;
    r.frac_imitators = imitators / n;
    r.frac_creators = creators / n;
    return r;
}

// Values are summed in sorted order so the result does not depend on the
// order replicates arrive in.
Summary summarize(std::span<const double> input) {
    if (input.empty()) throw std::invalid_argument("summary of no values");
    std::vector<double> values(input.begin(), input.end());
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    Summary s;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

AggregateSeries aggregate(std::span<const TimeSeries> series) {
    if (series.empty()) throw BatchError("aggregate needs at least one replicate");
    const TimeSeries& first = series.front();
    SimParams reference = first.params;
    reference.seed = 0;
    for (const TimeSeries& s : series) {
        if (s.records.size() != first.records.size()) {
            throw BatchError("replicates have different iteration counts");
        }
        SimParams p = s.params;
        p.seed = 0;
        if (p != reference) throw BatchError("replicates differ in non-seed parameters");
    }

    AggregateSeries out;
    out.replicates = series.size();
    out.points.reserve(first.records.size());
    for (std::size_t t = 0; t < first.records.size(); ++t) {
        AggregatePoint pt;
        pt.iteration = first.records[t].iteration;
        pt.mean_fitness = summarize_field(series, t, [](auto& r) { return r.mean_fitness; });
        pt.diversity =
            summarize_field(series, t, [](auto& r) { return static_cast<double>(r.diversity); });
        pt.mean_p_create = summarize_field(series, t, [](auto& r) { return r.mean_p_create; });
        pt.frac_imitators = summarize_field(series, t, [](auto& r) { return r.frac_imitators; });
        pt.frac_creators = summarize_field(series, t, [](auto& r) { return r.frac_creators; });
        for (std::size_t b = 0; b < kHistogramBins; ++b) {
            pt.histogram[b] = summarize_field(
                series, t, [b](auto& r) { return static_cast<double>(r.p_create_histogram[b]); });
        }
        out.points.push_back(pt);
    }
    return out;
}

Peak peak_of(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("peak of an empty sequence");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    return {static_cast<int>(best), values[best]};
}

Peak diversity_peak(const AggregateSeries& series) {
    std::vector<double> means;
    means.reserve(series.points.size());
    for (const AggregatePoint& p : series.points) means.push_back(p.diversity.mean);
    const Peak p = peak_of(means);
    return {series.points[static_cast<std::size_t>(p.iteration)].iteration, p.value};
}

}  // namespace evoc
