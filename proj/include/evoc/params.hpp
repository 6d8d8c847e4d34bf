#pragma once

#include <cstdint>
#include <string>

#include "evoc/fitness.hpp"

namespace evoc {

/// Parameters of a single run. Defaults reproduce the 32x32 reference world.
struct SimParams {
    int grid_width = 32;
    int grid_height = 32;
    int iterations = 100;
    bool sr_enabled = true;
    bool chaining_enabled = true;
    double p_change = 1.0 / 6.0;  // per-part change probability during invention
    double eta = 0.1;             // trend-bias learning step
    double p_create_init = 0.5;
    HeadRule fitness_head_rule = HeadRule::Prose;
    DiscountRule chain_discount_rule = DiscountRule::PerStep;
    std::uint64_t seed = 1;

    int agent_count() const { return grid_width * grid_height; }

    friend bool operator==(const SimParams&, const SimParams&) = default;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const SimParams& p);

/// Canonical one-line JSON serialization with keys in sorted order.
std::string digest(const SimParams& p);

}  // namespace evoc
