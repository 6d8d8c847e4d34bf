#pragma once

#include <span>
#include <vector>

#include "evoc/model.hpp"

namespace evoc {

using Fitness = double;

/// How the head term of the single-action score is read.
///  - Prose: +2 when the head is stationary (default).
///  - Literal: +2 when the head moves, as the formula is typeset.
enum class HeadRule { Prose, Literal };

/// How sub-actions of a chain are discounted.
///  - PerStep: step k (1-based) is divided by 1.2^(k-1) (default).
///  - Literal: every step is divided by 1.2^(n-1), n the chain length.
enum class DiscountRule { PerStep, Literal };

struct FitnessTerms {
    int m = 0;                // active body parts, head included
    int s_a = 0;              // both arms active and equal
    int s_t = 0;              // both legs active and equal
    int head_stationary = 0;  // head neutral

    friend bool operator==(const FitnessTerms&, const FitnessTerms&) = default;
};

FitnessTerms fitness_terms(const Action& a);

Fitness single_fitness(const Action& a, HeadRule rule = HeadRule::Prose);

/// Throws std::invalid_argument on an empty step sequence.
Fitness chain_fitness(std::span<const Action> steps, HeadRule head = HeadRule::Prose,
                      DiscountRule discount = DiscountRule::PerStep);

inline Fitness chain_fitness(const Chain& c, HeadRule head = HeadRule::Prose,
                             DiscountRule discount = DiscountRule::PerStep) {
    return chain_fitness(c.steps(), head, discount);
}

struct OracleResult {
    Fitness max = 0.0;
    std::vector<Action> argmax;  // in enumeration order
};

/// Exhaustive evaluation of every action.
OracleResult oracle_max_and_argmax(HeadRule rule = HeadRule::Prose);

/// Cached maximum single-action fitness for a rule.
Fitness max_single_fitness(HeadRule rule);

inline bool is_optimal(const Action& a, HeadRule rule) {
    return single_fitness(a, rule) >= max_single_fitness(rule);
}

}  // namespace evoc
