#pragma once

#include <vector>

#include "evoc/model.hpp"
#include "evoc/random.hpp"

namespace evoc::testing {

inline Action random_action(RandomStream& rng) {
    return Action::from_code(static_cast<std::uint16_t>(rng.below(Action::kCount)));
}

/// Random chain honouring the no-equal-consecutive-steps invariant.
inline Chain random_chain(RandomStream& rng, std::size_t max_len) {
    const std::size_t len = 1 + rng.below(max_len);
    std::vector<Action> steps{random_action(rng)};
    while (steps.size() < len) {
        const Action a = random_action(rng);
        if (a != steps.back()) steps.push_back(a);
    }
    return Chain(std::move(steps));
}

/// Independent single-action scorer written straight from the formula, used
/// as an oracle against the table-driven implementation.
inline double reference_fitness(const std::array<int, 6>& pos, bool literal_head) {
    int m = 0;
    for (int p : pos) m += p != 0;
    const int s_a = pos[0] != 0 && pos[0] == pos[1];
    const int s_t = pos[2] != 0 && pos[2] == pos[3];
    const int head_still = pos[4] == 0;
    const int bonus = literal_head ? 1 - head_still : head_still;
    return m + 1.5 * (s_a + s_t) + 2.0 * bonus;
}

}  // namespace evoc::testing
