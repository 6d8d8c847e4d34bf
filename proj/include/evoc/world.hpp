#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "evoc/agent.hpp"
#include "evoc/metrics.hpp"
#include "evoc/params.hpp"
#include "evoc/random.hpp"

namespace evoc {

struct Coord {
    int x = 0;
    int y = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
};

/// Von Neumann neighbours on the torus, ordered N, E, S, W (N is y - 1).
std::array<Coord, 4> neighbors(Coord c, const SimParams& params);

/// Agents stored row-major: index = y * width + x.
struct RunState {
    int width = 0;
    int height = 0;
    std::vector<AgentState> agents;
    std::vector<std::array<std::uint32_t, 4>> neighbor_index;
    int iteration = 0;
    RandomStream rng{0};
    Fitness prev_mean_fitness = 0.0;

    const AgentState& at(Coord c) const { return agents[index(c)]; }
    std::size_t index(Coord c) const {
        return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(c.x);
    }
};

RunState init_run(const SimParams& params);

/// One synchronous iteration: self-regulation, snapshot, act, adopt, learn, commit.
IterationRecord step(RunState& state, const SimParams& params);

/// Initial record plus one record per iteration.
TimeSeries run(const SimParams& params);

}  // namespace evoc
