#include "evoc/world.hpp"

#include <stdexcept>

namespace evoc {

namespace {

int wrap(int v, int n) { return ((v % n) + n) % n; }

}  // namespace

std::array<Coord, 4> neighbors(Coord c, const SimParams& params) {
    const int w = params.grid_width;
    const int h = params.grid_height;
    if (c.x < 0 || c.x >= w || c.y < 0 || c.y >= h) {
        throw std::out_of_range("coordinate outside the grid");
    }
    return {Coord{c.x, wrap(c.y - 1, h)}, Coord{wrap(c.x + 1, w), c.y},
            Coord{c.x, wrap(c.y + 1, h)}, Coord{wrap(c.x - 1, w), c.y}};
}

RunState init_run(const SimParams& params) {
    validate(params);
    RunState s;
    s.width = params.grid_width;
    s.height = params.grid_height;
    s.rng = RandomStream(params.seed);

    AgentState proto;
    proto.chain = Chain(neutral_action());
    proto.fitness = chain_fitness(proto.chain, params.fitness_head_rule, params.chain_discount_rule);
    proto.p_create = params.p_create_init;
    s.agents.assign(static_cast<std::size_t>(params.agent_count()), proto);

    s.neighbor_index.resize(s.agents.size());
    for (int y = 0; y < s.height; ++y) {
        for (int x = 0; x < s.width; ++x) {
            const auto nb = neighbors({x, y}, params);
            auto& slot = s.neighbor_index[s.index({x, y})];
            for (std::size_t k = 0; k < nb.size(); ++k) {
                slot[k] = static_cast<std::uint32_t>(s.index(nb[k]));
            }
        }
    }
    s.prev_mean_fitness = proto.fitness;
    return s;
}

IterationRecord step(RunState& state, const SimParams& params) {
    if (params.sr_enabled) {
        for (AgentState& a : state.agents) {
            a.p_create = update_p_create(a.p_create,
                                         relative_fitness(a.fitness, state.prev_mean_fitness));
        }
    }

    // Everyone acts against the start-of-iteration snapshot; adoptions land in
    // the next-state buffer.
    const std::vector<AgentState>& snapshot = state.agents;
    std::vector<AgentState> next = snapshot;
    std::array<NeighborView, 4> views;

    for (std::size_t i = 0; i < snapshot.size(); ++i) {
        const AgentState& self = snapshot[i];
        std::optional<Chain> candidate;
        if (state.rng.uniform() < self.p_create) {
            candidate = invent(self, params, state.rng);
        } else {
            const auto& nb = state.neighbor_index[i];
            for (std::size_t k = 0; k < nb.size(); ++k) {
                views[k] = {&snapshot[nb[k]].chain, snapshot[nb[k]].fitness};
            }
            candidate = imitate(self, views, state.rng);
        }
        if (!candidate) continue;

        AgentState& target = next[i];
        const AdoptionOutcome outcome = try_adopt(target, std::move(*candidate), params);
        if (outcome.adopted && outcome.informative) {
            target.detector =
                update_biases(target.detector, outcome.old_terms, outcome.new_terms, params.eta);
        }
    }

    state.agents = std::move(next);
    state.iteration += 1;
    IterationRecord record = measure(state.agents, state.iteration);
    state.prev_mean_fitness = record.mean_fitness;
    return record;
}

TimeSeries run(const SimParams& params) {
    RunState state = init_run(params);
    TimeSeries ts;
    ts.params = params;
    ts.params_digest = digest(params);
    ts.records.reserve(static_cast<std::size_t>(params.iterations) + 1);
    ts.records.push_back(measure(state.agents, 0));
    for (int t = 0; t < params.iterations; ++t) ts.records.push_back(step(state, params));
    ts.final_p_create.reserve(state.agents.size());
    for (const AgentState& a : state.agents) ts.final_p_create.push_back(a.p_create);
    return ts;
}

}  // namespace evoc
