#include "evoc/agent.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace evoc {

namespace {

constexpr int kExtensionRetries = 100;

constexpr Position flipped(Position p) {
    return p == Position::Up ? Position::Down : Position::Up;
}

int sign(int v) { return (v > 0) - (v < 0); }

double half_if(bool b) { return b ? 0.5 : 0.0; }

// Repeated eta steps accumulate rounding (ten steps of 0.1 sum to 0.9999...);
// values that close to a bound are snapped onto it.
double clamp_bias(double v) {
    constexpr double kSnap = 1e-9;
    if (v >= 1.0 - kSnap) return 1.0;
    if (v <= -1.0 + kSnap) return -1.0;
    return v;
}

}  // namespace

HiddenActivations hidden_activations(const Action& a) {
    const auto pair_state = [&](BodyPart l, BodyPart r) {
        const Position pl = a[l];
        const Position pr = a[r];
        const bool both = is_active(pl) && is_active(pr);
        return std::pair{both && pl == pr, both && pl != pr};
    };
    const auto [arms_same, arms_opposite] = pair_state(BodyPart::LeftArm, BodyPart::RightArm);
    const auto [legs_same, legs_opposite] = pair_state(BodyPart::LeftLeg, BodyPart::RightLeg);

    HiddenActivations h;
    h.movement = a.active_count() / 6.0;
    h.symmetry = half_if(arms_same) + half_if(legs_same);
    h.opposite = half_if(arms_opposite) + half_if(legs_opposite);
    h.left = is_active(a[BodyPart::LeftArm]) || is_active(a[BodyPart::LeftLeg]);
    h.right = is_active(a[BodyPart::RightArm]) || is_active(a[BodyPart::RightLeg]);
    h.arm = is_active(a[BodyPart::LeftArm]) || is_active(a[BodyPart::RightArm]);
    h.leg = is_active(a[BodyPart::LeftLeg]) || is_active(a[BodyPart::RightLeg]);
    return h;
}

Position biased_alternative(const Action& a, BodyPart part, const TrendDetector& detector,
                            RandomStream& rng) {
    const Position current = a[part];
    if (is_active(current)) {
        // Alternatives: Neutral or the opposite direction.
        const double p_active = (1.0 + detector.beta_move) / 2.0;
        return rng.bernoulli(p_active) ? flipped(current) : Position::Neutral;
    }
    // Both alternatives are active; only the direction is in question.
    const auto partner = counterpart(part);
    if (partner && is_active(a[*partner])) {
        const Position match = a[*partner];
        const double p_match = (1.0 + detector.beta_sym) / 2.0;
        return rng.bernoulli(p_match) ? match : flipped(match);
    }
    return rng.bernoulli(0.5) ? Position::Up : Position::Down;
}

// Decisions use the base action's positions, so the parts are perturbed
// independently of each other.
Action perturb(const Action& base, const TrendDetector& detector, double p_change,
               RandomStream& rng) {
    Action out = base;
    for (BodyPart part : kBodyParts) {
        if (rng.bernoulli(p_change)) out.set(part, biased_alternative(base, part, detector, rng));
    }
    return out;
}

bool can_extend(const Chain& chain, const SimParams& params) {
    if (!params.chaining_enabled) return false;
    if (!is_optimal(chain.back(), params.fitness_head_rule)) return false;
    return chain.size() == 1 || chain.back() != chain[chain.size() - 2];
}

Chain invent(const AgentState& state, const SimParams& params, RandomStream& rng) {
    const Action& last = state.chain.back();
    Chain candidate = state.chain;

    if (can_extend(state.chain, params)) {
        for (int attempt = 0; attempt < kExtensionRetries; ++attempt) {
            const Action next = perturb(last, state.detector, params.p_change, rng);
            if (next != last) {
                candidate.push_back(next);
                return candidate;
            }
        }
        Action forced = last;
        const BodyPart part = kBodyParts[rng.below(kBodyPartCount)];
        forced.set(part, biased_alternative(last, part, state.detector, rng));
        candidate.push_back(forced);
        return candidate;
    }

    // An in-place change may not recreate the predecessor step.
    const Action next = perturb(last, state.detector, params.p_change, rng);
    if (candidate.size() > 1 && next == candidate[candidate.size() - 2]) return candidate;
    candidate.replace_back(next);
    return candidate;
}

std::optional<Chain> imitate(const AgentState& state, std::span<const NeighborView> neighbors,
                             RandomStream& rng) {
    constexpr std::size_t kInline = 8;
    std::array<std::size_t, kInline> inline_order{};
    std::vector<std::size_t> heap_order;
    std::span<std::size_t> order;
    if (neighbors.size() <= kInline) {
        order = std::span{inline_order}.first(neighbors.size());
    } else {
        heap_order.resize(neighbors.size());
        order = heap_order;
    }
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (std::size_t i : order) {
        if (neighbors[i].fitness > state.fitness) return *neighbors[i].chain;
    }
    return std::nullopt;
}

AdoptionOutcome try_adopt(AgentState& state, Chain candidate, const SimParams& params) {
    AdoptionOutcome out;
    const Fitness f =
        chain_fitness(candidate, params.fitness_head_rule, params.chain_discount_rule);
    if (!(f > state.fitness)) return out;

    const Action old_last = state.chain.back();
    out.adopted = true;
    out.old_terms = fitness_terms(old_last);
    out.new_terms = fitness_terms(candidate.back());
    out.informative = single_fitness(candidate.back(), params.fitness_head_rule) >
                      single_fitness(old_last, params.fitness_head_rule);
    state.chain = std::move(candidate);
    state.fitness = f;
    return out;
}

TrendDetector update_biases(TrendDetector detector, const FitnessTerms& old_terms,
                            const FitnessTerms& new_terms, double eta) {
    const int dm = sign(new_terms.m - old_terms.m);
    const int ds = sign((new_terms.s_a + new_terms.s_t) - (old_terms.s_a + old_terms.s_t));
    detector.beta_move = clamp_bias(detector.beta_move + eta * dm);
    detector.beta_sym = clamp_bias(detector.beta_sym + eta * ds);
    return detector;
}

double update_p_create(double p_prev, double rf_prev) {
    return std::clamp(p_prev * rf_prev, 0.0, 1.0);
}

double relative_fitness(Fitness agent_fitness, Fitness mean_fitness) {
    if (mean_fitness == 0.0) return 1.0;
    return agent_fitness / mean_fitness;
}

}  // namespace evoc
