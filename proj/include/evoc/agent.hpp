#pragma once

#include <optional>
#include <span>

#include "evoc/fitness.hpp"
#include "evoc/model.hpp"
#include "evoc/params.hpp"
#include "evoc/random.hpp"

namespace evoc {

/// Learned trend biases steering invention. Both stay in [-1, +1].
struct TrendDetector {
    double beta_move = 0.0;  // > 0 favours active positions
    double beta_sym = 0.0;   // > 0 favours matching a limb's active counterpart

    friend bool operator==(const TrendDetector&, const TrendDetector&) = default;
};

/// Hidden-layer concepts of the agent network for one action.
struct HiddenActivations {
    double movement = 0.0;  // active parts / 6
    double symmetry = 0.0;  // 0.5 per limb pair active in the same direction
    double opposite = 0.0;  // 0.5 per limb pair active in opposing directions
    bool left = false;
    bool right = false;
    bool arm = false;
    bool leg = false;
};

HiddenActivations hidden_activations(const Action& a);

struct AgentState {
    Chain chain{neutral_action()};
    Fitness fitness = 0.0;  // cached chain_fitness(chain)
    double p_create = 0.5;
    TrendDetector detector;
};

/// Per-part perturbation of `base`. Each part changes with probability
/// p_change; a changing part picks one of its two alternatives by the
/// detector's biases.
Action perturb(const Action& base, const TrendDetector& detector, double p_change,
               RandomStream& rng);

/// Moves `part` of `a` to one of its two alternatives using the bias rule.
Position biased_alternative(const Action& a, BodyPart part, const TrendDetector& detector,
                            RandomStream& rng);

/// True when chaining is on and the final sub-action is optimal and differs
/// from its predecessor.
bool can_extend(const Chain& chain, const SimParams& params);

/// Proposes a new chain. Extension is tried first when permitted; otherwise
/// the final sub-action is perturbed in place.
Chain invent(const AgentState& state, const SimParams& params, RandomStream& rng);

struct NeighborView {
    const Chain* chain = nullptr;
    Fitness fitness = 0.0;
};

/// Lazy search: scans neighbours in a random order and returns the first
/// chain strictly fitter than the agent's own.
std::optional<Chain> imitate(const AgentState& state, std::span<const NeighborView> neighbors,
                             RandomStream& rng);

struct AdoptionOutcome {
    bool adopted = false;
    FitnessTerms old_terms;  // final sub-action before adoption
    FitnessTerms new_terms;  // final sub-action after adoption
    /// The adopted final sub-action scores strictly higher on its own than the
    /// one it replaced, so its features carry trend information.
    bool informative = false;
};

AdoptionOutcome try_adopt(AgentState& state, Chain candidate, const SimParams& params);

TrendDetector update_biases(TrendDetector detector, const FitnessTerms& old_terms,
                            const FitnessTerms& new_terms, double eta);

/// Self-regulation: p * rf clamped to [0, 1].
double update_p_create(double p_prev, double rf_prev);

/// agent / mean, or 1.0 when the mean is zero.
double relative_fitness(Fitness agent_fitness, Fitness mean_fitness);

}  // namespace evoc
