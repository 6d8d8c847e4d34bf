#include "evoc/fitness.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace evoc {

namespace {

bool same_active(Position a, Position b) { return is_active(a) && a == b; }

Fitness score(const FitnessTerms& t, HeadRule rule) {
    const int head_bonus = rule == HeadRule::Prose ? t.head_stationary : 1 - t.head_stationary;
    return t.m + 1.5 * (t.s_a + t.s_t) + 2.0 * head_bonus;
}

using Table = std::array<Fitness, Action::kCount>;

Table build_table(HeadRule rule) {
    Table table{};
    for (std::uint16_t c = 0; c < Action::kCount; ++c) {
        table[c] = score(fitness_terms(Action::from_code(c)), rule);
    }
    return table;
}

const Table& table_for(HeadRule rule) {
    static const Table prose = build_table(HeadRule::Prose);
    static const Table literal = build_table(HeadRule::Literal);
    return rule == HeadRule::Prose ? prose : literal;
}

}  // namespace

FitnessTerms fitness_terms(const Action& a) {
    FitnessTerms t;
    t.m = a.active_count();
    t.s_a = same_active(a[BodyPart::LeftArm], a[BodyPart::RightArm]) ? 1 : 0;
    t.s_t = same_active(a[BodyPart::LeftLeg], a[BodyPart::RightLeg]) ? 1 : 0;
    t.head_stationary = is_active(a[BodyPart::Head]) ? 0 : 1;
    return t;
}

Fitness single_fitness(const Action& a, HeadRule rule) { return table_for(rule)[a.code()]; }

Fitness chain_fitness(std::span<const Action> steps, HeadRule head, DiscountRule discount) {
    if (steps.empty()) throw std::invalid_argument("chain_fitness of an empty chain");
    const auto& table = table_for(head);
    Fitness total = 0.0;
    if (discount == DiscountRule::Literal) {
        const double divisor = std::pow(1.2, static_cast<double>(steps.size() - 1));
        for (const Action& a : steps) total += table[a.code()] / divisor;
        return total;
    }
    double divisor = 1.0;
    for (const Action& a : steps) {
        total += table[a.code()] / divisor;
        divisor *= 1.2;
    }
    return total;
}

OracleResult oracle_max_and_argmax(HeadRule rule) {
    OracleResult r;
    for (const Action& a : enumerate_actions()) {
        const Fitness f = score(fitness_terms(a), rule);
        if (r.argmax.empty() || f > r.max) {
            r.max = f;
            r.argmax.assign(1, a);
        } else if (f == r.max) {
            r.argmax.push_back(a);
        }
    }
    return r;
}

Fitness max_single_fitness(HeadRule rule) {
    static const Fitness prose = oracle_max_and_argmax(HeadRule::Prose).max;
    static const Fitness literal = oracle_max_and_argmax(HeadRule::Literal).max;
    return rule == HeadRule::Prose ? prose : literal;
}

}  // namespace evoc
