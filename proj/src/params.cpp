#include "evoc/params_json.hpp"

#include <stdexcept>
#include <string>

namespace evoc {

namespace {

std::string head_rule_name(HeadRule r) { return r == HeadRule::Prose ? "prose" : "literal"; }

std::string discount_rule_name(DiscountRule r) {
    return r == DiscountRule::PerStep ? "per_step" : "literal";
}

HeadRule parse_head_rule(const std::string& s) {
    if (s == "prose") return HeadRule::Prose;
    if (s == "literal") return HeadRule::Literal;
    throw std::invalid_argument("fitness_head_rule must be \"prose\" or \"literal\", got \"" + s +
                                "\"");
}

DiscountRule parse_discount_rule(const std::string& s) {
    if (s == "per_step") return DiscountRule::PerStep;
    if (s == "literal") return DiscountRule::Literal;
    throw std::invalid_argument("chain_discount_rule must be \"per_step\" or \"literal\", got \"" +
                                s + "\"");
}

template <typename T>
T get_as(const nlohmann::json& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("parameter \"" + key + "\" has the wrong type");
    }
}

}  // namespace

void validate(const SimParams& p) {
    if (p.grid_width < 1 || p.grid_height < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    if (static_cast<long long>(p.grid_width) * p.grid_height < 2) {
        throw std::invalid_argument("the grid must hold at least two agents");
    }
    if (p.iterations < 0) throw std::invalid_argument("iterations must not be negative");
    if (!(p.p_change > 0.0 && p.p_change <= 1.0)) {
        throw std::invalid_argument("p_change must lie in (0, 1]");
    }
    if (!(p.eta > 0.0)) throw std::invalid_argument("eta must be positive");
    if (!(p.p_create_init >= 0.0 && p.p_create_init <= 1.0)) {
        throw std::invalid_argument("p_create_init must lie in [0, 1]");
    }
}

void to_json(nlohmann::json& j, const SimParams& p) {
    j = nlohmann::json{
        {"grid_width", p.grid_width},
        {"grid_height", p.grid_height},
        {"iterations", p.iterations},
        {"sr_enabled", p.sr_enabled},
        {"chaining_enabled", p.chaining_enabled},
        {"p_change", p.p_change},
        {"eta", p.eta},
        {"p_create_init", p.p_create_init},
        {"fitness_head_rule", head_rule_name(p.fitness_head_rule)},
        {"chain_discount_rule", discount_rule_name(p.chain_discount_rule)},
        {"seed", p.seed},
    };
}

void apply_overrides(const nlohmann::json& j, SimParams& p) {
    if (!j.is_object()) throw std::invalid_argument("parameters must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (key == "grid_width") p.grid_width = get_as<int>(v, key);
        else if (key == "grid_height") p.grid_height = get_as<int>(v, key);
        else if (key == "iterations") p.iterations = get_as<int>(v, key);
        else if (key == "sr_enabled") p.sr_enabled = get_as<bool>(v, key);
        else if (key == "chaining_enabled") p.chaining_enabled = get_as<bool>(v, key);
        else if (key == "p_change") p.p_change = get_as<double>(v, key);
        else if (key == "eta") p.eta = get_as<double>(v, key);
        else if (key == "p_create_init") p.p_create_init = get_as<double>(v, key);
        else if (key == "fitness_head_rule")
            p.fitness_head_rule = parse_head_rule(get_as<std::string>(v, key));
        else if (key == "chain_discount_rule")
            p.chain_discount_rule = parse_discount_rule(get_as<std::string>(v, key));
        else if (key == "seed") p.seed = get_as<std::uint64_t>(v, key);
        else throw std::invalid_argument("unknown parameter \"" + key + "\"");
    }
}

// nlohmann::json objects keep keys sorted, so dump() is canonical.
std::string digest(const SimParams& p) {
    nlohmann::json j = p;
    return j.dump();
}

}  // namespace evoc
