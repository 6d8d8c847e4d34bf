#pragma once

#include <json.hpp>

#include "evoc/params.hpp"

namespace evoc {

void to_json(nlohmann::json& j, const SimParams& p);

/// Overlays the keys present in j onto p. Unknown keys and ill-typed values
/// throw std::invalid_argument.
void apply_overrides(const nlohmann::json& j, SimParams& p);

}  // namespace evoc
