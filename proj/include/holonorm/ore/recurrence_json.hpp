#pragma once

#include "holonorm/ore/recurrence.hpp"

#include "json.hpp"

namespace holonorm {

/// {"operator": text, "start": n, "initial": ["1", "3", ...]}
void to_json(nlohmann::json& j, const Recurrence& r);
void from_json(const nlohmann::json& j, Recurrence& r);

} // namespace holonorm
