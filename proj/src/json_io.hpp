#pragma once

// Internal JSON (de)serialization shared by config loading and run records.

#include <json.hpp>

#include "d2d/params.hpp"

namespace d2d::detail {

nlohmann::json params_to_json(const SystemParams& p);

// Applies the keys of `j` on top of `base`; handles dB alternates; throws
// ConfigError on unknown keys or wrong types. Does not validate.
SystemParams params_from_json(const nlohmann::json& j, SystemParams base = {});

}  // namespace d2d::detail
