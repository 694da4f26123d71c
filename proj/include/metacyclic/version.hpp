#pragma once

#include <string_view>

namespace metacyclic {

// Stamped into cache records; records written by another version are recomputed.
inline constexpr std::string_view kToolVersion = "1.0.0";

// Version of the JSON objects printed by the CLI.
inline constexpr int kSchemaVersion = 1;

}  // namespace metacyclic
