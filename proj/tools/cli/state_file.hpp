#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "conclab/generators.hpp"

namespace conclab::cli {

/// Parses {"kind": "pure"|"density", "dims": [dA, dB], "data": [[re, im], ...]}
/// with row-major flattening. Density matrices go through the library's
/// validation (Hermitization within 1e-10, unit trace, positivity).
/// Schema violations throw Error(kSchemaError) naming the offending field.
State parse_state_json(std::string_view text);
State parse_state_file(const std::filesystem::path& path);

/// Emits every number with 17 significant digits, so parse/format is a
/// byte-exact round trip.
std::string format_state_json(const State& state);
void write_state_file(const std::filesystem::path& path, const State& state);

}  // namespace conclab::cli
