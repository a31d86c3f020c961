#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace conclab::cli {

inline constexpr int kExitSeparable = 0;
inline constexpr int kExitEntangled = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitSchema = 65;
inline constexpr int kExitComputation = 70;

/// Seed used when --seed is absent: CONCURRENCE_LAB_SEED if set, else 0.
std::uint64_t default_seed();

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace conclab::cli
