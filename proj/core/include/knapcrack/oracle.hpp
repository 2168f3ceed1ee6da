#pragma once

#include <cstdint>

#include "knapcrack/instance.hpp"

namespace knapcrack {

inline constexpr std::size_t kDefaultOracleGuard = 30;

// Exhaustively enumerates all 2^n subsets and returns every exact hit.
// Ground truth for the GA and the attack; refuses n above the guard.
SolutionSet brute_force_solve(const Instance& instance,
                              std::size_t guard = kDefaultOracleGuard);

// |brute_force_solve(instance)| without materializing the set.
std::uint64_t count_solutions(const Instance& instance,
                              std::size_t guard = kDefaultOracleGuard);

}  // namespace knapcrack
