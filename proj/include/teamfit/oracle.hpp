#pragma once

#include <span>
#include <vector>

#include "teamfit/types.hpp"

namespace teamfit {

inline constexpr int kOracleMaxBits = 20;  // 2^20 membership patterns

// Enumerates every expert-task membership pattern and returns a minimum-cost
// assignment; ties go to the pattern reached first by the binary counter
// (expert-major bit layout), i.e. the smallest membership bitstring.
// Requires n * k <= kOracleMaxBits; throws SizeGuardError beyond that.
SolveReport brute_force_balanced(const Instance& instance, double lambda);

// One enumeration pass evaluating several lambdas at once.
std::vector<SolveReport> brute_force_balanced(const Instance& instance,
                                              std::span<const double> lambdas);

struct MinLoadResult {
  int load = 0;
  TeamAssignment assignment;
};

// Minimum possible maximum load over assignments covering every task skill.
// Throws InfeasibleError when no full cover exists; same size guard.
MinLoadResult brute_force_min_load(const Instance& instance);

}  // namespace teamfit
