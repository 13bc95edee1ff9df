#pragma once

#include <cstdint>

#include "teamfit/lp.hpp"
#include "teamfit/types.hpp"

namespace teamfit {

// R = ceil(ln(2T / delta)) with T = max(m * k, n).
int default_rounds(const Instance& instance, double delta);

// Expert j joins team i iff at least one of `rounds` independent
// Bernoulli(values(j, i)) draws succeeds. Draws are consumed in (round,
// expert, task) lexicographic order, so results for r rounds are a prefix of
// results for r' > r rounds under the same seed.
TeamAssignment load_round(const FractionalAssignment& frac, int rounds,
                          std::uint64_t seed);

// Solves the covering LP, then rounds for the default number of rounds.
// Output does not depend on lambda; the reported cost uses lambda = 0.
SolveReport load(const Instance& instance, double delta, std::uint64_t seed);

// Same LP and rounding stream, but scores the cumulative assignment after
// every round (round 0 = empty) at config.lambda and keeps the best snapshot,
// ties to the earliest round.
SolveReport best_load(const Instance& instance, const SolveConfig& config);

}  // namespace teamfit
