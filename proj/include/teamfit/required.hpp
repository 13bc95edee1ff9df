#pragma once

#include <cstdint>

#include "teamfit/solve.hpp"
#include "teamfit/types.hpp"

namespace teamfit {

struct RequiredSplitConfig {
  double p_s = 0.0;  // per-skill probability of being marked required
  std::uint64_t seed = 0;
};

// Independently moves each skill of each task to the required set with
// probability p_s. The input must have all-optional tasks. Deterministic
// given the seed: draws are consumed task-ascending, skill-ascending.
Instance mark_required(const Instance& instance, const RequiredSplitConfig& config);

// Hard-coverage pipeline: (1) LP-round the required sets to teams and
// deterministically complete any skill the rounding missed, (2) strip every
// skill those teams cover, (3) run the inner algorithm on the remaining
// optional skills, (4) merge the teams per task. The result always covers
// every required skill; incompleteness is measured against the post-strip
// residual optional sets.
SolveReport r_balanced_solve(const Instance& instance, const SolveConfig& config,
                             Algorithm inner);

}  // namespace teamfit
