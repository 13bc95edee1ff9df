#pragma once

#include <optional>
#include <string_view>

#include "teamfit/types.hpp"

namespace teamfit {

enum class Algorithm {
  ExpertGreedy,
  TaskGreedy,
  BestLoad,
  Load,
  SetCover,
  BestCostGreedy,
  PairGreedy,
  Oracle,
};

std::string_view algorithm_name(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// Runs the chosen algorithm. For algorithms whose output does not depend on
// lambda (load, set-cover), the reported cost is re-evaluated at
// config.lambda so reports are comparable across algorithms.
SolveReport solve(const Instance& instance, const SolveConfig& config,
                  Algorithm algorithm);

}  // namespace teamfit
