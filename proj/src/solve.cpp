#include "teamfit/solve.hpp"

#include <stdexcept>

#include "teamfit/baselines.hpp"
#include "teamfit/costs.hpp"
#include "teamfit/greedy.hpp"
#include "teamfit/oracle.hpp"
#include "teamfit/rounding.hpp"

namespace teamfit {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::ExpertGreedy: return "expert-greedy";
    case Algorithm::TaskGreedy: return "task-greedy";
    case Algorithm::BestLoad: return "best-load";
    case Algorithm::Load: return "load";
    case Algorithm::SetCover: return "set-cover";
    case Algorithm::BestCostGreedy: return "best-cost-greedy";
    case Algorithm::PairGreedy: return "pair-greedy";
    case Algorithm::Oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (Algorithm a : {Algorithm::ExpertGreedy, Algorithm::TaskGreedy, Algorithm::BestLoad,
                      Algorithm::Load, Algorithm::SetCover, Algorithm::BestCostGreedy,
                      Algorithm::PairGreedy, Algorithm::Oracle}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

SolveReport solve(const Instance& instance, const SolveConfig& config,
                  Algorithm algorithm) {
  config.validate();
  switch (algorithm) {
    case Algorithm::ExpertGreedy:
      return expert_greedy(instance, config);
    case Algorithm::TaskGreedy:
      return task_greedy(instance, config);
    case Algorithm::BestLoad:
      return best_load(instance, config);
    case Algorithm::Load: {
      SolveReport report = load(instance, config.delta, config.seed);
      report.cost = team_cost(report.assignment, instance, config.lambda);
      return report;
    }
    case Algorithm::SetCover: {
      SolveReport report = set_cover(instance);
      report.cost = team_cost(report.assignment, instance, config.lambda);
      return report;
    }
    case Algorithm::BestCostGreedy:
      return best_cost_greedy(instance, config.lambda);
    case Algorithm::PairGreedy:
      return pair_greedy(instance, config.lambda);
    case Algorithm::Oracle:
      return brute_force_balanced(instance, config.lambda);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace teamfit
