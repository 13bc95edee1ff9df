#include "teamfit/rounding.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "teamfit/costs.hpp"
#include "teamfit/rng.hpp"

namespace teamfit {
namespace {

using Clock = std::chrono::steady_clock;

TeamAssignment to_assignment(const std::vector<std::vector<int>>& teams) {
  return TeamAssignment(teams);
}

}  // namespace

int default_rounds(const Instance& instance, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const double t = static_cast<double>(
      std::max(static_cast<std::int64_t>(instance.num_skills()) * instance.num_tasks(),
               static_cast<std::int64_t>(instance.num_experts())));
  return static_cast<int>(std::ceil(std::log(2.0 * t / delta)));
}

TeamAssignment load_round(const FractionalAssignment& frac, int rounds,
                          std::uint64_t seed) {
  if (rounds < 0) throw std::invalid_argument("rounds must be nonnegative");
  const int n = static_cast<int>(frac.values.rows());
  const int k = static_cast<int>(frac.values.cols());
  Rng rng(seed);
  std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> member =
      Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, k, false);
  for (int r = 0; r < rounds; ++r)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < k; ++i)
        if (rng.canonical() < frac.values(j, i)) member(j, i) = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      if (member(j, i)) teams[static_cast<std::size_t>(i)].push_back(j);
  return to_assignment(teams);
}

SolveReport load(const Instance& instance, double delta, std::uint64_t seed) {
  const auto start = Clock::now();
  const int rounds = default_rounds(instance, delta);
  const FractionalAssignment frac = solve_lp(build_lp(instance));
  SolveReport report;
  report.algorithm = "load";
  report.assignment = load_round(frac, rounds, seed);
  report.cost = team_cost(report.assignment, instance, 0.0);
  report.rounds_used = rounds;
  report.seed = seed;
  report.wall_time = Clock::now() - start;
  return report;
}

SolveReport best_load(const Instance& instance, const SolveConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const int rounds = default_rounds(instance, config.delta);
  const FractionalAssignment frac = solve_lp(build_lp(instance));
  const int n = instance.num_experts();
  const int k = instance.num_tasks();

  // Replays the same draw stream as load_round, scoring the cumulative
  // assignment after each round.
  Rng rng(config.seed);
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> member =
      Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, k, false);

  auto snapshot = [&]() {
    std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j)
        if (member(j, i)) teams[static_cast<std::size_t>(i)].push_back(j);
    return to_assignment(teams);
  };

  SolveReport report;
  report.algorithm = "best-load";
  report.assignment = snapshot();  // round 0: the empty assignment
  report.cost = team_cost(report.assignment, instance, config.lambda);
  report.rounds_used = 0;

  for (int r = 1; r <= rounds; ++r) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < k; ++i)
        if (rng.canonical() < frac.values(j, i)) member(j, i) = true;
    TeamAssignment assignment = snapshot();
    const CostBreakdown cost = team_cost(assignment, instance, config.lambda);
    if (cost.combined < report.cost.combined) {
      report.assignment = std::move(assignment);
      report.cost = cost;
      report.rounds_used = r;
    }
  }

  report.seed = config.seed;
  report.wall_time = Clock::now() - start;
  return report;
}

}  // namespace teamfit
