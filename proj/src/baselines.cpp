#include "teamfit/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "teamfit/costs.hpp"

namespace teamfit {
namespace {

using Clock = std::chrono::steady_clock;

// Accepted moves must beat this margin; prevents float-noise cycles.
constexpr double kImprovement = -1e-12;

}  // namespace

SolveReport set_cover(const Instance& instance) {
  const auto start = Clock::now();
  const int n = instance.num_experts();
  std::vector<std::vector<int>> teams(static_cast<std::size_t>(instance.num_tasks()));

  for (const Task& task : instance.tasks()) {
    SkillSet residual = task.skills;
    while (residual.any()) {
      int best = -1, best_overlap = 0;
      for (int e = 0; e < n; ++e) {
        const int overlap = instance.expert(e).skills.overlap(residual);
        if (overlap > best_overlap) {
          best = e;
          best_overlap = overlap;
        }
      }
      if (best < 0) break;  // nobody overlaps the remaining skills
      teams[static_cast<std::size_t>(task.id)].push_back(best);
      residual -= instance.expert(best).skills;
    }
  }

  SolveReport report;
  report.algorithm = "set-cover";
  report.assignment = TeamAssignment(std::move(teams));
  report.cost = team_cost(report.assignment, instance, 0.0);
  report.wall_time = Clock::now() - start;
  return report;
}

SolveReport best_cost_greedy(const Instance& instance, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  const auto start = Clock::now();
  const int n = instance.num_experts();
  const int k = instance.num_tasks();

  std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));
  std::vector<int> loads(static_cast<std::size_t>(n), 0);
  std::vector<char> in_team(static_cast<std::size_t>(n), 0);
  int max_load = 0;

  for (int j = 0; j < k; ++j) {
    SkillSet residual = instance.task(j).skills;
    const double size = instance.task_size(j);
    std::fill(in_team.begin(), in_team.end(), 0);
    for (;;) {
      int best = -1;
      double best_delta = kImprovement;
      for (int e = 0; e < n; ++e) {
        if (in_team[static_cast<std::size_t>(e)]) continue;
        const int overlap = instance.expert(e).skills.overlap(residual);
        const int new_max = std::max(max_load, loads[static_cast<std::size_t>(e)] + 1);
        const double delta = lambda * (new_max - max_load) - overlap / size;
        if (delta < best_delta) {
          best = e;
          best_delta = delta;
        }
      }
      if (best < 0) break;
      teams[static_cast<std::size_t>(j)].push_back(best);
      in_team[static_cast<std::size_t>(best)] = 1;
      residual -= instance.expert(best).skills;
      max_load = std::max(max_load, ++loads[static_cast<std::size_t>(best)]);
    }
  }

  SolveReport report;
  report.algorithm = "best-cost-greedy";
  report.assignment = TeamAssignment(std::move(teams));
  report.cost = team_cost(report.assignment, instance, lambda);
  report.wall_time = Clock::now() - start;
  return report;
}

SolveReport pair_greedy(const Instance& instance, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  const auto start = Clock::now();
  const int n = instance.num_experts();
  const int k = instance.num_tasks();

  std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));
  std::vector<std::vector<char>> in_team(
      static_cast<std::size_t>(k), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<SkillSet> residuals;
  for (const Task& t : instance.tasks()) residuals.push_back(t.skills);
  std::vector<int> loads(static_cast<std::size_t>(n), 0);
  int max_load = 0;

  for (;;) {
    int best_task = -1, best_expert = -1;
    double best_delta = kImprovement;
    for (int j = 0; j < k; ++j) {
      const double size = instance.task_size(j);
      for (int e = 0; e < n; ++e) {
        if (in_team[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)]) continue;
        const int overlap = instance.expert(e).skills.overlap(residuals[static_cast<std::size_t>(j)]);
        const int new_max = std::max(max_load, loads[static_cast<std::size_t>(e)] + 1);
        const double delta = lambda * (new_max - max_load) - overlap / size;
        if (delta < best_delta) {
          best_task = j;
          best_expert = e;
          best_delta = delta;
        }
      }
    }
    if (best_task < 0) break;
    teams[static_cast<std::size_t>(best_task)].push_back(best_expert);
    in_team[static_cast<std::size_t>(best_task)][static_cast<std::size_t>(best_expert)] = 1;
    residuals[static_cast<std::size_t>(best_task)] -= instance.expert(best_expert).skills;
    max_load = std::max(max_load, ++loads[static_cast<std::size_t>(best_expert)]);
  }

  SolveReport report;
  report.algorithm = "pair-greedy";
  report.assignment = TeamAssignment(std::move(teams));
  report.cost = team_cost(report.assignment, instance, lambda);
  report.wall_time = Clock::now() - start;
  return report;
}

}  // namespace teamfit
