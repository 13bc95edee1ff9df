#include "teamfit/costs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace teamfit {

SkillSet skill_profile(std::span<const int> team, const Instance& instance) {
  SkillSet profile(instance.num_skills());
  for (int id : team) {
    if (id < 0 || id >= instance.num_experts())
      throw std::invalid_argument("expert id " + std::to_string(id) + " out of range");
    profile |= instance.expert(id).skills;
  }
  return profile;
}

double task_incompleteness(std::span<const int> team, const Task& task,
                           const Instance& instance) {
  const int size = task.skills.count();
  if (size == 0) throw std::invalid_argument("task has an empty skill set");
  const SkillSet covered = skill_profile(team, instance);
  return static_cast<double>(task.skills.difference_count(covered)) / size;
}

namespace {

void check_shape(const TeamAssignment& assignment, const Instance& instance) {
  if (assignment.num_tasks() != instance.num_tasks())
    throw std::invalid_argument("assignment has " + std::to_string(assignment.num_tasks()) +
                                " teams for " + std::to_string(instance.num_tasks()) + " tasks");
}

}  // namespace

int load_cost(const TeamAssignment& assignment, const Instance& instance) {
  check_shape(assignment, instance);
  std::vector<int> loads(static_cast<std::size_t>(instance.num_experts()), 0);
  int max_load = 0;
  for (const auto& team : assignment.teams()) {
    for (int id : team) {
      if (id < 0 || id >= instance.num_experts())
        throw std::invalid_argument("expert id " + std::to_string(id) + " out of range");
      max_load = std::max(max_load, ++loads[static_cast<std::size_t>(id)]);
    }
  }
  return max_load;
}

double incompleteness_cost(const TeamAssignment& assignment, const Instance& instance) {
  check_shape(assignment, instance);
  double total = 0.0;
  for (int j = 0; j < instance.num_tasks(); ++j)
    total += task_incompleteness(assignment.team(j), instance.task(j), instance);
  return total;
}

CostBreakdown team_cost(const TeamAssignment& assignment, const Instance& instance,
                        double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  CostBreakdown cost;
  cost.lambda = lambda;
  cost.load = load_cost(assignment, instance);
  cost.incompleteness = incompleteness_cost(assignment, instance);
  cost.combined = lambda * cost.load + cost.incompleteness;
  return cost;
}

}  // namespace teamfit
