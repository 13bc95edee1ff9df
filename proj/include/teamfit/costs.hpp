#pragma once

#include <span>

#include "teamfit/types.hpp"

namespace teamfit {

// Union of the skills of the team's members.
SkillSet skill_profile(std::span<const int> team, const Instance& instance);

// Fraction of the task's skills not covered by the team's profile, in [0, 1].
double task_incompleteness(std::span<const int> team, const Task& task,
                           const Instance& instance);

// Maximum number of teams any single expert belongs to.
int load_cost(const TeamAssignment& assignment, const Instance& instance);

// Sum of per-task uncovered fractions, in [0, k].
double incompleteness_cost(const TeamAssignment& assignment, const Instance& instance);

// combined = lambda * load + incompleteness
CostBreakdown team_cost(const TeamAssignment& assignment, const Instance& instance,
                        double lambda);

}  // namespace teamfit
