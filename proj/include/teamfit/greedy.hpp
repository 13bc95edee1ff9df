#pragma once

#include <span>
#include <vector>

#include "teamfit/types.hpp"

namespace teamfit {

// Up to `ell` task ids whose uncovered fraction drops the most when the expert
// joins them, i.e. minimizing |residual_j \ skills| / original_sizes[j].
// Tasks the expert cannot improve (no overlap with the residual) are not
// candidates, so fewer than `ell` ids may come back. Ties break to the task
// losing more uncovered skills, then to the lower id. Result is sorted by id.
std::vector<int> top_tasks(const SkillSet& expert_skills,
                           const std::vector<SkillSet>& residuals,
                           const std::vector<int>& original_sizes, int ell);

// Candidate experts ordered by the uncovered fraction of this task after
// hypothetically adding them, ties by lower current load, then lower id.
// Experts with no overlap with the residual are excluded.
std::vector<int> top_experts(const SkillSet& residual, std::span<const int> candidates,
                             const std::vector<int>& loads, const Instance& instance);

// Sweeps candidate maximum loads ell = 0..min(ell_max, k); for each ell every
// expert (ascending id) joins its top_tasks and the joined residuals shrink.
// Returns the sweep's minimum-cost assignment, ties to the smaller ell.
SolveReport expert_greedy(const Instance& instance, const SolveConfig& config);

// Same sweep, but each task greedily pulls experts from a lazily re-keyed
// min-heap until it is covered or no remaining expert overlaps; experts
// reaching load ell leave the pool after each task.
SolveReport task_greedy(const Instance& instance, const SolveConfig& config);

}  // namespace teamfit
