#include "teamfit/required.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

#include "teamfit/costs.hpp"
#include "teamfit/errors.hpp"
#include "teamfit/rng.hpp"
#include "teamfit/rounding.hpp"

namespace teamfit {
namespace {

using Clock = std::chrono::steady_clock;

}  // namespace

Instance mark_required(const Instance& instance, const RequiredSplitConfig& config) {
  if (!(config.p_s >= 0.0 && config.p_s <= 1.0))
    throw std::invalid_argument("p_s must lie in [0, 1]");
  for (const Task& t : instance.tasks())
    if (t.required.any())
      throw std::invalid_argument("mark_required expects all-optional tasks");

  Rng rng(config.seed);
  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(instance.num_tasks()));
  for (const Task& t : instance.tasks()) {
    Task marked;
    marked.required = SkillSet(instance.num_skills());
    marked.optional = SkillSet(instance.num_skills());
    t.skills.for_each([&](int s) {
      if (rng.canonical() < config.p_s)
        marked.required.set(s);
      else
        marked.optional.set(s);
    });
    tasks.push_back(std::move(marked));
  }
  return Instance(instance.experts(), std::move(tasks), instance.num_skills(),
                  instance.expert_names(), instance.task_names(), instance.skill_names());
}

SolveReport r_balanced_solve(const Instance& instance, const SolveConfig& config,
                             Algorithm inner) {
  config.validate();
  const auto start = Clock::now();

  const int n = instance.num_experts();
  const int k = instance.num_tasks();
  const int m = instance.num_skills();

  bool any_required = false;
  for (const Task& t : instance.tasks()) any_required |= t.required.any();
  if (!any_required) return solve(instance, config, inner);  // plain problem

  SkillSet pool(m);
  for (const Expert& e : instance.experts()) pool |= e.skills;
  for (const Task& t : instance.tasks()) {
    if (!pool.contains(t.required)) {
      const int skill = (t.required - pool).to_vector().front();
      throw InfeasibleError(t.id, skill,
                            "required skill " + instance.skill_name(skill) + " of task " +
                                instance.task_name(t.id) + " is held by no expert");
    }
  }

  // Preprocessing: LP-round teams for the required sets only. Tasks without
  // required skills are skipped.
  std::vector<Task> pre_tasks;
  std::vector<int> pre_task_of;
  for (const Task& t : instance.tasks()) {
    if (t.required.none()) continue;
    Task pre;
    pre.optional = t.required;
    pre_tasks.push_back(std::move(pre));
    pre_task_of.push_back(t.id);
  }

  std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));
  {
    const Instance pre_instance(instance.experts(), std::move(pre_tasks), m);
    const SolveReport pre = load(pre_instance, config.delta, config.seed);
    for (std::size_t i = 0; i < pre_task_of.size(); ++i)
      teams[static_cast<std::size_t>(pre_task_of[i])] = pre.assignment.team(static_cast<int>(i));
  }

  // The rounding covers everything only with probability 1 - delta; finish
  // deterministically so the hard constraint holds on every run.
  for (const Task& t : instance.tasks()) {
    if (t.required.none()) continue;
    SkillSet needed = t.required - skill_profile(teams[static_cast<std::size_t>(t.id)], instance);
    while (needed.any()) {
      int best = -1, best_overlap = 0;
      for (int e = 0; e < n; ++e) {
        const int overlap = instance.expert(e).skills.overlap(needed);
        if (overlap > best_overlap) {
          best = e;
          best_overlap = overlap;
        }
      }
      assert(best >= 0);  // needed stays inside the pre-checked pool union
      teams[static_cast<std::size_t>(t.id)].push_back(best);
      needed -= instance.expert(best).skills;
    }
  }

  // Strip every covered skill, required and optional alike; what remains is
  // the instance the inner algorithm sees and the incompleteness denominator.
  std::vector<SkillSet> residual_targets;
  residual_targets.reserve(static_cast<std::size_t>(k));
  std::vector<Task> inner_tasks;
  std::vector<int> inner_task_of;
  for (const Task& t : instance.tasks()) {
    const SkillSet covered = skill_profile(teams[static_cast<std::size_t>(t.id)], instance);
    SkillSet residual = t.skills - covered;
    if (residual.any()) {
      Task rest;
      rest.optional = residual;
      inner_tasks.push_back(std::move(rest));
      inner_task_of.push_back(t.id);
    }
    residual_targets.push_back(std::move(residual));
  }

  SolveReport report;
  report.algorithm = std::string(algorithm_name(inner));
  if (!inner_tasks.empty()) {
    const Instance inner_instance(instance.experts(), std::move(inner_tasks), m);
    SolveReport inner_report = solve(inner_instance, config, inner);
    for (std::size_t i = 0; i < inner_task_of.size(); ++i) {
      auto& team = teams[static_cast<std::size_t>(inner_task_of[i])];
      const auto& add = inner_report.assignment.team(static_cast<int>(i));
      team.insert(team.end(), add.begin(), add.end());
    }
    report.chosen_ell = inner_report.chosen_ell;
    report.rounds_used = inner_report.rounds_used;
  }

  report.assignment = TeamAssignment(std::move(teams));
  CostBreakdown cost;
  cost.lambda = config.lambda;
  cost.load = load_cost(report.assignment, instance);
  cost.incompleteness = 0.0;
  for (int j = 0; j < k; ++j) {
    const SkillSet& target = residual_targets[static_cast<std::size_t>(j)];
    if (target.none()) continue;  // fully covered tasks contribute nothing
    const SkillSet covered = skill_profile(report.assignment.team(j), instance);
    cost.incompleteness +=
        static_cast<double>(target.difference_count(covered)) / target.count();
  }
  cost.combined = config.lambda * cost.load + cost.incompleteness;
  report.cost = cost;
  report.seed = config.seed;
  report.wall_time = Clock::now() - start;
  return report;
}

}  // namespace teamfit
