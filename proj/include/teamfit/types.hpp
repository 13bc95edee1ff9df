#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamfit/skill_set.hpp"

namespace teamfit {

using SkillId = int;

struct Expert {
  int id = 0;
  SkillSet skills;  // may be empty after pruning
};

struct Task {
  int id = 0;
  SkillSet required;  // must be fully covered in the required-skills variant
  SkillSet optional;  // contributes to incompleteness only
  SkillSet skills;    // required | optional; filled by Instance's constructor
};

// Immutable problem instance: the skill universe, the expert pool and the
// tasks. Construction validates ids, the required/optional split and that
// every task carries at least one skill.
class Instance {
 public:
  Instance(std::vector<Expert> experts, std::vector<Task> tasks, int num_skills,
           std::vector<std::string> expert_names = {},
           std::vector<std::string> task_names = {},
           std::vector<std::string> skill_names = {});

  int num_experts() const { return static_cast<int>(experts_.size()); }
  int num_tasks() const { return static_cast<int>(tasks_.size()); }
  int num_skills() const { return num_skills_; }
  // Cardinality of the largest task.
  int max_task_size() const { return max_task_size_; }

  const std::vector<Expert>& experts() const { return experts_; }
  const std::vector<Task>& tasks() const { return tasks_; }
  const Expert& expert(int id) const { return experts_[static_cast<std::size_t>(id)]; }
  const Task& task(int id) const { return tasks_[static_cast<std::size_t>(id)]; }
  int task_size(int id) const { return task_sizes_[static_cast<std::size_t>(id)]; }

  // Display names; empty vectors when the instance was built programmatically.
  const std::vector<std::string>& expert_names() const { return expert_names_; }
  const std::vector<std::string>& task_names() const { return task_names_; }
  const std::vector<std::string>& skill_names() const { return skill_names_; }

  std::string expert_name(int id) const;
  std::string task_name(int id) const;
  std::string skill_name(int id) const;

 private:
  std::vector<Expert> experts_;
  std::vector<Task> tasks_;
  int num_skills_ = 0;
  int max_task_size_ = 0;
  std::vector<int> task_sizes_;
  std::vector<std::string> expert_names_;
  std::vector<std::string> task_names_;
  std::vector<std::string> skill_names_;
};

// One team of expert ids per task; canonical form is sorted and duplicate
// free, so equal assignments compare equal. Immutable after construction.
class TeamAssignment {
 public:
  TeamAssignment() = default;
  explicit TeamAssignment(int num_tasks) : teams_(static_cast<std::size_t>(num_tasks)) {}
  explicit TeamAssignment(std::vector<std::vector<int>> teams);

  int num_tasks() const { return static_cast<int>(teams_.size()); }
  const std::vector<int>& team(int task) const { return teams_[static_cast<std::size_t>(task)]; }
  const std::vector<std::vector<int>>& teams() const { return teams_; }

  bool operator==(const TeamAssignment&) const = default;

 private:
  std::vector<std::vector<int>> teams_;
};

struct SolveConfig {
  double lambda = 0.0;      // trade-off weight on the load term
  int ell_max = 80;         // cap on the candidate maximum-load sweep
  double delta = 0.1;       // rounding failure probability budget
  std::uint64_t seed = 0;

  void validate() const;
};

struct CostBreakdown {
  int load = 0;
  double incompleteness = 0.0;
  double combined = 0.0;
  double lambda = 0.0;
};

struct SolveReport {
  TeamAssignment assignment;
  CostBreakdown cost;
  std::string algorithm;
  std::optional<int> chosen_ell;
  std::optional<int> rounds_used;
  std::optional<std::uint64_t> seed;
  std::chrono::duration<double, std::milli> wall_time{0.0};
};

}  // namespace teamfit
