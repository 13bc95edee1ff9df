#include "teamfit/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace teamfit {
namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Instance::Instance(std::vector<Expert> experts, std::vector<Task> tasks, int num_skills,
                   std::vector<std::string> expert_names,
                   std::vector<std::string> task_names,
                   std::vector<std::string> skill_names)
    : experts_(std::move(experts)),
      tasks_(std::move(tasks)),
      num_skills_(num_skills),
      expert_names_(std::move(expert_names)),
      task_names_(std::move(task_names)),
      skill_names_(std::move(skill_names)) {
  check(num_skills_ >= 1, "instance needs at least one skill");
  check(!tasks_.empty(), "instance needs at least one task");
  for (std::size_t i = 0; i < experts_.size(); ++i) {
    experts_[i].id = static_cast<int>(i);
    if (experts_[i].skills.universe() == 0) experts_[i].skills = SkillSet(num_skills_);
    check(experts_[i].skills.universe() == num_skills_,
          "expert skill set universe differs from the instance skill count");
  }
  task_sizes_.reserve(tasks_.size());
  for (std::size_t j = 0; j < tasks_.size(); ++j) {
    Task& t = tasks_[j];
    t.id = static_cast<int>(j);
    if (t.required.universe() == 0) t.required = SkillSet(num_skills_);
    if (t.optional.universe() == 0) t.optional = SkillSet(num_skills_);
    check(t.required.universe() == num_skills_ && t.optional.universe() == num_skills_,
          "task skill set universe differs from the instance skill count");
    check(!t.required.intersects(t.optional),
          "task " + std::to_string(j) + " marks a skill both required and optional");
    t.skills = t.required | t.optional;
    check(t.skills.any(), "task " + std::to_string(j) + " has no skills");
    const int size = t.skills.count();
    task_sizes_.push_back(size);
    max_task_size_ = std::max(max_task_size_, size);
  }
  check(expert_names_.empty() || expert_names_.size() == experts_.size(),
        "expert name list size mismatch");
  check(task_names_.empty() || task_names_.size() == tasks_.size(),
        "task name list size mismatch");
  check(skill_names_.empty() || skill_names_.size() == static_cast<std::size_t>(num_skills_),
        "skill name list size mismatch");
}

std::string Instance::expert_name(int id) const {
  if (!expert_names_.empty()) return expert_names_[static_cast<std::size_t>(id)];
  return "e" + std::to_string(id);
}

std::string Instance::task_name(int id) const {
  if (!task_names_.empty()) return task_names_[static_cast<std::size_t>(id)];
  return "t" + std::to_string(id);
}

std::string Instance::skill_name(int id) const {
  if (!skill_names_.empty()) return skill_names_[static_cast<std::size_t>(id)];
  return "s" + std::to_string(id);
}

TeamAssignment::TeamAssignment(std::vector<std::vector<int>> teams) : teams_(std::move(teams)) {
  for (auto& team : teams_) {
    std::sort(team.begin(), team.end());
    team.erase(std::unique(team.begin(), team.end()), team.end());
    if (!team.empty() && team.front() < 0)
      throw std::invalid_argument("negative expert id in team");
  }
}

void SolveConfig::validate() const {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  if (ell_max < 1) throw std::invalid_argument("ell_max must be at least 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
}

}  // namespace teamfit
