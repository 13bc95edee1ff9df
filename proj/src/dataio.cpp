#include "teamfit/dataio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "teamfit/errors.hpp"
#include "teamfit/rng.hpp"

namespace teamfit {
namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

std::vector<RawRecord> read_records(const std::filesystem::path& path,
                                    bool required_marks, bool allow_empty) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");

  std::vector<RawRecord> records;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(path.string(), line_no, "expected <id><TAB><skills>");
    if (line.find('\t', tab + 1) != std::string::npos)
      throw ParseError(path.string(), line_no, "skill names must not contain tabs");

    RawRecord record;
    record.id = trim(line.substr(0, tab));
    if (record.id.empty()) throw ParseError(path.string(), line_no, "empty record id");
    if (!seen_ids.insert(record.id).second)
      throw ParseError(path.string(), line_no, "duplicate id '" + record.id + "'");

    // Duplicate skill names within one record collapse silently; a required
    // mark on any occurrence wins.
    std::unordered_map<std::string, std::size_t> index;
    std::string skills = line.substr(tab + 1);
    std::stringstream parts(skills);
    std::string part;
    while (std::getline(parts, part, ',')) {
      std::string name = trim(part);
      if (name.empty()) {
        if (trim(skills).empty()) break;  // wholly empty skill list
        throw ParseError(path.string(), line_no, "empty skill name");
      }
      bool required = false;
      if (required_marks && name.front() == '!') {
        required = true;
        name = trim(name.substr(1));
        if (name.empty()) throw ParseError(path.string(), line_no, "empty skill name after '!'");
      }
      auto [it, inserted] = index.emplace(name, record.skills.size());
      if (inserted)
        record.skills.emplace_back(name, required);
      else
        record.skills[it->second].second |= required;
    }
    if (record.skills.empty() && !allow_empty)
      throw ParseError(path.string(), line_no, "record '" + record.id + "' has no skills");
    records.push_back(std::move(record));
  }
  return records;
}

Instance build_instance(const std::vector<RawRecord>& experts,
                        const std::vector<RawRecord>& tasks) {
  // Intern skills over tasks first; anything outside that universe is a skill
  // no task requires and gets pruned from the experts.
  std::unordered_map<std::string, int> skill_ids;
  std::vector<std::string> skill_names;
  for (const RawRecord& record : tasks) {
    for (const auto& [name, required] : record.skills) {
      (void)required;
      if (skill_ids.emplace(name, static_cast<int>(skill_names.size())).second)
        skill_names.push_back(name);
    }
  }
  const int m = static_cast<int>(skill_names.size());
  if (m == 0) throw std::invalid_argument("tasks reference no skills");

  std::vector<Task> task_list;
  std::vector<std::string> task_names;
  task_list.reserve(tasks.size());
  for (const RawRecord& record : tasks) {
    Task task;
    task.required = SkillSet(m);
    task.optional = SkillSet(m);
    for (const auto& [name, required] : record.skills) {
      const int id = skill_ids.at(name);
      if (required)
        task.required.set(id);
      else
        task.optional.set(id);
    }
    task_list.push_back(std::move(task));
    task_names.push_back(record.id);
  }

  std::vector<Expert> expert_list;
  std::vector<std::string> expert_names;
  expert_list.reserve(experts.size());
  for (const RawRecord& record : experts) {
    Expert expert;
    expert.skills = SkillSet(m);
    for (const auto& [name, required] : record.skills) {
      (void)required;
      const auto it = skill_ids.find(name);
      if (it != skill_ids.end()) expert.skills.set(it->second);
    }
    expert_list.push_back(std::move(expert));
    expert_names.push_back(record.id);
  }

  return Instance(std::move(expert_list), std::move(task_list), m,
                  std::move(expert_names), std::move(task_names), std::move(skill_names));
}

Instance parse_instance(const std::filesystem::path& experts_file,
                        const std::filesystem::path& tasks_file) {
  const auto tasks = read_records(tasks_file, /*required_marks=*/true, /*allow_empty=*/false);
  const auto experts = read_records(experts_file, /*required_marks=*/false, /*allow_empty=*/true);
  if (tasks.empty()) throw ParseError(tasks_file.string(), 0, "no tasks");
  return build_instance(experts, tasks);
}

void serialize_instance(const Instance& instance, std::ostream& experts_out,
                        std::ostream& tasks_out) {
  // Skills sorted by name so the byte form is stable under id renumbering.
  auto sorted_names = [&](const SkillSet& set, const SkillSet& required) {
    std::vector<std::pair<std::string, bool>> names;
    set.for_each([&](int s) { names.emplace_back(instance.skill_name(s), required.universe() != 0 && required.test(s)); });
    std::sort(names.begin(), names.end());
    return names;
  };

  for (const Expert& e : instance.experts()) {
    experts_out << instance.expert_name(e.id) << '\t';
    const auto names = sorted_names(e.skills, SkillSet());
    for (std::size_t i = 0; i < names.size(); ++i)
      experts_out << (i ? "," : "") << names[i].first;
    experts_out << '\n';
  }
  for (const Task& t : instance.tasks()) {
    tasks_out << instance.task_name(t.id) << '\t';
    const auto names = sorted_names(t.skills, t.required);
    for (std::size_t i = 0; i < names.size(); ++i) {
      tasks_out << (i ? "," : "");
      if (names[i].second) tasks_out << '!';
      tasks_out << names[i].first;
    }
    tasks_out << '\n';
  }
}

Instance synth_generate(const std::vector<RawRecord>& source_experts,
                        const SynthConfig& config) {
  if (!(config.removal_fraction > 0.0 && config.removal_fraction < 1.0))
    throw GenerationError("removal fraction must lie in (0, 1)");
  if (config.num_tasks < 1) throw GenerationError("need at least one task");
  if (config.min_task_skills < 1 || config.min_task_skills > config.max_task_skills)
    throw GenerationError("invalid task size range");
  if (source_experts.empty()) throw GenerationError("empty source expert pool");

  const int n = static_cast<int>(source_experts.size());
  const int removed_count =
      std::min(n, static_cast<int>(std::ceil(config.removal_fraction * n)));

  Rng rng(config.seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < removed_count; ++i)
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(i + rng.below_int(n - i))]);

  std::vector<int> removed(order.begin(), order.begin() + removed_count);
  std::sort(removed.begin(), removed.end());

  // Union of the removed experts' skills, in first-appearance order.
  std::vector<std::string> pool;
  std::unordered_set<std::string> seen;
  for (int idx : removed)
    for (const auto& [name, required] : source_experts[static_cast<std::size_t>(idx)].skills) {
      (void)required;
      if (seen.insert(name).second) pool.push_back(name);
    }
  if (pool.empty()) throw GenerationError("removed experts hold no skills");
  const int pool_size = static_cast<int>(pool.size());
  if (config.min_task_skills > pool_size)
    throw GenerationError("task size range exceeds the removed experts' skill union (" +
                          std::to_string(pool_size) + " skills)");
  const int max_size = std::min(config.max_task_skills, pool_size);

  std::vector<RawRecord> tasks;
  std::vector<int> indices(static_cast<std::size_t>(pool_size));
  for (int t = 0; t < config.num_tasks; ++t) {
    const int size = config.min_task_skills + rng.below_int(max_size - config.min_task_skills + 1);
    for (int i = 0; i < pool_size; ++i) indices[static_cast<std::size_t>(i)] = i;
    RawRecord task;
    task.id = "t" + std::to_string(t);
    for (int i = 0; i < size; ++i) {
      std::swap(indices[static_cast<std::size_t>(i)],
                indices[static_cast<std::size_t>(i + rng.below_int(pool_size - i))]);
      task.skills.emplace_back(pool[static_cast<std::size_t>(indices[static_cast<std::size_t>(i)])],
                               false);
    }
    tasks.push_back(std::move(task));
  }

  std::vector<RawRecord> remaining;
  std::unordered_set<int> removed_set(removed.begin(), removed.end());
  for (int i = 0; i < n; ++i)
    if (!removed_set.contains(i)) remaining.push_back(source_experts[static_cast<std::size_t>(i)]);

  return build_instance(remaining, tasks);
}

Instance synth_generate(const std::filesystem::path& source_experts_file,
                        const SynthConfig& config) {
  return synth_generate(
      read_records(source_experts_file, /*required_marks=*/false, /*allow_empty=*/true), config);
}

InstanceStats instance_stats(const Instance& instance) {
  InstanceStats stats;
  stats.num_experts = instance.num_experts();
  stats.num_tasks = instance.num_tasks();
  stats.num_skills = instance.num_skills();
  stats.max_task_size = instance.max_task_size();
  double expert_total = 0.0;
  for (const Expert& e : instance.experts()) expert_total += e.skills.count();
  stats.avg_expert_skills = instance.num_experts() > 0 ? expert_total / instance.num_experts() : 0.0;
  double task_total = 0.0;
  for (const Task& t : instance.tasks()) task_total += t.skills.count();
  stats.avg_task_skills = task_total / instance.num_tasks();
  return stats;
}

std::string format_stats(const InstanceStats& stats) {
  char buffer[256];
  std::string out;
  std::snprintf(buffer, sizeof(buffer), "%-22s %10d\n", "# experts", stats.num_experts);
  out += buffer;
  std::snprintf(buffer, sizeof(buffer), "%-22s %10d\n", "# tasks", stats.num_tasks);
  out += buffer;
  std::snprintf(buffer, sizeof(buffer), "%-22s %10.2f\n", "# avg. skills/expert",
                stats.avg_expert_skills);
  out += buffer;
  std::snprintf(buffer, sizeof(buffer), "%-22s %10.2f\n", "# avg. skills/task",
                stats.avg_task_skills);
  out += buffer;
  std::snprintf(buffer, sizeof(buffer), "%-22s %10d\n", "# skills", stats.num_skills);
  out += buffer;
  std::snprintf(buffer, sizeof(buffer), "%-22s %10d\n", "# max task size", stats.max_task_size);
  out += buffer;
  return out;
}

}  // namespace teamfit
