#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "teamfit/types.hpp"

namespace teamfit {

// One line of an experts or tasks file: an id token plus skill names, each
// optionally carrying a required mark.
struct RawRecord {
  std::string id;
  std::vector<std::pair<std::string, bool>> skills;  // (name, required)
};

// Reads `<id><TAB><skill,skill,...>` records. Lines starting with '#' and
// blank lines are skipped. `required_marks` enables the leading '!' syntax;
// `allow_empty` permits records with no skills (experts after pruning).
std::vector<RawRecord> read_records(const std::filesystem::path& path,
                                    bool required_marks, bool allow_empty);

// Builds an instance from raw records. Skill names are interned to dense ids
// in first-appearance order over tasks; expert skills no task requires are
// dropped.
Instance build_instance(const std::vector<RawRecord>& experts,
                        const std::vector<RawRecord>& tasks);

Instance parse_instance(const std::filesystem::path& experts_file,
                        const std::filesystem::path& tasks_file);

// Canonical text form: records in id order, skills sorted by name, '!' marks
// on required task skills. parse of a serialized instance serializes back
// byte-identically.
void serialize_instance(const Instance& instance, std::ostream& experts_out,
                        std::ostream& tasks_out);

struct SynthConfig {
  double removal_fraction = 0.1;  // fraction of experts turned into task seeds
  int num_tasks = 0;
  int min_task_skills = 1;
  int max_task_skills = 1;
  std::uint64_t seed = 0;
};

// Upwork-style generator: removes ceil(removal_fraction * n) experts from the
// pool and samples each task as a uniform random subset of the removed
// experts' skill union (size uniform in [min_task_skills, max_task_skills]).
Instance synth_generate(const std::vector<RawRecord>& source_experts,
                        const SynthConfig& config);
Instance synth_generate(const std::filesystem::path& source_experts_file,
                        const SynthConfig& config);

struct InstanceStats {
  int num_experts = 0;
  int num_tasks = 0;
  int num_skills = 0;
  int max_task_size = 0;
  double avg_expert_skills = 0.0;
  double avg_task_skills = 0.0;
};

InstanceStats instance_stats(const Instance& instance);
std::string format_stats(const InstanceStats& stats);

}  // namespace teamfit
