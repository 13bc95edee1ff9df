#include "teamfit/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <queue>
#include <tuple>

#include "teamfit/costs.hpp"

namespace teamfit {
namespace {

using Clock = std::chrono::steady_clock;

int sweep_limit(const Instance& instance, const SolveConfig& config) {
  return std::min(config.ell_max, instance.num_tasks());
}

}  // namespace

std::vector<int> top_tasks(const SkillSet& expert_skills,
                           const std::vector<SkillSet>& residuals,
                           const std::vector<int>& original_sizes, int ell) {
  struct Candidate {
    std::int64_t uncovered;  // |residual \ skills|
    std::int64_t size;       // original task size
    int benefit;             // |residual ∩ skills|
    int task;
  };
  // a better than b: smaller fraction, then larger benefit, then lower id
  auto better = [](const Candidate& a, const Candidate& b) {
    if (a.uncovered * b.size != b.uncovered * a.size)
      return a.uncovered * b.size < b.uncovered * a.size;
    if (a.benefit != b.benefit) return a.benefit > b.benefit;
    return a.task < b.task;
  };

  std::vector<int> picked;
  if (ell <= 0) return picked;

  // Bounded selection: keep the `ell` best seen. With `better` as the
  // comparator the heap's top is the worst kept candidate, the one to evict.
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(better)> best(better);
  const int k = static_cast<int>(residuals.size());
  for (int j = 0; j < k; ++j) {
    const int benefit = residuals[static_cast<std::size_t>(j)].overlap(expert_skills);
    if (benefit == 0) continue;  // joining changes nothing for this task
    Candidate cand{residuals[static_cast<std::size_t>(j)].count() - benefit,
                   original_sizes[static_cast<std::size_t>(j)], benefit, j};
    if (static_cast<int>(best.size()) < ell) {
      best.push(cand);
    } else if (better(cand, best.top())) {
      best.pop();
      best.push(cand);
    }
  }
  picked.reserve(best.size());
  while (!best.empty()) {
    picked.push_back(best.top().task);
    best.pop();
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

SolveReport expert_greedy(const Instance& instance, const SolveConfig& config) {
  config.validate();
  const auto start = Clock::now();

  const int k = instance.num_tasks();
  std::vector<int> original_sizes(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) original_sizes[static_cast<std::size_t>(j)] = instance.task_size(j);

  SolveReport report;
  report.algorithm = "expert-greedy";
  bool have_best = false;

  std::vector<SkillSet> residuals;
  for (int ell = 0; ell <= sweep_limit(instance, config); ++ell) {
    residuals.clear();
    for (const Task& t : instance.tasks()) residuals.push_back(t.skills);
    std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));

    for (const Expert& expert : instance.experts()) {
      const std::vector<int> picks = top_tasks(expert.skills, residuals, original_sizes, ell);
      for (int j : picks) teams[static_cast<std::size_t>(j)].push_back(expert.id);
      for (int j : picks) residuals[static_cast<std::size_t>(j)] -= expert.skills;
    }

    TeamAssignment assignment(std::move(teams));
    // Scored against the original tasks, not the consumed residuals.
    const CostBreakdown cost = team_cost(assignment, instance, config.lambda);
    if (!have_best || cost.combined < report.cost.combined) {
      have_best = true;
      report.assignment = std::move(assignment);
      report.cost = cost;
      report.chosen_ell = ell;
    }
  }

  report.wall_time = Clock::now() - start;
  return report;
}

std::vector<int> top_experts(const SkillSet& residual, std::span<const int> candidates,
                             const std::vector<int>& loads, const Instance& instance) {
  struct Entry {
    int uncovered;
    int load;
    int id;
  };
  std::vector<Entry> entries;
  const int total = residual.count();
  for (int id : candidates) {
    const int overlap = instance.expert(id).skills.overlap(residual);
    if (overlap == 0) continue;
    entries.push_back({total - overlap, loads[static_cast<std::size_t>(id)], id});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.uncovered, a.load, a.id) < std::tie(b.uncovered, b.load, b.id);
  });
  std::vector<int> out;
  out.reserve(entries.size());
  for (const Entry& e : entries) out.push_back(e.id);
  return out;
}

SolveReport task_greedy(const Instance& instance, const SolveConfig& config) {
  config.validate();
  const auto start = Clock::now();

  const int n = instance.num_experts();
  const int k = instance.num_tasks();

  SolveReport report;
  report.algorithm = "task-greedy";
  bool have_best = false;

  // heap orders by (uncovered, load, id); keys are exact within one task
  // because the fraction denominator is that task's original size
  using Entry = std::tuple<int, int, int>;

  for (int ell = 0; ell <= sweep_limit(instance, config); ++ell) {
    std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));
    if (ell > 0 && n > 0) {
      std::vector<int> loads(static_cast<std::size_t>(n), 0);
      std::vector<int> pool(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
      int running_max_load = 0;

      for (int j = 0; j < k; ++j) {
        SkillSet residual = instance.task(j).skills;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        for (int id : pool) {
          const int overlap = instance.expert(id).skills.overlap(residual);
          if (overlap > 0)
            heap.emplace(residual.count() - overlap, loads[static_cast<std::size_t>(id)], id);
        }
        while (residual.any() && !heap.empty()) {
          const auto [cached_uncovered, load, id] = heap.top();
          heap.pop();
          const int overlap = instance.expert(id).skills.overlap(residual);
          if (overlap == 0) continue;  // no longer useful, drop
          const int uncovered = residual.count() - overlap;
          if (uncovered != cached_uncovered) {
            heap.emplace(uncovered, load, id);  // stale key, re-rank
            continue;
          }
          teams[static_cast<std::size_t>(j)].push_back(id);
          residual -= instance.expert(id).skills;
          running_max_load =
              std::max(running_max_load, ++loads[static_cast<std::size_t>(id)]);
        }
        // UpdateExperts: drop everyone who reached the cap.
        std::erase_if(pool, [&](int id) { return loads[static_cast<std::size_t>(id)] >= ell; });
      }
    }

    TeamAssignment assignment(std::move(teams));
    const CostBreakdown cost = team_cost(assignment, instance, config.lambda);
    if (!have_best || cost.combined < report.cost.combined) {
      have_best = true;
      report.assignment = std::move(assignment);
      report.cost = cost;
      report.chosen_ell = ell;
    }
  }

  report.wall_time = Clock::now() - start;
  return report;
}

}  // namespace teamfit
