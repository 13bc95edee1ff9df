#include "teamfit/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>

#include "teamfit/costs.hpp"
#include "teamfit/errors.hpp"

namespace teamfit {
namespace {

using Clock = std::chrono::steady_clock;

void check_size(const Instance& instance) {
  const std::int64_t bits =
      static_cast<std::int64_t>(instance.num_experts()) * instance.num_tasks();
  if (bits > kOracleMaxBits)
    throw SizeGuardError("oracle limited to " + std::to_string(kOracleMaxBits) +
                         " expert-task pairs, instance has " + std::to_string(bits));
}

TeamAssignment pattern_to_assignment(std::uint32_t pattern, int n, int k) {
  std::vector<std::vector<int>> teams(static_cast<std::size_t>(k));
  for (int e = 0; e < n; ++e)
    for (int t = 0; t < k; ++t)
      if ((pattern >> (e * k + t)) & 1u) teams[static_cast<std::size_t>(t)].push_back(e);
  return TeamAssignment(std::move(teams));
}

// Flat word-compact copies of the instance keep the enumeration loop free of
// allocations.
struct Compact {
  int n, k, words;
  std::vector<std::uint64_t> expert_skills;  // n * words
  std::vector<std::uint64_t> task_skills;    // k * words
  std::vector<double> inv_size;              // 1 / |J_j|
};

Compact compact_of(const Instance& instance) {
  Compact c;
  c.n = instance.num_experts();
  c.k = instance.num_tasks();
  c.words = (instance.num_skills() + 63) / 64;
  c.expert_skills.assign(static_cast<std::size_t>(c.n) * c.words, 0);
  c.task_skills.assign(static_cast<std::size_t>(c.k) * c.words, 0);
  for (int e = 0; e < c.n; ++e)
    instance.expert(e).skills.for_each([&](int s) {
      c.expert_skills[static_cast<std::size_t>(e) * c.words + s / 64] |= std::uint64_t{1}
                                                                         << (s % 64);
    });
  for (int t = 0; t < c.k; ++t) {
    instance.task(t).skills.for_each([&](int s) {
      c.task_skills[static_cast<std::size_t>(t) * c.words + s / 64] |= std::uint64_t{1}
                                                                       << (s % 64);
    });
    c.inv_size.push_back(1.0 / instance.task_size(t));
  }
  return c;
}

}  // namespace

std::vector<SolveReport> brute_force_balanced(const Instance& instance,
                                              std::span<const double> lambdas) {
  check_size(instance);
  for (double lambda : lambdas)
    if (lambda < 0.0) throw std::invalid_argument("lambda must be nonnegative");
  const auto start = Clock::now();

  const Compact c = compact_of(instance);
  const std::uint64_t patterns = std::uint64_t{1} << (c.n * c.k);
  const std::size_t num_lambdas = lambdas.size();

  std::vector<double> best_combined(num_lambdas, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> best_pattern(num_lambdas, 0);
  std::vector<std::uint64_t> cover(static_cast<std::size_t>(c.words));

  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    int max_load = 0;
    for (int e = 0; e < c.n; ++e) {
      const auto row = static_cast<std::uint32_t>((pattern >> (e * c.k)) &
                                                  ((std::uint64_t{1} << c.k) - 1));
      max_load = std::max(max_load, std::popcount(row));
    }
    double incompleteness = 0.0;
    for (int t = 0; t < c.k; ++t) {
      std::fill(cover.begin(), cover.end(), 0);
      for (int e = 0; e < c.n; ++e) {
        if ((pattern >> (e * c.k + t)) & 1u)
          for (int w = 0; w < c.words; ++w)
            cover[static_cast<std::size_t>(w)] |=
                c.expert_skills[static_cast<std::size_t>(e) * c.words + w];
      }
      int uncovered = 0;
      for (int w = 0; w < c.words; ++w)
        uncovered += std::popcount(c.task_skills[static_cast<std::size_t>(t) * c.words + w] &
                                   ~cover[static_cast<std::size_t>(w)]);
      incompleteness += uncovered * c.inv_size[static_cast<std::size_t>(t)];
    }
    for (std::size_t i = 0; i < num_lambdas; ++i) {
      const double combined = lambdas[i] * max_load + incompleteness;
      if (combined < best_combined[i]) {
        best_combined[i] = combined;
        best_pattern[i] = static_cast<std::uint32_t>(pattern);
      }
    }
  }

  std::vector<SolveReport> reports;
  reports.reserve(num_lambdas);
  for (std::size_t i = 0; i < num_lambdas; ++i) {
    SolveReport report;
    report.algorithm = "oracle";
    report.assignment = pattern_to_assignment(best_pattern[i], c.n, c.k);
    report.cost = team_cost(report.assignment, instance, lambdas[i]);
    report.wall_time = Clock::now() - start;
    reports.push_back(std::move(report));
  }
  return reports;
}

SolveReport brute_force_balanced(const Instance& instance, double lambda) {
  const double lambdas[] = {lambda};
  return brute_force_balanced(instance, lambdas).front();
}

MinLoadResult brute_force_min_load(const Instance& instance) {
  check_size(instance);

  // Coverability first, so the failure names a concrete (task, skill).
  SkillSet pool(instance.num_skills());
  for (const Expert& e : instance.experts()) pool |= e.skills;
  for (const Task& t : instance.tasks()) {
    if (!pool.contains(t.skills)) {
      const int skill = (t.skills - pool).to_vector().front();
      throw InfeasibleError(t.id, skill,
                            "task " + instance.task_name(t.id) + " requires skill " +
                                instance.skill_name(skill) + " that no expert holds");
    }
  }

  const Compact c = compact_of(instance);
  const std::uint64_t patterns = std::uint64_t{1} << (c.n * c.k);
  int best_load = std::numeric_limits<int>::max();
  std::uint32_t best_pattern = 0;
  std::vector<std::uint64_t> cover(static_cast<std::size_t>(c.words));

  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    bool covered = true;
    for (int t = 0; t < c.k && covered; ++t) {
      std::fill(cover.begin(), cover.end(), 0);
      for (int e = 0; e < c.n; ++e) {
        if ((pattern >> (e * c.k + t)) & 1u)
          for (int w = 0; w < c.words; ++w)
            cover[static_cast<std::size_t>(w)] |=
                c.expert_skills[static_cast<std::size_t>(e) * c.words + w];
      }
      for (int w = 0; w < c.words; ++w)
        if (c.task_skills[static_cast<std::size_t>(t) * c.words + w] &
            ~cover[static_cast<std::size_t>(w)]) {
          covered = false;
          break;
        }
    }
    if (!covered) continue;
    int max_load = 0;
    for (int e = 0; e < c.n; ++e) {
      const auto row = static_cast<std::uint32_t>((pattern >> (e * c.k)) &
                                                  ((std::uint64_t{1} << c.k) - 1));
      max_load = std::max(max_load, std::popcount(row));
    }
    if (max_load < best_load) {
      best_load = max_load;
      best_pattern = static_cast<std::uint32_t>(pattern);
    }
  }

  return {best_load, pattern_to_assignment(best_pattern, c.n, c.k)};
}

}  // namespace teamfit
