#include <doctest.h>

#include "support.hpp"
#include "teamfit/costs.hpp"
#include "teamfit/greedy.hpp"
#include "teamfit/oracle.hpp"

using namespace teamfit;

namespace {

Instance make_instance(int m, std::vector<std::initializer_list<int>> expert_skills,
                       std::vector<std::initializer_list<int>> task_skills) {
  std::vector<Expert> experts;
  for (auto ids : expert_skills) experts.push_back({0, SkillSet::of(m, ids)});
  std::vector<Task> tasks;
  for (auto ids : task_skills) {
    Task t;
    t.optional = SkillSet::of(m, ids);
    tasks.push_back(std::move(t));
  }
  return Instance(std::move(experts), std::move(tasks), m);
}

// Minimum reachable incompleteness: per task, the fraction of its skills no
// expert in the pool holds.
double floor_incompleteness(const Instance& inst) {
  SkillSet pool(inst.num_skills());
  for (const Expert& e : inst.experts()) pool |= e.skills;
  double total = 0.0;
  for (const Task& t : inst.tasks())
    total += static_cast<double>(t.skills.difference_count(pool)) / t.skills.count();
  return total;
}

}  // namespace

TEST_CASE("top_tasks ranks by uncovered fraction over original size") {
  const SkillSet expert = SkillSet::of(2, {0});

  SUBCASE("only the task the expert improves is a candidate") {
    const std::vector<SkillSet> residuals = {SkillSet::of(2, {0}), SkillSet::of(2, {1})};
    CHECK(top_tasks(expert, residuals, {1, 1}, 1) == std::vector<int>{0});
  }
  SUBCASE("ell of zero selects nothing") {
    const std::vector<SkillSet> residuals = {SkillSet::of(2, {0})};
    CHECK(top_tasks(expert, residuals, {1}, 0).empty());
  }
  SUBCASE("fractions use the original task size as denominator") {
    // residuals {s0,s1} and {s0}; original sizes 2 and 1: 0/1 beats 1/2
    const std::vector<SkillSet> residuals = {SkillSet::of(2, {0, 1}), SkillSet::of(2, {0})};
    CHECK(top_tasks(expert, residuals, {2, 1}, 1) == std::vector<int>{1});
  }
  SUBCASE("fully covered tasks are never candidates") {
    const std::vector<SkillSet> residuals = {SkillSet(2), SkillSet::of(2, {0})};
    CHECK(top_tasks(expert, residuals, {1, 1}, 2) == std::vector<int>{1});
  }
  SUBCASE("equal fractions with equal benefit break to the lower id") {
    const std::vector<SkillSet> residuals = {SkillSet::of(2, {0, 1}), SkillSet::of(2, {0, 1})};
    CHECK(top_tasks(expert, residuals, {2, 2}, 1) == std::vector<int>{0});
  }
  SUBCASE("keeps the ell best when more tasks are beneficial") {
    // fractions 2/3, 1/2 and 0/1: ell = 2 must drop the first
    const std::vector<SkillSet> residuals = {SkillSet::of(3, {0, 1, 2}),
                                             SkillSet::of(3, {0, 1}), SkillSet::of(3, {0})};
    const SkillSet wide = SkillSet::of(3, {0});
    CHECK(top_tasks(wide, residuals, {3, 2, 1}, 2) == std::vector<int>{1, 2});
    CHECK(top_tasks(wide, residuals, {3, 2, 1}, 1) == std::vector<int>{2});
    CHECK(top_tasks(wide, residuals, {3, 2, 1}, 3) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("bounded selection matches a full sort on random inputs") {
    Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 2 + rng.below_int(8);
      const int k = 1 + rng.below_int(8);
      SkillSet skills(m);
      for (int s = 0; s < m; ++s)
        if (rng.canonical() < 0.4) skills.set(s);
      std::vector<SkillSet> residuals;
      std::vector<int> sizes;
      for (int j = 0; j < k; ++j) {
        SkillSet r(m);
        for (int s = 0; s < m; ++s)
          if (rng.canonical() < 0.5) r.set(s);
        sizes.push_back(std::max(r.count() + rng.below_int(3), 1));
        residuals.push_back(std::move(r));
      }
      const int ell = rng.below_int(k + 2);

      // reference: rank every beneficial task by exact fraction
      struct Ranked {
        long long unc, size;
        int benefit, task;
      };
      std::vector<Ranked> ranked;
      for (int j = 0; j < k; ++j) {
        const int benefit = residuals[static_cast<std::size_t>(j)].overlap(skills);
        if (benefit > 0)
          ranked.push_back({residuals[static_cast<std::size_t>(j)].count() - benefit,
                            sizes[static_cast<std::size_t>(j)], benefit, j});
      }
      std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.unc * b.size != b.unc * a.size) return a.unc * b.size < b.unc * a.size;
        if (a.benefit != b.benefit) return a.benefit > b.benefit;
        return a.task < b.task;
      });
      std::vector<int> expected;
      for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(ell); ++i)
        expected.push_back(ranked[i].task);
      std::sort(expected.begin(), expected.end());

      CHECK(top_tasks(skills, residuals, sizes, ell) == expected);
    }
  }
}

TEST_CASE("top_experts ranks by resulting uncovered fraction") {
  const std::vector<int> candidates = {0, 1};
  const std::vector<int> loads = {0, 0};

  SUBCASE("full cover first") {
    const Instance inst = make_instance(2, {{0, 1}, {0}}, {{0, 1}});
    CHECK(top_experts(SkillSet::of(2, {0, 1}), candidates, loads, inst) ==
          std::vector<int>{0, 1});
  }
  SUBCASE("zero-overlap experts are excluded") {
    const Instance inst = make_instance(6, {{0}, {1}}, {{5}});
    CHECK(top_experts(SkillSet::of(6, {5}), candidates, loads, inst).empty());
  }
  SUBCASE("equal fractions and loads break to the lower id") {
    const Instance inst = make_instance(2, {{0}, {1}}, {{0, 1}});
    CHECK(top_experts(SkillSet::of(2, {0, 1}), candidates, loads, inst) ==
          std::vector<int>{0, 1});
  }
  SUBCASE("lower load wins among equal fractions") {
    const Instance inst = make_instance(2, {{0}, {1}}, {{0, 1}});
    const std::vector<int> busy = {3, 1};
    CHECK(top_experts(SkillSet::of(2, {0, 1}), candidates, busy, inst) ==
          std::vector<int>{1, 0});
  }
}

TEST_CASE("expert_greedy boundary cases") {
  SUBCASE("lambda above k leaves all tasks uncovered") {
    const Instance inst = make_instance(3, {{0}, {1}}, {{0}, {1}, {2}});
    SolveConfig cfg;
    cfg.lambda = 4.0;  // k = 3
    const SolveReport report = expert_greedy(inst, cfg);
    CHECK(report.cost.combined == 3.0);
    CHECK(report.chosen_ell == 0);
    CHECK(report.assignment == TeamAssignment(3));
  }
  SUBCASE("lambda zero with a full sweep reaches the floor incompleteness") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Instance inst = testing::random_instance(rng);
      SolveConfig cfg;
      cfg.lambda = 0.0;
      cfg.ell_max = inst.num_tasks();
      const SolveReport report = expert_greedy(inst, cfg);
      CHECK(report.cost.incompleteness == floor_incompleteness(inst));
    }
  }
  SUBCASE("disjoint pairing is found at ell 1") {
    const Instance inst = make_instance(2, {{0}, {1}}, {{0}, {1}});
    SolveConfig cfg;
    cfg.lambda = 0.5;
    const SolveReport report = expert_greedy(inst, cfg);
    CHECK(report.cost.combined == 0.5);
    CHECK(report.chosen_ell == 1);
    CHECK(report.assignment == TeamAssignment({{0}, {1}}));
    // brute force confirms 0.5 is optimal
    CHECK(brute_force_balanced(inst, 0.5).cost.combined == 0.5);
  }
}

TEST_CASE("task_greedy boundary cases") {
  SUBCASE("lambda above k leaves all tasks uncovered") {
    const Instance inst = make_instance(3, {{0}, {1}}, {{0}, {1}, {2}});
    SolveConfig cfg;
    cfg.lambda = 4.0;
    const SolveReport report = task_greedy(inst, cfg);
    CHECK(report.cost.combined == 3.0);
    CHECK(report.chosen_ell == 0);
  }
  SUBCASE("lambda zero with a full sweep reaches the floor incompleteness") {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
      const Instance inst = testing::random_instance(rng);
      SolveConfig cfg;
      cfg.lambda = 0.0;
      cfg.ell_max = inst.num_tasks();
      const SolveReport report = task_greedy(inst, cfg);
      CHECK(report.cost.incompleteness == floor_incompleteness(inst));
    }
  }
  SUBCASE("ties in the sweep go to the smallest ell") {
    // one expert, two identical single-skill tasks, lambda 1: every ell scores 2
    const Instance inst = make_instance(1, {{0}}, {{0}, {0}});
    SolveConfig cfg;
    cfg.lambda = 1.0;
    const SolveReport report = task_greedy(inst, cfg);
    CHECK(report.cost.combined == 2.0);
    CHECK(report.chosen_ell == 0);
    CHECK(report.assignment == TeamAssignment(2));
    CHECK(brute_force_balanced(inst, 1.0).cost.combined == 2.0);
  }
}

TEST_CASE("expert_greedy load equals the chosen ell") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_instance(rng);
    if (inst.num_experts() == 0) continue;
    SolveConfig cfg;
    cfg.lambda = rng.canonical() * 2;
    const SolveReport report = expert_greedy(inst, cfg);
    REQUIRE(report.chosen_ell.has_value());
    const int load = load_cost(report.assignment, inst);
    CHECK(load <= *report.chosen_ell);
    CHECK(load == *report.chosen_ell);
  }
}

TEST_CASE("greedy sweeps are monotone in lambda") {
  Rng rng(22);
  const double grid[] = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = testing::random_instance(rng);
    for (auto* algorithm : {&expert_greedy, &task_greedy}) {
      double prev_b = -1.0, prev_c = -1.0;
      int prev_load = -1;
      double prev_slope = 0.0;
      double prev_lambda = 0.0;
      bool first = true;
      for (double lambda : grid) {
        SolveConfig cfg;
        cfg.lambda = lambda;
        const SolveReport report = (*algorithm)(inst, cfg);
        if (!first) {
          CHECK(report.cost.load <= prev_load);
          CHECK(report.cost.incompleteness >= prev_c);
          CHECK(report.cost.combined >= prev_b);
          // pointwise minimum of lines: slopes between grid points shrink
          const double slope = (report.cost.combined - prev_b) / (lambda - prev_lambda);
          if (prev_slope != 0.0) CHECK(slope <= prev_slope + 1e-9);
          prev_slope = slope;
        }
        prev_b = report.cost.combined;
        prev_c = report.cost.incompleteness;
        prev_load = report.cost.load;
        prev_lambda = lambda;
        first = false;
      }
    }
  }
}

TEST_CASE("greedy never beats the oracle") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::random_instance(rng);
    const double lambda = rng.canonical() * (inst.num_tasks() + 1);
    SolveConfig cfg;
    cfg.lambda = lambda;
    const double optimum = brute_force_balanced(inst, lambda).cost.combined;
    CHECK(expert_greedy(inst, cfg).cost.combined >= optimum - 1e-9);
    CHECK(task_greedy(inst, cfg).cost.combined >= optimum - 1e-9);
  }
}

TEST_CASE("greedy solvers are deterministic") {
  Rng rng(24);
  const Instance inst = testing::random_instance(rng);
  SolveConfig cfg;
  cfg.lambda = 0.7;
  const SolveReport a = expert_greedy(inst, cfg);
  const SolveReport b = expert_greedy(inst, cfg);
  CHECK(a.assignment == b.assignment);
  CHECK(a.cost.combined == b.cost.combined);
  const SolveReport c = task_greedy(inst, cfg);
  const SolveReport d = task_greedy(inst, cfg);
  CHECK(c.assignment == d.assignment);
  CHECK(c.cost.combined == d.cost.combined);
}

TEST_CASE("task_greedy never assigns an expert useless to the task") {
  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::random_instance(rng);
    SolveConfig cfg;
    cfg.lambda = rng.canonical();
    const SolveReport report = task_greedy(inst, cfg);
    for (int j = 0; j < inst.num_tasks(); ++j)
      for (int e : report.assignment.team(j))
        CHECK(inst.expert(e).skills.intersects(inst.task(j).skills));
  }
}

TEST_CASE("reported cost matches a from-scratch recomputation") {
  Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = testing::random_instance(rng);
    SolveConfig cfg;
    cfg.lambda = rng.canonical() * 3;
    for (const SolveReport& report : {expert_greedy(inst, cfg), task_greedy(inst, cfg)}) {
      const CostBreakdown fresh = team_cost(report.assignment, inst, cfg.lambda);
      CHECK(report.cost.load == fresh.load);
      CHECK(report.cost.incompleteness == fresh.incompleteness);
      CHECK(report.cost.combined == fresh.combined);
    }
  }
}
