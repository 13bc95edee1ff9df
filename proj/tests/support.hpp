#pragma once

#include <vector>

#include "teamfit/rng.hpp"
#include "teamfit/types.hpp"

namespace teamfit::testing {

struct RandomInstanceOptions {
  int min_experts = 1;
  int max_experts = 6;
  int min_tasks = 1;
  int max_tasks = 4;
  int min_skills = 2;
  int max_skills = 8;
  int max_task_size = 4;
  double expert_skill_prob = 0.35;
  bool coverable = false;   // patch uncoverable task skills onto random experts
  int max_bits = 16;        // cap on num_experts * num_tasks
};

inline Instance random_instance(Rng& rng, const RandomInstanceOptions& o = {}) {
  int n, k;
  do {
    n = o.min_experts + rng.below_int(o.max_experts - o.min_experts + 1);
    k = o.min_tasks + rng.below_int(o.max_tasks - o.min_tasks + 1);
  } while (n * k > o.max_bits);
  const int m = o.min_skills + rng.below_int(o.max_skills - o.min_skills + 1);

  std::vector<Expert> experts(static_cast<std::size_t>(n));
  for (Expert& e : experts) {
    e.skills = SkillSet(m);
    for (int s = 0; s < m; ++s)
      if (rng.canonical() < o.expert_skill_prob) e.skills.set(s);
  }

  std::vector<Task> tasks(static_cast<std::size_t>(k));
  std::vector<int> ids(static_cast<std::size_t>(m));
  for (Task& t : tasks) {
    t.optional = SkillSet(m);
    const int size = 1 + rng.below_int(std::min(o.max_task_size, m));
    for (int i = 0; i < m; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < size; ++i) {
      std::swap(ids[static_cast<std::size_t>(i)],
                ids[static_cast<std::size_t>(i + rng.below_int(m - i))]);
      t.optional.set(ids[static_cast<std::size_t>(i)]);
    }
  }

  if (o.coverable && n > 0) {
    SkillSet pool(m);
    for (const Expert& e : experts) pool |= e.skills;
    for (Task& t : tasks)
      t.optional.for_each([&](int s) {
        if (!pool.test(s)) {
          experts[static_cast<std::size_t>(rng.below_int(n))].skills.set(s);
          pool.set(s);
        }
      });
  }

  return Instance(std::move(experts), std::move(tasks), m);
}

}  // namespace teamfit::testing
