#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "teamfit/simplex.hpp"
#include "teamfit/types.hpp"

namespace teamfit {

// LP relaxation of balanced task covering:
//   minimize load  subject to
//     for every task i and skill s in J_i:  sum over holders j of x_{ji} >= 1
//     for every expert j:                   sum over tasks i of x_{ji} <= load
//     0 <= x_{ji} <= 1
// Variables exist only for (expert, task) pairs with overlapping skills; the
// remaining entries are fixed to zero.
struct CoveringLP {
  struct Pair {
    int expert;
    int task;
  };
  struct CoverRow {
    int task;
    int skill;
    std::vector<int> vars;  // indices into `vars`
  };

  int num_experts = 0;
  int num_tasks = 0;
  std::vector<Pair> vars;
  std::vector<std::vector<int>> expert_vars;  // per expert, indices into `vars`
  std::vector<CoverRow> cover_rows;
};

// Fractional solution of the covering LP: an n x k matrix of assignment
// fractions plus the optimal load value.
struct FractionalAssignment {
  Eigen::MatrixXd values;  // num_experts x num_tasks, entries in [0, 1]
  double lp_load = 0.0;
};

// Throws InfeasibleError naming the first (task, skill) no expert holds.
CoveringLP build_lp(const Instance& instance);

FractionalAssignment solve_lp(const CoveringLP& lp);
FractionalAssignment solve_lp(const CoveringLP& lp, const LpSolver& solver);

// Debug dump in LP-format text (one constraint per row, variables x_<expert>_<task>)
// for cross-checking against external solvers.
void write_lp_format(const CoveringLP& lp, std::ostream& out);

}  // namespace teamfit
