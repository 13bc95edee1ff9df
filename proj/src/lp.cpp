#include "teamfit/lp.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "teamfit/errors.hpp"

namespace teamfit {

CoveringLP build_lp(const Instance& instance) {
  const int n = instance.num_experts();
  const int k = instance.num_tasks();

  // Union of all expert skills, for the feasibility pre-check.
  SkillSet pool(instance.num_skills());
  for (const Expert& e : instance.experts()) pool |= e.skills;
  for (const Task& t : instance.tasks()) {
    if (!pool.contains(t.skills)) {
      const SkillSet missing = t.skills - pool;
      const int skill = missing.to_vector().front();
      throw InfeasibleError(t.id, skill,
                            "task " + instance.task_name(t.id) + " requires skill " +
                                instance.skill_name(skill) + " that no expert holds");
    }
  }

  CoveringLP lp;
  lp.num_experts = n;
  lp.num_tasks = k;
  lp.expert_vars.resize(static_cast<std::size_t>(n));

  // Variables only where the expert can contribute to the task.
  std::vector<std::vector<int>> var_of_task(static_cast<std::size_t>(k));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < k; ++i) {
      if (!instance.expert(j).skills.intersects(instance.task(i).skills)) continue;
      const int v = static_cast<int>(lp.vars.size());
      lp.vars.push_back({j, i});
      lp.expert_vars[static_cast<std::size_t>(j)].push_back(v);
      var_of_task[static_cast<std::size_t>(i)].push_back(v);
    }
  }

  for (int i = 0; i < k; ++i) {
    instance.task(i).skills.for_each([&](int s) {
      CoveringLP::CoverRow row{i, s, {}};
      for (int v : var_of_task[static_cast<std::size_t>(i)]) {
        if (instance.expert(lp.vars[static_cast<std::size_t>(v)].expert).skills.test(s))
          row.vars.push_back(v);
      }
      lp.cover_rows.push_back(std::move(row));
    });
  }
  return lp;
}

namespace {

LinearProgram to_linear_program(const CoveringLP& lp) {
  LinearProgram out;
  const int load_var = static_cast<int>(lp.vars.size());
  out.num_vars = load_var + 1;
  out.objective.assign(static_cast<std::size_t>(out.num_vars), 0.0);
  out.objective.back() = 1.0;  // minimize the load variable
  // The x <= 1 bounds are dropped from the solved program and restored by
  // clamping afterwards: covering coefficients are all +1, so a row holding a
  // variable above 1 sums to at least that value and clamping keeps it >= 1,
  // while load row sums only shrink. The optimum value is unchanged and the
  // tableau stays m+n rows instead of m+n+nk.
  out.upper.assign(static_cast<std::size_t>(out.num_vars), LinearProgram::kInfinity);

  for (const CoveringLP::CoverRow& row : lp.cover_rows) {
    LpConstraint con;
    con.sense = LpConstraint::Sense::GreaterEqual;
    con.rhs = 1.0;
    for (int v : row.vars) con.terms.emplace_back(v, 1.0);
    out.constraints.push_back(std::move(con));
  }
  for (const std::vector<int>& vars : lp.expert_vars) {
    if (vars.empty()) continue;
    LpConstraint con;
    con.sense = LpConstraint::Sense::LessEqual;
    con.rhs = 0.0;
    for (int v : vars) con.terms.emplace_back(v, 1.0);
    con.terms.emplace_back(load_var, -1.0);
    out.constraints.push_back(std::move(con));
  }
  return out;
}

}  // namespace

FractionalAssignment solve_lp(const CoveringLP& lp) {
  const DenseSimplexSolver solver;
  return solve_lp(lp, solver);
}

FractionalAssignment solve_lp(const CoveringLP& lp, const LpSolver& solver) {
  const LinearProgram program = to_linear_program(lp);
  const LpSolution solution = solver.solve(program);
  if (solution.status == LpStatus::Infeasible)
    throw InfeasibleError(-1, -1, "covering LP is infeasible");
  if (solution.status != LpStatus::Optimal)
    throw SolverFailureError("LP solver did not converge");

  FractionalAssignment frac;
  frac.values = Eigen::MatrixXd::Zero(lp.num_experts, lp.num_tasks);
  frac.lp_load = solution.x(static_cast<int>(lp.vars.size()));
  for (std::size_t v = 0; v < lp.vars.size(); ++v)
    frac.values(lp.vars[v].expert, lp.vars[v].task) = solution.x(static_cast<int>(v));
  frac.values = frac.values.cwiseMax(0.0).cwiseMin(1.0);

  // Certify the clamped solution before use; tolerances per contract.
  constexpr double kResidual = 1e-6;
  double worst_cover = 0.0, worst_load = 0.0, worst_bound = 0.0;
  for (const CoveringLP::CoverRow& row : lp.cover_rows) {
    double sum = 0.0;
    for (int v : row.vars)
      sum += frac.values(lp.vars[static_cast<std::size_t>(v)].expert,
                         lp.vars[static_cast<std::size_t>(v)].task);
    worst_cover = std::max(worst_cover, 1.0 - sum);
  }
  for (int j = 0; j < lp.num_experts; ++j)
    worst_load = std::max(worst_load, frac.values.row(j).sum() - frac.lp_load);
  if (frac.values.size() > 0) {
    worst_bound = std::max(frac.values.maxCoeff() - 1.0, 0.0);
    worst_bound = std::max(worst_bound, -frac.values.minCoeff());
  }
  if (worst_cover > kResidual || worst_load > kResidual || worst_bound > kResidual) {
    std::ostringstream msg;
    msg << "LP solution failed verification: cover residual " << worst_cover
        << ", load residual " << worst_load << ", bound residual " << worst_bound;
    throw SolverFailureError(msg.str());
  }
  return frac;
}

void write_lp_format(const CoveringLP& lp, std::ostream& out) {
  auto var_name = [&](int v) {
    const CoveringLP::Pair& p = lp.vars[static_cast<std::size_t>(v)];
    return "x_" + std::to_string(p.expert) + "_" + std::to_string(p.task);
  };
  out << "Minimize\n obj: L\nSubject To\n";
  for (const CoveringLP::CoverRow& row : lp.cover_rows) {
    out << " c_t" << row.task << "_s" << row.skill << ":";
    for (std::size_t i = 0; i < row.vars.size(); ++i)
      out << (i == 0 ? " " : " + ") << var_name(row.vars[i]);
    out << " >= 1\n";
  }
  for (int j = 0; j < lp.num_experts; ++j) {
    const auto& vars = lp.expert_vars[static_cast<std::size_t>(j)];
    if (vars.empty()) continue;
    out << " l_e" << j << ":";
    for (std::size_t i = 0; i < vars.size(); ++i)
      out << (i == 0 ? " " : " + ") << var_name(vars[i]);
    out << " - L <= 0\n";
  }
  out << "Bounds\n";
  for (std::size_t v = 0; v < lp.vars.size(); ++v)
    out << " 0 <= " << var_name(static_cast<int>(v)) << " <= 1\n";
  out << " L >= 0\nEnd\n";
}

}  // namespace teamfit
