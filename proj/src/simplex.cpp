#include "teamfit/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace teamfit {
namespace {

constexpr double kTol = 1e-9;
constexpr double kFeasTol = 1e-7;

struct Row {
  std::vector<std::pair<int, double>> terms;
  LpConstraint::Sense sense;
  double rhs;
};

struct Tableau {
  // Row-major: pivoting is row arithmetic, which then runs on contiguous
  // memory.
  using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Mat a;                   // rows x (cols + 1); last column holds the rhs
  Eigen::RowVectorXd obj;  // reduced costs; last entry is -(objective value)
  std::vector<int> basis;  // basic column per row
  int cols = 0;

  void pivot(int r, int c) {
    a.row(r) /= a(r, c);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const double f = a(i, c);
      if (f != 0.0) a.row(i) -= f * a.row(r);
    }
    const double f = obj(c);
    if (f != 0.0) obj -= f * a.row(r);
    basis[static_cast<std::size_t>(r)] = c;
  }

  void set_objective(const Eigen::RowVectorXd& cost) {
    obj.setZero(cols + 1);
    obj.head(cols) = cost;
    for (int r = 0; r < a.rows(); ++r) {
      const double cb = cost(basis[static_cast<std::size_t>(r)]);
      if (cb != 0.0) obj -= cb * a.row(r);
    }
  }

  double value() const { return -obj(cols); }

  // Dantzig rule by default; Bland's lowest-index rule when asked (engaged
  // after a degenerate stall, which restores the termination guarantee).
  int entering(int first_artificial, bool bland) const {
    const int limit = first_artificial < 0 ? cols : first_artificial;
    int best = -1;
    for (int c = 0; c < limit; ++c) {
      if (obj(c) >= -kTol) continue;
      if (bland) return c;
      if (best < 0 || obj(c) < obj(best)) best = c;
    }
    return best;
  }

  // Min-ratio row, ties to the smallest basic index (Bland).
  int leaving(int c) const {
    int best = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
      if (a(r, c) <= kTol) continue;
      const double ratio = a(r, cols) / a(r, c);
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(best)])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }
};

}  // namespace

LpSolution DenseSimplexSolver::solve(const LinearProgram& lp) const {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars ||
      static_cast<int>(lp.upper.size()) != lp.num_vars)
    throw std::invalid_argument("linear program shape mismatch");

  // Normalize to rhs >= 0 and expand finite upper bounds into rows.
  std::vector<Row> rows;
  rows.reserve(lp.constraints.size());
  for (const LpConstraint& con : lp.constraints) {
    Row row{con.terms, con.sense, con.rhs};
    for (const auto& [v, coef] : row.terms) {
      (void)coef;
      if (v < 0 || v >= lp.num_vars) throw std::invalid_argument("constraint variable out of range");
    }
    if (row.rhs < 0.0) {
      row.rhs = -row.rhs;
      for (auto& [v, coef] : row.terms) coef = -coef;
      if (row.sense == LpConstraint::Sense::LessEqual)
        row.sense = LpConstraint::Sense::GreaterEqual;
      else if (row.sense == LpConstraint::Sense::GreaterEqual)
        row.sense = LpConstraint::Sense::LessEqual;
    }
    rows.push_back(std::move(row));
  }
  for (int v = 0; v < lp.num_vars; ++v) {
    const double u = lp.upper[static_cast<std::size_t>(v)];
    if (u == LinearProgram::kInfinity) continue;
    if (u < 0.0) return {LpStatus::Infeasible, 0.0, {}};
    rows.push_back(Row{{{v, 1.0}}, LpConstraint::Sense::LessEqual, u});
  }

  const int m = static_cast<int>(rows.size());
  int num_slack = 0, num_art = 0;
  for (const Row& row : rows) {
    if (row.sense != LpConstraint::Sense::Equal) ++num_slack;
    if (row.sense != LpConstraint::Sense::LessEqual) ++num_art;
  }

  Tableau t;
  t.cols = lp.num_vars + num_slack + num_art;
  const int first_artificial = num_art > 0 ? lp.num_vars + num_slack : -1;
  t.a.setZero(m, t.cols + 1);
  t.basis.assign(static_cast<std::size_t>(m), -1);

  int slack = lp.num_vars;
  int art = lp.num_vars + num_slack;
  for (int r = 0; r < m; ++r) {
    const Row& row = rows[static_cast<std::size_t>(r)];
    for (const auto& [v, coef] : row.terms) t.a(r, v) += coef;
    t.a(r, t.cols) = row.rhs;
    switch (row.sense) {
      case LpConstraint::Sense::LessEqual:
        t.a(r, slack) = 1.0;
        t.basis[static_cast<std::size_t>(r)] = slack++;
        break;
      case LpConstraint::Sense::GreaterEqual:
        t.a(r, slack++) = -1.0;
        t.a(r, art) = 1.0;
        t.basis[static_cast<std::size_t>(r)] = art++;
        break;
      case LpConstraint::Sense::Equal:
        t.a(r, art) = 1.0;
        t.basis[static_cast<std::size_t>(r)] = art++;
        break;
    }
  }

  const long max_iterations = 20000 + 50L * (m + t.cols);
  long iterations = 0;
  auto run = [&](int barrier) -> LpStatus {
    long stall = 0;
    double last_value = t.value();
    for (;;) {
      if (++iterations > max_iterations) return LpStatus::IterationLimit;
      const int c = t.entering(barrier, /*bland=*/stall > 200);
      if (c < 0) return LpStatus::Optimal;
      const int r = t.leaving(c);
      if (r < 0) return LpStatus::Unbounded;
      t.pivot(r, c);
      const double value = t.value();
      if (value < last_value - 1e-12) {
        stall = 0;
        last_value = value;
      } else {
        ++stall;
      }
    }
  };

  if (num_art > 0) {
    Eigen::RowVectorXd phase1 = Eigen::RowVectorXd::Zero(t.cols);
    for (int c = first_artificial; c < t.cols; ++c) phase1(c) = 1.0;
    t.set_objective(phase1);
    const LpStatus status = run(-1);
    if (status != LpStatus::Optimal) return {status, 0.0, {}};
    if (t.value() > kFeasTol) return {LpStatus::Infeasible, 0.0, {}};
    // Drive leftover artificials out of the basis; rows where no structural
    // or slack column has a nonzero coefficient are redundant and inert.
    for (int r = 0; r < m; ++r) {
      if (t.basis[static_cast<std::size_t>(r)] < first_artificial) continue;
      for (int c = 0; c < first_artificial; ++c) {
        if (std::abs(t.a(r, c)) > kTol) {
          t.pivot(r, c);
          break;
        }
      }
    }
  }

  Eigen::RowVectorXd phase2 = Eigen::RowVectorXd::Zero(t.cols);
  for (int v = 0; v < lp.num_vars; ++v) phase2(v) = lp.objective[static_cast<std::size_t>(v)];
  t.set_objective(phase2);
  const LpStatus status = run(first_artificial);
  if (status != LpStatus::Optimal) return {status, 0.0, {}};

  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.x = Eigen::VectorXd::Zero(lp.num_vars);
  for (int r = 0; r < m; ++r) {
    const int b = t.basis[static_cast<std::size_t>(r)];
    if (b < lp.num_vars) solution.x(b) = t.a(r, t.cols);
  }
  solution.objective = 0.0;
  for (int v = 0; v < lp.num_vars; ++v)
    solution.objective += lp.objective[static_cast<std::size_t>(v)] * solution.x(v);
  return solution;
}

}  // namespace teamfit
