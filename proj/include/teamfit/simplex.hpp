#pragma once

#include <Eigen/Dense>
#include <limits>
#include <utility>
#include <vector>

namespace teamfit {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

// One linear constraint: sum of (variable, coefficient) terms <sense> rhs.
struct LpConstraint {
  enum class Sense { LessEqual, GreaterEqual, Equal };
  std::vector<std::pair<int, double>> terms;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

// min objective' x  subject to the constraints and 0 <= x_i <= upper_i.
struct LinearProgram {
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;
  std::vector<double> upper;  // per variable; kInfinity when unbounded above
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
};

class LpSolver {
 public:
  virtual ~LpSolver() = default;
  virtual LpSolution solve(const LinearProgram& lp) const = 0;
};

// Bundled exact method: dense two-phase tableau simplex using Bland's rule,
// sized for desk-scale programs (a few thousand variables).
class DenseSimplexSolver final : public LpSolver {
 public:
  LpSolution solve(const LinearProgram& lp) const override;
};

}  // namespace teamfit
