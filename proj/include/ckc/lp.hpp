#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ckc/rational.hpp"

/// Exact rational linear programming.
///
/// solve() is a two-phase dense-tableau simplex over GMP rationals. Both the
/// entering and the leaving variable follow Bland's rule (lowest index), so
/// it cannot cycle and the result is a deterministic function of the input.
/// Every optimal solution it returns is a vertex of the feasible polyhedron.
/// Worst-case pivot counts are exponential; the intended instances are small.
namespace ckc::lp {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };
enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

class LinearProgram {
 public:
  /// Variables start with bounds [0, +inf) and zero cost.
  explicit LinearProgram(int num_variables, Sense sense = Sense::kMinimize);

  int num_variables() const { return static_cast<int>(lower_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

  /// nullopt means unbounded on that side. Throws std::invalid_argument when
  /// lower > upper.
  void set_bounds(int var, std::optional<Rational> lower, std::optional<Rational> upper);
  void set_cost(int var, Rational cost) { cost_.at(var) = std::move(cost); }
  void set_sense(Sense sense) { sense_ = sense; }

  /// Returns the constraint index. Throws std::invalid_argument when the
  /// coefficient count differs from num_variables().
  int add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);

  const std::optional<Rational>& lower(int var) const { return lower_[var]; }
  const std::optional<Rational>& upper(int var) const { return upper_[var]; }
  const Rational& cost(int var) const { return cost_[var]; }
  Sense sense() const { return sense_; }
  const Constraint& constraint(int i) const { return constraints_[i]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

 private:
  Sense sense_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Rational> cost_;
  std::vector<Constraint> constraints_;
};

struct Outcome {
  Status status = Status::kInfeasible;
  // kOptimal only: a basic optimal point, its objective value, and one dual
  // multiplier per constraint (see dual_value for the sign convention).
  std::vector<Rational> solution;
  Rational objective;
  std::vector<Rational> duals;
  // kInfeasible only: one multiplier per constraint, see proves_infeasible.
  std::vector<Rational> farkas;
  long pivots = 0;
};

Outcome solve(const LinearProgram& lp);

struct Violation {
  enum class Kind { kLowerBound, kUpperBound, kConstraint };
  Kind kind = Kind::kConstraint;
  int index = 0;  // variable index for bounds, constraint index otherwise
  // The inequality that fails at the point; for an equality row this says
  // which side was crossed.
  Relation violated = Relation::kLessEqual;
};

/// First violated bound (in variable order), then first violated constraint.
std::optional<Violation> check_point(const LinearProgram& lp, std::span<const Rational> point);

/// Multipliers y (>= 0 on >= rows, <= 0 on <= rows, free on = rows) imply
/// (sum_i y_i a_i) x >= sum_i y_i b_i for every feasible x. They certify
/// infeasibility when the maximum of the left side over the variable bounds
/// is strictly below the right side.
bool proves_infeasible(const LinearProgram& lp, std::span<const Rational> multipliers);

/// Lagrangian dual value of the given row multipliers: sum_i y_i b_i plus the
/// best value of (c - y^T A) x over the variable bounds (min over the box for
/// a minimization, max for a maximization). Multipliers must be >= 0 on rows
/// pushing against the objective (>= rows when minimizing, <= rows when
/// maximizing) and <= 0 on the others. Returns nullopt when the sign
/// conditions fail or the box term is unbounded.
std::optional<Rational> dual_value(const LinearProgram& lp, std::span<const Rational> duals);

}  // namespace ckc::lp
