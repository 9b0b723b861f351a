#include "ckc/lp.hpp"

#include <stdexcept>

#include "ckc/errors.hpp"

namespace ckc::lp {

LinearProgram::LinearProgram(int num_variables, Sense sense)
    : sense_(sense),
      lower_(static_cast<std::size_t>(num_variables), Rational(0)),
      upper_(static_cast<std::size_t>(num_variables)),
      cost_(static_cast<std::size_t>(num_variables)) {}

void LinearProgram::set_bounds(int var, std::optional<Rational> lower,
                               std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) {
    throw std::invalid_argument("variable lower bound exceeds upper bound");
  }
  lower_.at(var) = std::move(lower);
  upper_.at(var) = std::move(upper);
}

int LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation,
                                  Rational rhs) {
  if (static_cast<int>(coefficients.size()) != num_variables()) {
    throw std::invalid_argument("constraint length differs from variable count");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
  return num_constraints() - 1;
}

namespace {

// Structural column of the standard form: x_var = offset + sign * column.
struct Column {
  int var;
  int sign;
};

class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) { build(); }

  Outcome run() {
    Outcome out;
    // Phase 1: minimize the artificials that start in the basis.
    std::vector<Rational> phase1(static_cast<std::size_t>(cols_));
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] == artificial(i)) phase1[artificial(i)] = 1;
    }
    price(phase1);
    iterate(/*allow_artificial=*/false);
    if (sgn(reduced_[cols_]) != 0) {
      out.status = Status::kInfeasible;
      out.farkas.resize(lp_.num_constraints());
      for (int i = 0; i < lp_.num_constraints(); ++i) {
        out.farkas[i] = row_sign_[i] * (phase1[artificial(i)] - reduced_[artificial(i)]);
      }
      out.pivots = pivots_;
      return out;
    }
    evict_artificials();

    std::vector<Rational> phase2(static_cast<std::size_t>(cols_));
    const int flip = lp_.sense() == Sense::kMaximize ? -1 : 1;
    for (int c = 0; c < structural_; ++c) {
      phase2[c] = flip * columns_[c].sign * lp_.cost(columns_[c].var);
    }
    price(phase2);
    if (!iterate(/*allow_artificial=*/false)) {
      out.status = Status::kUnbounded;
      out.pivots = pivots_;
      return out;
    }

    out.status = Status::kOptimal;
    std::vector<Rational> value(static_cast<std::size_t>(cols_));
    for (int i = 0; i < rows_; ++i) value[basis_[i]] = at(i, cols_);
    out.solution = offset_;
    for (int c = 0; c < structural_; ++c) {
      if (sgn(value[c]) != 0) out.solution[columns_[c].var] += columns_[c].sign * value[c];
    }
    out.objective = 0;
    for (int j = 0; j < lp_.num_variables(); ++j) out.objective += lp_.cost(j) * out.solution[j];
    out.duals.resize(lp_.num_constraints());
    for (int i = 0; i < lp_.num_constraints(); ++i) {
      out.duals[i] = -flip * row_sign_[i] * reduced_[artificial(i)];
    }
    out.pivots = pivots_;
    return out;
  }

 private:
  Rational& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * (cols_ + 1) + j]; }
  int artificial(int row) const { return first_artificial_ + row; }

  void build() {
    const int n = lp_.num_variables();
    offset_.assign(n, Rational(0));
    std::vector<int> bounded;  // structural columns that need an explicit upper-bound row
    std::vector<Rational> bound_width;
    std::vector<std::vector<int>> columns_of(n);
    for (int j = 0; j < n; ++j) {
      const auto& lo = lp_.lower(j);
      const auto& up = lp_.upper(j);
      if (lo) {
        offset_[j] = *lo;
        columns_of[j].push_back(static_cast<int>(columns_.size()));
        columns_.push_back({j, 1});
        if (up) {
          bounded.push_back(static_cast<int>(columns_.size()) - 1);
          bound_width.push_back(*up - *lo);
        }
      } else if (up) {
        offset_[j] = *up;
        columns_of[j].push_back(static_cast<int>(columns_.size()));
        columns_.push_back({j, -1});
      } else {
        columns_of[j].push_back(static_cast<int>(columns_.size()));
        columns_.push_back({j, 1});
        columns_of[j].push_back(static_cast<int>(columns_.size()));
        columns_.push_back({j, -1});
      }
    }
    structural_ = static_cast<int>(columns_.size());

    const int m0 = lp_.num_constraints();
    rows_ = m0 + static_cast<int>(bounded.size());
    std::vector<Relation> relation(rows_, Relation::kLessEqual);
    int slacks = 0;
    for (int i = 0; i < m0; ++i) {
      relation[i] = lp_.constraint(i).relation;
      if (relation[i] != Relation::kEqual) ++slacks;
    }
    slacks += static_cast<int>(bounded.size());
    first_slack_ = structural_;
    first_artificial_ = structural_ + slacks;
    cols_ = first_artificial_ + rows_;
    cells_.assign(static_cast<std::size_t>(rows_) * (cols_ + 1), Rational(0));
    row_sign_.assign(rows_, 1);
    basis_.assign(rows_, 0);

    int slack = first_slack_;
    for (int i = 0; i < rows_; ++i) {
      int slack_col = -1;
      if (i < m0) {
        const auto& con = lp_.constraint(i);
        Rational rhs = con.rhs;
        for (int j = 0; j < n; ++j) {
          const Rational& a = con.coefficients[j];
          if (sgn(a) == 0) continue;
          rhs -= a * offset_[j];
          for (int c : columns_of[j]) at(i, c) = columns_[c].sign * a;
        }
        at(i, cols_) = rhs;
      } else {
        const int b = i - m0;
        at(i, bounded[b]) = 1;
        at(i, cols_) = bound_width[b];
      }
      if (relation[i] != Relation::kEqual) {
        slack_col = slack++;
        at(i, slack_col) = relation[i] == Relation::kLessEqual ? 1 : -1;
      }
      if (sgn(at(i, cols_)) < 0) {
        row_sign_[i] = -1;
        for (int c = 0; c <= cols_; ++c) {
          if (sgn(at(i, c)) != 0) at(i, c) = -at(i, c);
        }
      }
      at(i, artificial(i)) = 1;
      // A slack with coefficient +1 (after normalization) is a ready basic column.
      basis_[i] = (slack_col >= 0 && at(i, slack_col) == 1) ? slack_col : artificial(i);
    }
  }

  void price(const std::vector<Rational>& cost) {
    reduced_.assign(static_cast<std::size_t>(cols_ + 1), Rational(0));
    for (int c = 0; c < cols_; ++c) reduced_[c] = cost[c];
    for (int i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (sgn(at(i, c)) != 0) reduced_[c] -= cb * at(i, c);
      }
    }
  }

  void pivot(int r, int c) {
    ++pivots_;
    const Rational piv = at(r, c);
    nonzero_.clear();
    for (int j = 0; j <= cols_; ++j) {
      if (sgn(at(r, j)) != 0) {
        at(r, j) /= piv;
        nonzero_.push_back(j);
      }
    }
    Rational factor;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      factor = at(i, c);
      for (int j : nonzero_) at(i, j) -= factor * at(r, j);
    }
    if (sgn(reduced_[c]) != 0) {
      factor = reduced_[c];
      for (int j : nonzero_) reduced_[j] -= factor * at(r, j);
    }
    basis_[r] = c;
  }

  // Bland's rule. Returns false on unboundedness.
  bool iterate(bool allow_artificial) {
    const int limit = allow_artificial ? cols_ : first_artificial_;
    Rational best_ratio;
    Rational ratio;
    for (;;) {
      int enter = -1;
      for (int c = 0; c < limit; ++c) {
        if (sgn(reduced_[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      for (int i = 0; i < rows_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        ratio = at(i, cols_) / at(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  // After a successful phase 1 every artificial still basic sits at zero.
  // Swap it for any non-artificial column with a nonzero entry in its row;
  // if there is none the row is redundant and stays inert.
  void evict_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      CKC_ENSURE(sgn(at(i, cols_)) == 0, "artificial variable positive after phase 1");
      for (int c = 0; c < first_artificial_; ++c) {
        if (sgn(at(i, c)) != 0) {
          pivot(i, c);
          break;
        }
      }
    }
  }

  const LinearProgram& lp_;
  std::vector<Column> columns_;
  std::vector<Rational> offset_;
  int structural_ = 0;
  int first_slack_ = 0;
  int first_artificial_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> cells_;
  std::vector<int> row_sign_;
  std::vector<int> basis_;
  std::vector<Rational> reduced_;
  std::vector<int> nonzero_;
  long pivots_ = 0;
};

Rational row_activity(const Constraint& con, std::span<const Rational> x) {
  Rational total = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(con.coefficients[j]) != 0) total += con.coefficients[j] * x[j];
  }
  return total;
}

// Sign a multiplier must have for `relation` when the implied inequality is
// read as ">=": +1 means y >= 0, -1 means y <= 0, 0 means free.
int required_sign(Relation relation) {
  switch (relation) {
    case Relation::kGreaterEqual:
      return 1;
    case Relation::kLessEqual:
      return -1;
    case Relation::kEqual:
      return 0;
  }
  return 0;
}

}  // namespace

Outcome solve(const LinearProgram& lp) {
  Simplex simplex(lp);
  return simplex.run();
}

std::optional<Violation> check_point(const LinearProgram& lp, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != lp.num_variables()) {
    throw std::invalid_argument("point length differs from variable count");
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.lower(j) && point[j] < *lp.lower(j)) {
      return Violation{Violation::Kind::kLowerBound, j, Relation::kGreaterEqual};
    }
    if (lp.upper(j) && point[j] > *lp.upper(j)) {
      return Violation{Violation::Kind::kUpperBound, j, Relation::kLessEqual};
    }
  }
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const auto& con = lp.constraint(i);
    const Rational lhs = row_activity(con, point);
    const bool too_big = lhs > con.rhs;
    const bool too_small = lhs < con.rhs;
    if (too_big && con.relation != Relation::kGreaterEqual) {
      return Violation{Violation::Kind::kConstraint, i, Relation::kLessEqual};
    }
    if (too_small && con.relation != Relation::kLessEqual) {
      return Violation{Violation::Kind::kConstraint, i, Relation::kGreaterEqual};
    }
  }
  return std::nullopt;
}

bool proves_infeasible(const LinearProgram& lp, std::span<const Rational> multipliers) {
  if (static_cast<int>(multipliers.size()) != lp.num_constraints()) return false;
  const int n = lp.num_variables();
  std::vector<Rational> combined(static_cast<std::size_t>(n));
  Rational rhs = 0;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const Rational& y = multipliers[i];
    const auto& con = lp.constraint(i);
    const int need = required_sign(con.relation);
    if (need != 0 && sgn(y) * need < 0) return false;
    if (sgn(y) == 0) continue;
    rhs += y * con.rhs;
    for (int j = 0; j < n; ++j) {
      if (sgn(con.coefficients[j]) != 0) combined[j] += y * con.coefficients[j];
    }
  }
  Rational best = 0;  // max of combined . x over the box
  for (int j = 0; j < n; ++j) {
    const int s = sgn(combined[j]);
    if (s == 0) continue;
    const auto& bound = s > 0 ? lp.upper(j) : lp.lower(j);
    if (!bound) return false;
    best += combined[j] * *bound;
  }
  return best < rhs;
}

std::optional<Rational> dual_value(const LinearProgram& lp, std::span<const Rational> duals) {
  if (static_cast<int>(duals.size()) != lp.num_constraints()) return std::nullopt;
  const int flip = lp.sense() == Sense::kMaximize ? -1 : 1;
  const int n = lp.num_variables();
  std::vector<Rational> reduced(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) reduced[j] = lp.cost(j);
  Rational value = 0;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const auto& con = lp.constraint(i);
    const Rational& y = duals[i];
    const int need = required_sign(con.relation) * flip;
    if (need != 0 && sgn(y) * need < 0) return std::nullopt;
    if (sgn(y) == 0) continue;
    value += y * con.rhs;
    for (int j = 0; j < n; ++j) {
      if (sgn(con.coefficients[j]) != 0) reduced[j] -= y * con.coefficients[j];
    }
  }
  for (int j = 0; j < n; ++j) {
    const int s = sgn(reduced[j]) * flip;
    if (s == 0) continue;
    // Minimizing picks the lower bound for a positive reduced cost; maximizing
    // mirrors that.
    const auto& bound = s > 0 ? lp.lower(j) : lp.upper(j);
    if (!bound) return std::nullopt;
    value += reduced[j] * *bound;
  }
  return value;
}

}  // namespace ckc::lp
