#include "pmx/simplex.hpp"

#include <limits>

namespace pmx {

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kMaxPivots = 100000;

template <class Num>
bool positive(const Num& a, Tolerance tol) {
  return definitely_gt(a, Num(0), tol);
}

template <class Num>
bool negative(const Num& a, Tolerance tol) {
  return definitely_lt(a, Num(0), tol);
}

// Rows 0..m-1 hold constraints, row m the reduced costs (z_j - c_j) with the
// objective value in the rhs column. Maximizing: a column may enter when its
// reduced cost is negative.
template <class Num>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1), Num(0)), basis_(rows, kNone) {}

  Num& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Num& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  Num& rhs(std::size_t r) { return at(r, cols_); }
  Num& cost(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Num inv = Num(1) / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) *= inv;
    at(r, c) = Num(1);
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const Num factor = at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (at(r, j) != 0) at(i, j) -= factor * at(r, j);
      }
      at(i, c) = Num(0);
    }
    basis_[r] = c;
    ++pivots_;
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed, Tolerance tol) {
    while (true) {
      if (pivots_ > kMaxPivots) throw std::runtime_error("simplex: pivot limit exceeded");
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && negative(cost(j), tol)) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Num best_ratio(0);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!positive(at(i, enter), tol)) continue;
        Num ratio = rhs(i) / at(i, enter);
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  // Sets the cost row for objective `c` (indexed by column) given the basis.
  void price_out(const std::vector<Num>& c) {
    for (std::size_t j = 0; j <= cols_; ++j) cost(j) = j < cols_ ? Num(-c[j]) : Num(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Num& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost(j) += cb * at(i, j);
    }
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Num> cells_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

template <class Num>
LpSolution<Num> solve_lp(const LinearProgram<Num>& lp, Tolerance tol) {
  LpSolution<Num> solution;
  const std::size_t nvars = lp.variables();

  // Presolve: drop variables fixed at zero, turn other upper bounds into rows.
  std::vector<std::size_t> column_of(nvars, kNone);
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < nvars; ++v) {
    const auto& ub = lp.upper_bounds()[v];
    if (ub && negative(*ub, tol)) return solution;
    if (ub && !positive(*ub, tol)) continue;
    column_of[v] = active.size();
    active.push_back(v);
  }

  struct Prepared {
    std::vector<Num> coefficients;  // over active columns
    Relation relation;
    Num rhs;
  };
  std::vector<Prepared> prepared;
  auto add_row = [&](std::vector<Num> coeffs, Relation relation, Num rhs) -> bool {
    bool empty = true;
    for (const Num& a : coeffs) {
      if (a != 0) empty = false;
    }
    if (empty) {
      const bool ok = relation == Relation::kLessEqual      ? approx_ge(rhs, Num(0), tol)
                      : relation == Relation::kGreaterEqual ? approx_le(rhs, Num(0), tol)
                                                            : is_zero(rhs, tol);
      return ok;
    }
    if (rhs < 0) {
      for (Num& a : coeffs) a = -a;
      rhs = -rhs;
      if (relation == Relation::kLessEqual) relation = Relation::kGreaterEqual;
      else if (relation == Relation::kGreaterEqual) relation = Relation::kLessEqual;
    }
    prepared.push_back({std::move(coeffs), relation, std::move(rhs)});
    return true;
  };
  for (const auto& row : lp.rows()) {
    std::vector<Num> coeffs(active.size(), Num(0));
    for (std::size_t v = 0; v < nvars; ++v) {
      if (column_of[v] != kNone) coeffs[column_of[v]] = row.coefficients[v];
    }
    if (!add_row(std::move(coeffs), row.relation, row.rhs)) return solution;
  }
  for (std::size_t c = 0; c < active.size(); ++c) {
    const auto& ub = lp.upper_bounds()[active[c]];
    if (!ub) continue;
    std::vector<Num> coeffs(active.size(), Num(0));
    coeffs[c] = Num(1);
    add_row(std::move(coeffs), Relation::kLessEqual, *ub);
  }

  const std::size_t m = prepared.size();
  const std::size_t structural = active.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : prepared) {
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
  }
  const std::size_t first_slack = structural;
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t cols = first_artificial + artificial_count;

  Tableau<Num> tableau(m, cols);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = prepared[i];
    for (std::size_t c = 0; c < structural; ++c) tableau.at(i, c) = row.coefficients[c];
    tableau.rhs(i) = row.rhs;
    switch (row.relation) {
      case Relation::kLessEqual:
        tableau.at(i, next_slack) = Num(1);
        tableau.basis()[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        tableau.at(i, next_slack++) = Num(-1);
        tableau.at(i, next_artificial) = Num(1);
        tableau.basis()[i] = next_artificial++;
        break;
      case Relation::kEqual:
        tableau.at(i, next_artificial) = Num(1);
        tableau.basis()[i] = next_artificial++;
        break;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (artificial_count > 0) {
    std::vector<Num> phase_one(cols, Num(0));
    for (std::size_t c = first_artificial; c < cols; ++c) phase_one[c] = Num(-1);
    tableau.price_out(phase_one);
    tableau.optimize(allowed, tol);
    if (negative(tableau.rhs(m), tol)) {
      solution.pivots = tableau.pivots();
      return solution;
    }
    // Pivot zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and stay inert.
    for (std::size_t i = 0; i < m; ++i) {
      if (tableau.basis()[i] < first_artificial) continue;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (!is_zero(tableau.at(i, c), tol)) {
          tableau.pivot(i, c);
          break;
        }
      }
    }
    for (std::size_t c = first_artificial; c < cols; ++c) allowed[c] = false;
  }

  std::vector<Num> phase_two(cols, Num(0));
  for (std::size_t c = 0; c < structural; ++c) phase_two[c] = lp.objective()[active[c]];
  tableau.price_out(phase_two);
  const bool bounded = tableau.optimize(allowed, tol);
  solution.pivots = tableau.pivots();
  if (!bounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.values.assign(nvars, Num(0));
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t c = tableau.basis()[i];
    if (c < structural) solution.values[active[c]] = tableau.rhs(i);
  }
  Num objective(0);
  for (std::size_t v = 0; v < nvars; ++v) objective += lp.objective()[v] * solution.values[v];
  solution.objective = objective;
  return solution;
}

template LpSolution<Rational> solve_lp(const LinearProgram<Rational>&, Tolerance);
template LpSolution<double> solve_lp(const LinearProgram<double>&, Tolerance);

}  // namespace pmx
