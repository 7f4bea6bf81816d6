#ifndef PMX_SIMPLEX_HPP_
#define PMX_SIMPLEX_HPP_

// Dense two-phase primal simplex with Bland's rule. Exact over Rational,
// tolerance-guarded over double. Meant for the desk-scale allocation LPs:
// a few dozen variables and rows.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmx/numeric.hpp"

namespace pmx {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

template <class Num>
struct LinearConstraint {
  std::vector<Num> coefficients;
  Relation relation;
  Num rhs;
  std::string label;
};

// maximize c^T x  subject to rows, 0 <= x <= upper bounds.
template <class Num>
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables)
      : objective_(variables, Num(0)), upper_(variables) {}

  std::size_t variables() const { return objective_.size(); }
  std::size_t constraints() const { return rows_.size(); }

  void set_objective(std::size_t var, Num coefficient) { objective_.at(var) = std::move(coefficient); }
  const std::vector<Num>& objective() const { return objective_; }

  void add_constraint(std::vector<Num> coefficients, Relation relation, Num rhs,
                      std::string label = {}) {
    if (coefficients.size() != variables())
      throw std::invalid_argument("constraint '" + label + "' has wrong dimension");
    rows_.push_back({std::move(coefficients), relation, std::move(rhs), std::move(label)});
  }
  const std::vector<LinearConstraint<Num>>& rows() const { return rows_; }

  void set_upper_bound(std::size_t var, Num bound) { upper_.at(var) = std::move(bound); }
  const std::vector<std::optional<Num>>& upper_bounds() const { return upper_; }

 private:
  std::vector<Num> objective_;
  std::vector<LinearConstraint<Num>> rows_;
  std::vector<std::optional<Num>> upper_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view to_string(LpStatus status);

template <class Num>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Num> values;  // empty unless optimal
  Num objective = Num(0);
  std::size_t pivots = 0;
};

// Returns an optimal basic solution, or the infeasible/unbounded status.
// Variables with an upper bound of 0 are fixed and removed before pivoting;
// other upper bounds become rows.
template <class Num>
LpSolution<Num> solve_lp(const LinearProgram<Num>& lp, Tolerance tol = {});

}  // namespace pmx

#endif  // PMX_SIMPLEX_HPP_
