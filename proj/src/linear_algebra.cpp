#include "pmx/linear_algebra.hpp"

#include <cmath>
#include <utility>

namespace pmx {

namespace {

// Partial pivoting for doubles; any nonzero pivot for exact arithmetic.
template <class Num>
std::optional<std::size_t> pick_pivot(const DenseMatrix<Num>& a, std::size_t row, std::size_t col,
                                      Tolerance tol) {
  std::optional<std::size_t> best;
  for (std::size_t r = row; r < a.size(); ++r) {
    if (is_zero(a[r][col], tol)) continue;
    if constexpr (NumTraits<Num>::kExact) {
      return r;
    } else {
      if (!best || std::fabs(a[r][col]) > std::fabs(a[*best][col])) best = r;
    }
  }
  return best;
}

template <class Num>
void eliminate_below(DenseMatrix<Num>& a, std::vector<Num>* rhs, std::size_t row, std::size_t col) {
  for (std::size_t r = row + 1; r < a.size(); ++r) {
    if (a[r][col] == 0) continue;
    const Num factor = a[r][col] / a[row][col];
    for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= factor * a[row][c];
    if (rhs) (*rhs)[r] -= factor * (*rhs)[row];
  }
}

}  // namespace

template <class Num>
std::size_t matrix_rank(DenseMatrix<Num> a, Tolerance tol) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    auto pivot = pick_pivot(a, rank, col, tol);
    if (!pivot) continue;
    std::swap(a[rank], a[*pivot]);
    eliminate_below<Num>(a, nullptr, rank, col);
    ++rank;
  }
  return rank;
}

template <class Num>
std::optional<std::vector<Num>> solve_square(DenseMatrix<Num> a, std::vector<Num> rhs,
                                             Tolerance tol) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    auto pivot = pick_pivot(a, col, col, tol);
    if (!pivot) return std::nullopt;
    std::swap(a[col], a[*pivot]);
    std::swap(rhs[col], rhs[*pivot]);
    eliminate_below(a, &rhs, col, col);
  }
  std::vector<Num> x(n, Num(0));
  for (std::size_t i = n; i-- > 0;) {
    Num acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

template std::size_t matrix_rank(DenseMatrix<Rational>, Tolerance);
template std::size_t matrix_rank(DenseMatrix<double>, Tolerance);
template std::optional<std::vector<Rational>> solve_square(DenseMatrix<Rational>,
                                                           std::vector<Rational>, Tolerance);
template std::optional<std::vector<double>> solve_square(DenseMatrix<double>, std::vector<double>,
                                                         Tolerance);

}  // namespace pmx
