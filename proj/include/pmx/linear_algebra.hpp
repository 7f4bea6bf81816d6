#ifndef PMX_LINEAR_ALGEBRA_HPP_
#define PMX_LINEAR_ALGEBRA_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "pmx/numeric.hpp"

namespace pmx {

// Row-major dense matrix.
template <class Num>
using DenseMatrix = std::vector<std::vector<Num>>;

// Rank by Gaussian elimination; exact for Rational, pivots below tol.eps are
// treated as zero for double.
template <class Num>
std::size_t matrix_rank(DenseMatrix<Num> a, Tolerance tol = {});

// Unique solution of the square system a x = rhs, or nullopt when singular.
template <class Num>
std::optional<std::vector<Num>> solve_square(DenseMatrix<Num> a, std::vector<Num> rhs,
                                             Tolerance tol = {});

}  // namespace pmx

#endif  // PMX_LINEAR_ALGEBRA_HPP_
