#ifndef PMX_ORACLE_HPP_
#define PMX_ORACLE_HPP_

// Brute-force verifiers, independent of the candidate generator and of the
// simplex solver, for desk-size instances.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pmx/candidates.hpp"
#include "pmx/model.hpp"

namespace pmx {

class SizeGuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Num>
struct IntersectionWitness {
  PriceVector<Num> price;
  std::vector<IndifferencePair> pairs;
  std::size_t rank = 0;  // of the pairs' equations; equals the good count
};

// Every strictly positive point that is the unique solution of n of the
// indifference equations {(b, {i, j}) : b in B, 0 <= i < j <= n} and lies in
// all n hyperplanes. One witness per distinct price, sorted by price.
// Requires n <= 4 and |B| <= 5.
template <class Num>
std::vector<IntersectionWitness<Num>> enumerate_hyperplane_intersections(
    const AuctionInstance<Num>& instance);

// For every proper subset I of {0..n} containing 0, some pair meets I in
// exactly one index.
bool check_hyperplane_ordering(std::size_t goods, std::span<const IndifferencePair> pairs);

template <class Num>
bool check_hyperplane_ordering(const IntersectionWitness<Num>& witness) {
  return check_hyperplane_ordering(witness.price.goods(), witness.pairs);
}

template <class Num>
struct GridSearchResult {
  PriceVector<Num> price;
  std::optional<Num> revenue;  // nullopt if no grid point is feasible
  std::size_t evaluated = 0;
};

// Evaluates revenue_at on `resolution` points per axis, k/resolution * max_b b_i
// for k = 1..resolution (an axis nobody values uses 1 as its upper end).
// Only a lower bound on the optimum. Requires n <= 3 and resolution <= 100.
template <class Num>
GridSearchResult<Num> grid_search_revenue(const AuctionInstance<Num>& instance,
                                          std::size_t resolution);

// Exact r(p) without linear programming. The aggregate bundles reachable by
// envy-free allocations form the Minkowski sum of the demand simplices, i.e.
// the convex hull of sums of demand vertices. Payments equal <p, x> for the
// aggregate x, so r(p) maximizes the concave piecewise-linear <p, x> - psi(x)
// over that polygon, and the maximum sits at a vertex of its subdivision by
// the lines x_i = step end. All such vertices are enumerated.
// Returns nullopt when no envy-free allocation fits within capacity.
// Requires n <= 2 and |B| <= 3.
template <class Num>
std::optional<Num> allocation_oracle(const AuctionInstance<Num>& instance,
                                     const PriceVector<Num>& p);

}  // namespace pmx

#endif  // PMX_ORACLE_HPP_
