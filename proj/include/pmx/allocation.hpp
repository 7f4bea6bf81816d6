#ifndef PMX_ALLOCATION_HPP_
#define PMX_ALLOCATION_HPP_

// Fixed-price revenue r(p): the best seller revenue over envy-free
// allocations at price p, as a linear program over per-bid bundles, the
// aggregate bundle and the cost epigraph.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pmx/candidates.hpp"
#include "pmx/model.hpp"
#include "pmx/simplex.hpp"

namespace pmx {

// Variable layout: x^b_i for every bid and good, then the aggregate x_i, then
// the epigraph variable t_i >= sigma_i(x_i).
struct AllocationLayout {
  std::size_t bids = 0;
  std::size_t goods = 0;

  std::size_t bid_var(std::size_t bid, std::size_t good) const { return bid * goods + good - 1; }
  std::size_t aggregate_var(std::size_t good) const { return bids * goods + good - 1; }
  std::size_t epigraph_var(std::size_t good) const { return (bids + 1) * goods + good - 1; }
  std::size_t variables() const { return (bids + 2) * goods; }
};

template <class Num>
struct AllocationLp {
  LinearProgram<Num> program;
  AllocationLayout layout;
};

// maximize sum_b <p, x^b> - sum_i t_i subject to
//   (a) x_i = sum_b x^b_i
//   (b) x_i <= R_i
//   (c) t_i >= cost-so-far(r) + mu^r_i (x_i - e^r_i) for every step r
//   (d) <b - p, x^b> >= max_single_good_utility(b, p)
//   (e) <p, x^b> <= budget(b)
// Rows appear in that order. Bundle variables of goods a bid does not demand
// get an upper bound of 0; (d) and (e) already imply it.
template <class Num>
AllocationLp<Num> build_allocation_lp(const AuctionInstance<Num>& instance,
                                      const PriceVector<Num>& p);

template <class Num>
struct BidBundle {
  std::string bid_id;
  Bundle<Num> bundle;
};

template <class Num>
struct ClearingResult {
  PriceVector<Num> price;
  std::vector<BidBundle<Num>> allocation;  // in bid order
  Bundle<Num> aggregate;
  // Payments minus cost. nullopt when no envy-free allocation fits within
  // capacity (r(p) = -infinity); allocation and aggregate are then empty.
  std::optional<Num> revenue;

  bool feasible() const { return revenue.has_value(); }
};

// Solves the allocation LP. Throws std::invalid_argument for a price that is
// not strictly positive or has the wrong arity.
template <class Num>
ClearingResult<Num> revenue_at(const AuctionInstance<Num>& instance, const PriceVector<Num>& p);

template <class Num>
struct AuctionSolution {
  ClearingResult<Num> best;
  CandidateSet<Num> candidates;
  // revenues[c] = r(candidates.candidates[c].price).
  std::vector<std::optional<Num>> revenues;
};

// Evaluates r at every candidate price and returns the best one; among equal
// revenues the lexicographically smallest price wins.
template <class Num>
AuctionSolution<Num> solve_auction(const AuctionInstance<Num>& instance,
                                   EnumerationOptions options = {});

}  // namespace pmx

#endif  // PMX_ALLOCATION_HPP_
