#ifndef PMX_DEMAND_HPP_
#define PMX_DEMAND_HPP_

// Budget-constrained demand. A bidder demands good i (0 = dummy) when b_i/p_i
// is maximal over 0..n; the demand set is the simplex spanned by the
// full-budget single-good bundles (budget/p_i) e_i over demanded goods.

#include <cstddef>
#include <vector>

#include "pmx/model.hpp"

namespace pmx {

// Sorted subset of {0, ..., n}.
class DemandedGoods {
 public:
  DemandedGoods() = default;
  explicit DemandedGoods(std::vector<std::size_t> goods) : goods_(std::move(goods)) {}

  bool contains(std::size_t i) const;
  bool contains_dummy() const { return contains(0); }
  std::size_t size() const { return goods_.size(); }
  bool empty() const { return goods_.empty(); }
  auto begin() const { return goods_.begin(); }
  auto end() const { return goods_.end(); }
  const std::vector<std::size_t>& indices() const { return goods_; }

  // True when every good of `other` is also in this set.
  bool includes(const DemandedGoods& other) const;

  friend bool operator==(const DemandedGoods&, const DemandedGoods&) = default;

 private:
  std::vector<std::size_t> goods_;
};

// {i : b_i p_j >= b_j p_i for all j in 0..n}, evaluated division-free.
template <class Num>
DemandedGoods demanded_goods(const Bid<Num>& bid, const PriceVector<Num>& p, Tolerance tol = {});

// Vertices of the demand set, one per demanded good in increasing index order.
// The dummy good contributes the zero bundle.
template <class Num>
std::vector<Bundle<Num>> demand_vertices(const Bid<Num>& bid, const PriceVector<Num>& p,
                                         Tolerance tol = {});

// Membership in the demand set via the convex weights lambda_i = x_i p_i / budget:
// x must vanish on undemanded goods, spend at most the budget, and spend all
// of it when the dummy good is not demanded.
template <class Num>
bool in_demand_set(const Bid<Num>& bid, const PriceVector<Num>& p, const Bundle<Num>& x,
                   Tolerance tol = {});

// max over i in 0..n of (budget/p_i)(b_i - p_i); never negative.
template <class Num>
Num max_single_good_utility(const Bid<Num>& bid, const PriceVector<Num>& p);

// Bidder utility <b - p, x>.
template <class Num>
Num utility(const Bid<Num>& bid, const PriceVector<Num>& p, const Bundle<Num>& x);

// Lowers the price of every good nobody demands until some bidder becomes
// indifferent between it and one of their demanded goods:
//   p_k = max_b max_{i in G^b(p), b_i > 0} (b_k / b_i) p_i.
// Goods are lifted one at a time in increasing index order, recomputing the
// demanded sets after each lift, until every real good is demanded. Demanded
// sets only grow, so at most n lifts happen.
template <class Num>
PriceVector<Num> saturate_prices(const AuctionInstance<Num>& instance, const PriceVector<Num>& p);

// Goods in 1..n demanded by nobody at p.
template <class Num>
std::vector<std::size_t> undemanded_goods(const AuctionInstance<Num>& instance,
                                          const PriceVector<Num>& p);

}  // namespace pmx

#endif  // PMX_DEMAND_HPP_
