#include "pmx/demand.hpp"

#include <algorithm>

namespace pmx {

bool DemandedGoods::contains(std::size_t i) const {
  return std::binary_search(goods_.begin(), goods_.end(), i);
}

bool DemandedGoods::includes(const DemandedGoods& other) const {
  return std::includes(goods_.begin(), goods_.end(), other.goods_.begin(), other.goods_.end());
}

template <class Num>
DemandedGoods demanded_goods(const Bid<Num>& bid, const PriceVector<Num>& p, Tolerance tol) {
  const std::size_t n = p.goods();
  std::vector<std::size_t> goods;
  for (std::size_t i = 0; i <= n; ++i) {
    const Num bi = bid.value(i);
    const Num pi = p.at(i);
    bool best = true;
    for (std::size_t j = 0; j <= n && best; ++j) {
      if (j != i && !approx_ge(Num(bi * p.at(j)), Num(bid.value(j) * pi), tol)) best = false;
    }
    if (best) goods.push_back(i);
  }
  return DemandedGoods(std::move(goods));
}

template <class Num>
std::vector<Bundle<Num>> demand_vertices(const Bid<Num>& bid, const PriceVector<Num>& p,
                                         Tolerance tol) {
  std::vector<Bundle<Num>> vertices;
  for (std::size_t i : demanded_goods(bid, p, tol)) {
    Bundle<Num> v(p.goods());
    if (i != 0) v.amount(i) = bid.budget() / p.at(i);
    vertices.push_back(std::move(v));
  }
  return vertices;
}

template <class Num>
bool in_demand_set(const Bid<Num>& bid, const PriceVector<Num>& p, const Bundle<Num>& x,
                   Tolerance tol) {
  const DemandedGoods goods = demanded_goods(bid, p, tol);
  Num spent(0);
  for (std::size_t i = 1; i <= p.goods(); ++i) {
    const Num& xi = x.amount(i);
    if (!approx_ge(xi, Num(0), tol)) return false;
    if (!goods.contains(i) && !is_zero(xi, tol)) return false;
    spent += xi * p.at(i);
  }
  if (!approx_le(spent, bid.budget(), tol)) return false;
  return goods.contains_dummy() || approx_eq(spent, bid.budget(), tol);
}

template <class Num>
Num max_single_good_utility(const Bid<Num>& bid, const PriceVector<Num>& p) {
  Num best(0);
  for (std::size_t i = 1; i <= p.goods(); ++i) {
    Num u = bid.budget() / p.at(i) * (bid.value(i) - p.at(i));
    if (u > best) best = u;
  }
  return best;
}

template <class Num>
Num utility(const Bid<Num>& bid, const PriceVector<Num>& p, const Bundle<Num>& x) {
  Num u(0);
  for (std::size_t i = 1; i <= p.goods(); ++i) u += (bid.value(i) - p.at(i)) * x.amount(i);
  return u;
}

template <class Num>
std::vector<std::size_t> undemanded_goods(const AuctionInstance<Num>& instance,
                                          const PriceVector<Num>& p) {
  std::vector<bool> demanded(instance.goods + 1, false);
  for (const auto& bid : instance.bids) {
    for (std::size_t i : demanded_goods(bid, p, instance.tolerance)) demanded[i] = true;
  }
  std::vector<std::size_t> missing;
  for (std::size_t k = 1; k <= instance.goods; ++k) {
    if (!demanded[k]) missing.push_back(k);
  }
  return missing;
}

template <class Num>
PriceVector<Num> saturate_prices(const AuctionInstance<Num>& instance, const PriceVector<Num>& p) {
  PriceVector<Num> lifted = p;
  for (std::size_t round = 0; round < instance.goods; ++round) {
    const auto missing = undemanded_goods(instance, lifted);
    if (missing.empty()) break;
    const std::size_t k = missing.front();
    bool found = false;
    Num target(0);
    for (const auto& bid : instance.bids) {
      for (std::size_t i : demanded_goods(bid, lifted, instance.tolerance)) {
        // Every demanded good has b_i > 0 because the dummy ratio is 1; the
        // guard only matters for relaxed, unvalidated instances.
        if (is_zero(bid.value(i))) continue;
        Num candidate = bid.value(k) / bid.value(i) * lifted.at(i);
        if (!found || candidate > target) {
          target = candidate;
          found = true;
        }
      }
    }
    // A good nobody values cannot be made demanded at a positive price.
    if (!found || !(target > 0)) break;
    lifted.set(k, target);
  }
  return lifted;
}

#define PMX_INSTANTIATE_DEMAND(Num)                                                               \
  template DemandedGoods demanded_goods(const Bid<Num>&, const PriceVector<Num>&, Tolerance);     \
  template std::vector<Bundle<Num>> demand_vertices(const Bid<Num>&, const PriceVector<Num>&,     \
                                                    Tolerance);                                   \
  template bool in_demand_set(const Bid<Num>&, const PriceVector<Num>&, const Bundle<Num>&,       \
                              Tolerance);                                                         \
  template Num max_single_good_utility(const Bid<Num>&, const PriceVector<Num>&);                 \
  template Num utility(const Bid<Num>&, const PriceVector<Num>&, const Bundle<Num>&);             \
  template std::vector<std::size_t> undemanded_goods(const AuctionInstance<Num>&,                 \
                                                     const PriceVector<Num>&);                    \
  template PriceVector<Num> saturate_prices(const AuctionInstance<Num>&, const PriceVector<Num>&);

PMX_INSTANTIATE_DEMAND(Rational)
PMX_INSTANTIATE_DEMAND(double)

}  // namespace pmx
