#include "pmx/allocation.hpp"

#include <stdexcept>

#include "pmx/demand.hpp"
#include "pmx/parallel.hpp"

namespace pmx {

template <class Num>
AllocationLp<Num> build_allocation_lp(const AuctionInstance<Num>& instance,
                                      const PriceVector<Num>& p) {
  const std::size_t n = instance.goods;
  AllocationLayout layout{instance.bids.size(), n};
  LinearProgram<Num> lp(layout.variables());
  const std::size_t vars = layout.variables();

  for (std::size_t b = 0; b < layout.bids; ++b) {
    for (std::size_t i = 1; i <= n; ++i) lp.set_objective(layout.bid_var(b, i), p.at(i));
  }
  for (std::size_t i = 1; i <= n; ++i) lp.set_objective(layout.epigraph_var(i), Num(-1));

  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Num> row(vars, Num(0));
    row[layout.aggregate_var(i)] = Num(1);
    for (std::size_t b = 0; b < layout.bids; ++b) row[layout.bid_var(b, i)] = Num(-1);
    lp.add_constraint(std::move(row), Relation::kEqual, Num(0), "aggregate " + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Num> row(vars, Num(0));
    row[layout.aggregate_var(i)] = Num(1);
    lp.add_constraint(std::move(row), Relation::kLessEqual, instance.cost.curve(i).capacity(),
                      "capacity " + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& curve = instance.cost.curve(i);
    Num covered(0);  // cost of all steps before r
    for (std::size_t r = 0; r < curve.steps().size(); ++r) {
      const Num& mu = curve.steps()[r].marginal;
      const Num start = curve.step_start(r);
      // t_i - mu x_i >= covered - mu e^r
      std::vector<Num> row(vars, Num(0));
      row[layout.epigraph_var(i)] = Num(1);
      row[layout.aggregate_var(i)] = -mu;
      lp.add_constraint(std::move(row), Relation::kGreaterEqual, covered - mu * start,
                        "epigraph " + std::to_string(i) + "/" + std::to_string(r + 1));
      covered += mu * (curve.steps()[r].until - start);
    }
  }
  for (std::size_t b = 0; b < layout.bids; ++b) {
    const auto& bid = instance.bids[b];
    std::vector<Num> row(vars, Num(0));
    for (std::size_t i = 1; i <= n; ++i) row[layout.bid_var(b, i)] = bid.value(i) - p.at(i);
    lp.add_constraint(std::move(row), Relation::kGreaterEqual, max_single_good_utility(bid, p),
                      "demand " + bid.id());
  }
  for (std::size_t b = 0; b < layout.bids; ++b) {
    const auto& bid = instance.bids[b];
    std::vector<Num> row(vars, Num(0));
    for (std::size_t i = 1; i <= n; ++i) row[layout.bid_var(b, i)] = p.at(i);
    lp.add_constraint(std::move(row), Relation::kLessEqual, bid.budget(), "budget " + bid.id());
  }
  for (std::size_t b = 0; b < layout.bids; ++b) {
    const DemandedGoods goods = demanded_goods(instance.bids[b], p, instance.tolerance);
    for (std::size_t i = 1; i <= n; ++i) {
      if (!goods.contains(i)) lp.set_upper_bound(layout.bid_var(b, i), Num(0));
    }
  }
  return {std::move(lp), layout};
}

namespace {

template <class Num>
void check_price(const AuctionInstance<Num>& instance, const PriceVector<Num>& p) {
  if (p.goods() != instance.goods)
    throw std::invalid_argument("price has " + std::to_string(p.goods()) + " coordinates, expected " +
                                std::to_string(instance.goods));
  if (!p.all_positive()) throw std::invalid_argument("prices must be strictly positive");
}

template <class Num>
Num snap(const Num& value, Tolerance tol) {
  if constexpr (NumTraits<Num>::kExact) {
    return value;
  } else {
    return is_zero(value, tol) ? Num(0) : value;
  }
}

}  // namespace

template <class Num>
ClearingResult<Num> revenue_at(const AuctionInstance<Num>& instance, const PriceVector<Num>& p) {
  check_price(instance, p);
  ClearingResult<Num> result;
  result.price = p;
  const auto built = build_allocation_lp(instance, p);
  const auto solution = solve_lp(built.program, instance.tolerance);
  if (solution.status == LpStatus::kUnbounded)
    throw std::logic_error("allocation LP unbounded; budgets and capacities should bound it");
  if (solution.status != LpStatus::kOptimal) return result;

  const std::size_t n = instance.goods;
  result.aggregate = Bundle<Num>(n);
  Num payments(0);
  for (std::size_t b = 0; b < instance.bids.size(); ++b) {
    Bundle<Num> bundle(n);
    for (std::size_t i = 1; i <= n; ++i) {
      bundle.amount(i) = snap(solution.values[built.layout.bid_var(b, i)], instance.tolerance);
      result.aggregate.amount(i) += bundle.amount(i);
      payments += p.at(i) * bundle.amount(i);
    }
    result.allocation.push_back({instance.bids[b].id(), std::move(bundle)});
  }
  const auto cost = cost_value(instance.cost, result.aggregate, instance.tolerance);
  if (!cost) throw std::logic_error("allocation LP exceeded a capacity");
  result.revenue = payments - *cost;
  return result;
}

template <class Num>
AuctionSolution<Num> solve_auction(const AuctionInstance<Num>& instance,
                                   EnumerationOptions options) {
  AuctionSolution<Num> out;
  out.candidates = filtered_prices(instance, options);
  const auto& candidates = out.candidates.candidates;
  std::vector<ClearingResult<Num>> results(candidates.size());
  parallel_chunks(candidates.size(), worker_count(options.threads),
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t c = begin; c < end; ++c)
                      results[c] = revenue_at(instance, candidates[c].price);
                  });

  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < results.size(); ++c) {
    out.revenues.push_back(results[c].revenue);
    if (!results[c].feasible()) continue;
    // Candidates are sorted by price, so keeping the first of equal
    // revenues implements the lexicographic tie-break.
    if (!best || definitely_gt(*results[c].revenue, *results[*best].revenue, instance.tolerance))
      best = c;
  }
  if (!best) throw std::logic_error("no candidate price admits an envy-free allocation");
  out.best = std::move(results[*best]);
  return out;
}

#define PMX_INSTANTIATE_ALLOCATION(Num)                                                           \
  template AllocationLp<Num> build_allocation_lp(const AuctionInstance<Num>&,                     \
                                                 const PriceVector<Num>&);                        \
  template ClearingResult<Num> revenue_at(const AuctionInstance<Num>&, const PriceVector<Num>&);  \
  template AuctionSolution<Num> solve_auction(const AuctionInstance<Num>&, EnumerationOptions);

PMX_INSTANTIATE_ALLOCATION(Rational)
PMX_INSTANTIATE_ALLOCATION(double)

}  // namespace pmx
