#include "pmx/oracle.hpp"

#include <algorithm>
#include <array>

#include "pmx/allocation.hpp"
#include "pmx/demand.hpp"
#include "pmx/linear_algebra.hpp"

namespace pmx {

template <class Num>
std::vector<IntersectionWitness<Num>> enumerate_hyperplane_intersections(
    const AuctionInstance<Num>& instance) {
  const std::size_t n = instance.goods;
  if (n > 4 || instance.bids.size() > 5)
    throw SizeGuardExceeded("hyperplane enumeration is limited to n <= 4 and |B| <= 5");

  std::vector<IndifferencePair> all_pairs;
  for (std::size_t b = 0; b < instance.bids.size(); ++b) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) all_pairs.push_back({b, i, j});
    }
  }

  std::vector<IntersectionWitness<Num>> found;
  std::vector<std::size_t> pick(n);
  for (std::size_t k = 0; k < n; ++k) pick[k] = k;
  if (all_pairs.size() < n) return found;
  while (true) {
    DenseMatrix<Num> a;
    std::vector<Num> rhs;
    std::vector<IndifferencePair> pairs;
    for (std::size_t idx : pick) {
      const auto& pair = all_pairs[idx];
      auto eq = indifference_equation(instance.bids[pair.bid], pair.first, pair.second);
      rhs.push_back(-eq[0]);
      a.emplace_back(eq.begin() + 1, eq.end());
      pairs.push_back(pair);
    }
    if (auto solution = solve_square(a, rhs, instance.tolerance)) {
      PriceVector<Num> price(std::move(*solution));
      bool ok = price.all_positive();
      for (std::size_t k = 0; ok && k < n; ++k) ok = hyperplane_contains(instance, pairs[k], price);
      if (ok) {
        const bool seen = std::any_of(found.begin(), found.end(), [&](const auto& w) {
          for (std::size_t g = 1; g <= n; ++g) {
            if (!approx_eq(w.price.at(g), price.at(g), instance.tolerance)) return false;
          }
          return true;
        });
        if (!seen) {
          const std::size_t rank = matrix_rank(a, instance.tolerance);
          found.push_back({std::move(price), std::move(pairs), rank});
        }
      }
    }
    // Next n-combination of pair indices in lexicographic order.
    std::size_t pos = n;
    while (pos > 0 && pick[pos - 1] == all_pairs.size() - n + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t k = pos; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.price < y.price; });
  return found;
}

bool check_hyperplane_ordering(std::size_t goods, std::span<const IndifferencePair> pairs) {
  // Subsets {0} u S with S a proper subset of {1..n}, S as a bitmask.
  const std::size_t full = (std::size_t{1} << goods) - 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    auto member = [&](std::size_t g) { return g == 0 || ((mask >> (g - 1)) & 1) != 0; };
    const bool split = std::any_of(pairs.begin(), pairs.end(), [&](const IndifferencePair& p) {
      return member(p.first) != member(p.second);
    });
    if (!split) return false;
  }
  return true;
}

template <class Num>
GridSearchResult<Num> grid_search_revenue(const AuctionInstance<Num>& instance,
                                          std::size_t resolution) {
  const std::size_t n = instance.goods;
  if (n > 3 || resolution > 100 || resolution == 0)
    throw SizeGuardExceeded("grid search is limited to n <= 3 and 1 <= resolution <= 100");

  std::vector<Num> upper(n + 1, Num(0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto& bid : instance.bids) {
      if (bid.value(i) > upper[i]) upper[i] = bid.value(i);
    }
    if (upper[i] == 0) upper[i] = Num(1);
  }

  GridSearchResult<Num> best;
  std::vector<std::size_t> step(n, 1);
  while (true) {
    std::vector<Num> coords(n);
    for (std::size_t i = 1; i <= n; ++i)
      coords[i - 1] = upper[i] * Num(step[i - 1]) / Num(resolution);
    PriceVector<Num> price(std::move(coords));
    auto result = revenue_at(instance, price);
    ++best.evaluated;
    if (result.revenue &&
        (!best.revenue || definitely_gt(*result.revenue, *best.revenue, instance.tolerance))) {
      best.revenue = result.revenue;
      best.price = std::move(price);
    }
    std::size_t axis = 0;
    while (axis < n && step[axis] == resolution) step[axis++] = 1;
    if (axis == n) break;
    ++step[axis];
  }
  return best;
}

namespace {

template <class Num>
using Point = std::array<Num, 2>;

template <class Num>
Num cross(const Point<Num>& o, const Point<Num>& a, const Point<Num>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
template <class Num>
std::vector<Point<Num>> convex_hull(std::vector<Point<Num>> points, Tolerance tol) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(),
                           [&](const auto& a, const auto& b) {
                             return approx_eq(a[0], b[0], tol) && approx_eq(a[1], b[1], tol);
                           }),
               points.end());
  if (points.size() <= 2) return points;
  std::vector<Point<Num>> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& pt : points) {
    while (k >= 2 && !definitely_gt(cross(hull[k - 2], hull[k - 1], pt), Num(0), tol)) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && !definitely_gt(cross(hull[k - 2], hull[k - 1], points[i]), Num(0), tol))
      --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

template <class Num>
bool between(const Num& v, const Num& a, const Num& b, Tolerance tol) {
  const Num& lo = a < b ? a : b;
  const Num& hi = a < b ? b : a;
  return approx_ge(v, lo, tol) && approx_le(v, hi, tol);
}

template <class Num>
bool inside_hull(const std::vector<Point<Num>>& hull, const Point<Num>& pt, Tolerance tol) {
  if (hull.size() == 1) return approx_eq(hull[0][0], pt[0], tol) && approx_eq(hull[0][1], pt[1], tol);
  if (hull.size() == 2) {
    return approx_eq(cross(hull[0], hull[1], pt), Num(0), tol) &&
           between(pt[0], hull[0][0], hull[1][0], tol) && between(pt[1], hull[0][1], hull[1][1], tol);
  }
  for (std::size_t e = 0; e < hull.size(); ++e) {
    if (!approx_ge(cross(hull[e], hull[(e + 1) % hull.size()], pt), Num(0), tol)) return false;
  }
  return true;
}

template <class Num>
std::vector<Num> breakpoints(const SupplyCurve<Num>& curve) {
  std::vector<Num> out{Num(0)};
  for (const auto& step : curve.steps()) out.push_back(step.until);
  return out;
}

}  // namespace

template <class Num>
std::optional<Num> allocation_oracle(const AuctionInstance<Num>& instance,
                                     const PriceVector<Num>& p) {
  const std::size_t n = instance.goods;
  if (n > 2 || instance.bids.size() > 3)
    throw SizeGuardExceeded("allocation oracle is limited to n <= 2 and |B| <= 3");
  const Tolerance tol = instance.tolerance;

  // Sums of one demand vertex per bid, embedded in the plane (x_2 = 0 if n = 1).
  std::vector<Point<Num>> sums{{Num(0), Num(0)}};
  for (const auto& bid : instance.bids) {
    std::vector<Point<Num>> next;
    for (const auto& vertex : demand_vertices(bid, p, tol)) {
      for (const auto& s : sums) {
        Point<Num> q = s;
        for (std::size_t i = 1; i <= n; ++i) q[i - 1] += vertex.amount(i);
        next.push_back(q);
      }
    }
    sums = std::move(next);
  }
  const auto hull = convex_hull(std::move(sums), tol);

  std::array<std::vector<Num>, 2> lines;
  for (std::size_t i = 1; i <= n; ++i) lines[i - 1] = breakpoints(instance.cost.curve(i));
  if (n == 1) lines[1] = {Num(0)};

  std::vector<Point<Num>> candidates(hull.begin(), hull.end());
  if (hull.size() >= 2) {
    const std::size_t edges = hull.size() == 2 ? 1 : hull.size();
    for (std::size_t e = 0; e < edges; ++e) {
      const Point<Num>& a = hull[e];
      const Point<Num>& b = hull[(e + 1) % hull.size()];
      for (std::size_t axis = 0; axis < 2; ++axis) {
        if (a[axis] == b[axis]) continue;
        for (const Num& c : lines[axis]) {
          if (!between(c, a[axis], b[axis], tol)) continue;
          const Num t = (c - a[axis]) / (b[axis] - a[axis]);
          candidates.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
        }
      }
    }
  }
  for (const Num& c0 : lines[0]) {
    for (const Num& c1 : lines[1]) candidates.push_back({c0, c1});
  }

  std::optional<Num> best;
  for (const auto& pt : candidates) {
    if (!inside_hull(hull, pt, tol)) continue;
    Bundle<Num> x(n);
    Num payment(0);
    for (std::size_t i = 1; i <= n; ++i) {
      x.amount(i) = pt[i - 1];
      payment += p.at(i) * pt[i - 1];
    }
    const auto cost = cost_value(instance.cost, x, tol);
    if (!cost) continue;
    const Num revenue = payment - *cost;
    if (!best || revenue > *best) best = revenue;
  }
  return best;
}

#define PMX_INSTANTIATE_ORACLE(Num)                                                               \
  template std::vector<IntersectionWitness<Num>> enumerate_hyperplane_intersections(              \
      const AuctionInstance<Num>&);                                                               \
  template GridSearchResult<Num> grid_search_revenue(const AuctionInstance<Num>&, std::size_t);   \
  template std::optional<Num> allocation_oracle(const AuctionInstance<Num>&,                      \
                                                const PriceVector<Num>&);

PMX_INSTANTIATE_ORACLE(Rational)
PMX_INSTANTIATE_ORACLE(double)

}  // namespace pmx
