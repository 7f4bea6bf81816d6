#include <doctest.h>

#include <random>

#include "pmx/allocation.hpp"
#include "pmx/demand.hpp"
#include "random_instances.hpp"

using pmx::Rational;
using pmx::testing::make_instance;
using pmx::testing::price;

namespace {

pmx::Bid<Rational> bid(std::vector<Rational> values, Rational budget = 10) {
  return pmx::Bid<Rational>("x", std::move(values), std::move(budget));
}

pmx::Bundle<Rational> bundle(std::vector<Rational> v) { return pmx::Bundle<Rational>(std::move(v)); }

}  // namespace

TEST_CASE("demanded_goods picks the maximal value-to-price ratios") {
  using G = std::vector<std::size_t>;
  CHECK(pmx::demanded_goods(bid({2, 3}), price({2, 3})).indices() == G{0, 1, 2});
  CHECK(pmx::demanded_goods(bid({5, 4}), price({Rational(15, 4), 3})).indices() == G{1, 2});
  CHECK(pmx::demanded_goods(bid({2, 3}), price({10, 10})).indices() == G{0});
  CHECK(pmx::demanded_goods(bid({0, 3}), price({1, 6})).indices() == G{0});
}

TEST_CASE("demand_vertices spend the budget on one demanded good") {
  auto v = pmx::demand_vertices(bid({2, 3}, 6), price({2, 3}));
  REQUIRE(v.size() == 3);
  CHECK(v[0] == bundle({0, 0}));
  CHECK(v[1] == bundle({3, 0}));
  CHECK(v[2] == bundle({0, 2}));

  v = pmx::demand_vertices(bid({2, 3}, 6), price({10, 10}));
  REQUIRE(v.size() == 1);
  CHECK(v[0] == bundle({0, 0}));

  v = pmx::demand_vertices(bid({5, 4}, 20), price({Rational(15, 4), 3}));
  REQUIRE(v.size() == 2);
  CHECK(v[0] == bundle({Rational(16, 3), 0}));
  CHECK(v[1] == bundle({0, Rational(20, 3)}));
}

TEST_CASE("in_demand_set tests convex combinations of the vertices") {
  CHECK(pmx::in_demand_set(bid({2}, 6), price({2}), bundle({3})));
  CHECK_FALSE(pmx::in_demand_set(bid({2}, 6), price({2}), bundle({4})));
  CHECK(pmx::in_demand_set(bid({5, 4}, 20), price({Rational(15, 4), 3}),
                           bundle({Rational(8, 3), Rational(10, 3)})));
  // Without the dummy the whole budget must be spent.
  CHECK_FALSE(pmx::in_demand_set(bid({5, 4}, 20), price({Rational(15, 4), 3}),
                                 bundle({Rational(8, 3), Rational(3)})));
  // Undemanded goods must not be bought.
  CHECK_FALSE(pmx::in_demand_set(bid({2, 3}, 6), price({2, 4}), bundle({1, Rational(1, 4)})));
  CHECK(pmx::in_demand_set(bid({2, 3}, 6), price({2, 4}), bundle({1, 0})));
  CHECK_FALSE(pmx::in_demand_set(bid({2, 3}, 6), price({2, 4}), bundle({-1, 0})));
}

TEST_CASE("max_single_good_utility") {
  CHECK(pmx::max_single_good_utility(bid({2}, 6), price({1})) == 6);
  CHECK(pmx::max_single_good_utility(bid({2}, 6), price({2})) == 0);
  CHECK(pmx::max_single_good_utility(bid({2, 3}, 10), price({2, 3})) == 0);
  CHECK(pmx::max_single_good_utility(bid({5, 4}, 20), price({Rational(15, 4), 3})) ==
        Rational(20, 3));
}

TEST_CASE("saturate_prices examples") {
  auto one = make_instance({{2, 3}}, {10});
  CHECK(pmx::saturate_prices(one, price({2, 10})) == price({2, 3}));
  auto fig = make_instance({{2, 3}, {5, 4}}, {10, 20});
  CHECK(pmx::saturate_prices(fig, price({2, 3})) == price({2, 3}));
  auto unit = make_instance({{1, 1}}, {10});
  CHECK(pmx::saturate_prices(unit, price({1, 5})) == price({1, 1}));
}

TEST_CASE("demand membership agrees with ratio comparison by division") {
  std::mt19937_64 rng(3);
  for (std::size_t trial = 0; trial < 500; ++trial) {
    auto instance = pmx::testing::random_instance(rng, {3, 1, 1, true});
    auto p = pmx::testing::random_price(rng, 3);
    const auto& b = instance.bids[0];
    Rational best = 0;
    for (std::size_t i = 0; i <= 3; ++i) best = std::max(best, b.value(i) / p.at(i));
    auto goods = pmx::demanded_goods(b, p);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(goods.contains(i) == (b.value(i) / p.at(i) == best));
  }
}

TEST_CASE("saturate_prices properties on random instances") {
  std::mt19937_64 rng(5);
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto instance = pmx::testing::random_instance(rng, {n, 1 + trial % 4, 2, false});
    auto p = pmx::testing::random_price(rng, n);
    auto lifted = pmx::saturate_prices(instance, p);
    CHECK(pmx::undemanded_goods(instance, lifted).empty());
    for (std::size_t i = 1; i <= n; ++i) CHECK(lifted.at(i) <= p.at(i));
    for (const auto& b : instance.bids)
      CHECK(pmx::demanded_goods(b, lifted).includes(pmx::demanded_goods(b, p)));
    auto before = pmx::revenue_at(instance, p).revenue;
    auto after = pmx::revenue_at(instance, lifted).revenue;
    if (before) {
      REQUIRE(after);
      CHECK(*after >= *before);
    }
  }
}
