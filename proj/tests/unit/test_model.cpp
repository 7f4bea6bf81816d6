#include <doctest.h>

#include <random>

#include "pmx/instance_json.hpp"
#include "pmx/model.hpp"
#include "random_instances.hpp"

using pmx::IssueKind;
using pmx::Rational;

namespace {

pmx::RawInstance two_bid_raw() {
  pmx::RawInstance raw;
  raw.goods = 2;
  raw.bids = {{"a", {Rational(2), Rational(3)}, Rational(10)},
              {"b", {Rational(5), Rational(4)}, Rational(20)}};
  raw.supply = {{{{Rational(100), Rational(0)}}}, {{{Rational(100), Rational(0)}}}};
  return raw;
}

pmx::SupplyCurve<Rational> curve(std::vector<std::pair<int, int>> steps) {
  std::vector<pmx::SupplyStep<Rational>> out;
  for (auto [until, marginal] : steps) out.push_back({Rational(until), Rational(marginal)});
  return pmx::SupplyCurve<Rational>(out);
}

IssueKind only_issue(const pmx::RawInstance& raw) {
  try {
    pmx::validate_instance(raw);
  } catch (const pmx::InvalidInstance& e) {
    REQUIRE(e.issues().size() == 1);
    return e.issues().front().kind;
  }
  FAIL("instance was accepted");
  return IssueKind::kEmptyBidSet;
}

}  // namespace

TEST_CASE("validate_instance accepts the two-bid example") {
  auto instance = pmx::validate_instance(two_bid_raw());
  CHECK(instance.goods == 2);
  REQUIRE(instance.bids.size() == 2);
  CHECK(instance.bids[1].value(1) == 5);
  CHECK(instance.bids[1].value(0) == 1);
  CHECK(instance.cost.curve(2).capacity() == 100);
}

TEST_CASE("validate_instance reports each kind of violation") {
  {
    pmx::RawInstance raw;
    raw.goods = 2;
    raw.bids = {{"a", {Rational(2), Rational(0)}, Rational(1)}};
    raw.supply = two_bid_raw().supply;
    try {
      pmx::validate_instance(raw);
      FAIL("accepted");
    } catch (const pmx::InvalidInstance& e) {
      REQUIRE(e.issues().size() == 1);
      CHECK(e.issues()[0].kind == IssueKind::kUndemandedGood);
      CHECK(e.issues()[0].index == 2);
    }
  }
  {
    pmx::RawInstance raw;
    raw.goods = 1;
    raw.bids = {{"a", {Rational(2)}, Rational(1)}};
    raw.supply = {{{{Rational(1), Rational(3)}, {Rational(2), Rational(1)}}}};
    CHECK(only_issue(raw) == IssueKind::kNonIncreasingMarginals);
  }
  auto raw = two_bid_raw();
  raw.goods = 0;
  CHECK_THROWS_AS(pmx::validate_instance(raw), pmx::InvalidInstance);

  raw = two_bid_raw();
  raw.bids.clear();
  CHECK(only_issue(raw) == IssueKind::kEmptyBidSet);

  raw = two_bid_raw();
  raw.bids[1].id = "a";
  CHECK(only_issue(raw) == IssueKind::kDuplicateBidId);

  raw = two_bid_raw();
  raw.bids[0].values.pop_back();
  CHECK(only_issue(raw) == IssueKind::kValueArity);

  raw = two_bid_raw();
  raw.bids[0].budget = 0;
  CHECK(only_issue(raw) == IssueKind::kNonPositiveBudget);

  raw = two_bid_raw();
  raw.bids[0].values[0] = -1;
  CHECK(only_issue(raw) == IssueKind::kNegativeBidValue);

  raw = two_bid_raw();
  raw.supply.pop_back();
  CHECK(only_issue(raw) == IssueKind::kSupplyArity);

  raw = two_bid_raw();
  raw.supply[0].steps.clear();
  CHECK(only_issue(raw) == IssueKind::kEmptySupplyCurve);

  raw = two_bid_raw();
  raw.supply[0].steps = {{Rational(5), Rational(0)}, {Rational(5), Rational(1)}};
  CHECK(only_issue(raw) == IssueKind::kNonMonotoneStepEnds);

  raw = two_bid_raw();
  raw.supply[0].steps = {{Rational(5), Rational(-1)}};
  CHECK(only_issue(raw) == IssueKind::kNegativeMarginal);

  raw = two_bid_raw();
  raw.tolerance = 0;
  CHECK(only_issue(raw) == IssueKind::kNonPositiveTolerance);
}

TEST_CASE("validate_instance collects every issue") {
  auto raw = two_bid_raw();
  raw.bids[0].budget = -1;
  raw.bids[1].values[1] = -2;
  raw.supply[1].steps.clear();
  try {
    pmx::validate_instance(raw);
    FAIL("accepted");
  } catch (const pmx::InvalidInstance& e) {
    CHECK(e.issues().size() >= 3);
    CHECK(e.has(IssueKind::kNonPositiveBudget));
    CHECK(e.has(IssueKind::kNegativeBidValue));
    CHECK(e.has(IssueKind::kEmptySupplyCurve));
  }
}

TEST_CASE("supply curve cost is the integral of the marginal steps") {
  CHECK(*curve({{10, 1}}).cost(Rational(3)) == 3);
  CHECK(*curve({{2, 1}, {10, 3}}).cost(Rational(4)) == 8);
  CHECK_FALSE(curve({{10, 1}}).cost(Rational(11)).has_value());
  CHECK(*curve({{10, 1}}).cost(Rational(10)) == 10);
  CHECK(*curve({{2, 1}, {10, 3}}).cost(Rational(0)) == 0);

  pmx::CostFunction<Rational> psi({curve({{2, 1}, {10, 3}}), curve({{5, 0}})});
  CHECK(*pmx::cost_value(psi, pmx::Bundle<Rational>({Rational(4), Rational(5)})) == 8);
  CHECK(*pmx::cost_value(psi, pmx::Bundle<Rational>(2)) == 0);
  CHECK_FALSE(pmx::cost_value(psi, pmx::Bundle<Rational>({Rational(1), Rational(6)})));
}

TEST_CASE("cost_value is monotone and convex on random curves") {
  std::mt19937_64 rng(7);
  for (std::size_t trial = 0; trial < 300; ++trial) {
    auto instance = pmx::testing::random_instance(rng, {2, 1, 3, false});
    std::uniform_int_distribution<int> q(0, 60);
    auto point = [&] {
      std::vector<Rational> v;
      for (std::size_t i = 1; i <= 2; ++i)
        v.push_back(Rational(q(rng), 60) * instance.cost.curve(i).capacity());
      return pmx::Bundle<Rational>(v);
    };
    auto x = point();
    auto y = point();
    pmx::Bundle<Rational> hi(2);
    for (std::size_t i = 1; i <= 2; ++i) hi.amount(i) = std::max(x.amount(i), y.amount(i));
    const auto cx = *pmx::cost_value(instance.cost, x);
    const auto cy = *pmx::cost_value(instance.cost, y);
    const auto chi = *pmx::cost_value(instance.cost, hi);
    CHECK(cx <= chi);
    CHECK(cy <= chi);
    const Rational lambda(q(rng), 60);
    pmx::Bundle<Rational> mid(2);
    for (std::size_t i = 1; i <= 2; ++i)
      mid.amount(i) = lambda * x.amount(i) + (1 - lambda) * y.amount(i);
    CHECK(*pmx::cost_value(instance.cost, mid) <= lambda * cx + (1 - lambda) * cy);
  }
}

TEST_CASE("serialize, parse and validate reproduce the instance") {
  std::mt19937_64 rng(11);
  for (std::size_t trial = 0; trial < 100; ++trial) {
    auto raw = pmx::testing::random_raw_instance(rng, {1 + trial % 3, 1 + trial % 4, 2, false});
    raw.bids[0].values[0] = Rational(1, 3);  // not a finite decimal
    auto instance = pmx::validate_instance(raw);
    auto text = pmx::serialize_instance(pmx::to_raw(instance)).dump();
    auto again = pmx::validate_instance(pmx::parse_instance_text(text));
    REQUIRE(again.bids.size() == instance.bids.size());
    for (std::size_t b = 0; b < instance.bids.size(); ++b) {
      CHECK(again.bids[b].id() == instance.bids[b].id());
      CHECK(again.bids[b].values() == instance.bids[b].values());
      CHECK(again.bids[b].budget() == instance.bids[b].budget());
    }
    for (std::size_t i = 1; i <= instance.goods; ++i) {
      const auto& s1 = instance.cost.curve(i).steps();
      const auto& s2 = again.cost.curve(i).steps();
      REQUIRE(s1.size() == s2.size());
      for (std::size_t q = 0; q < s1.size(); ++q) {
        CHECK(s1[q].until == s2[q].until);
        CHECK(s1[q].marginal == s2[q].marginal);
      }
    }
  }
}

TEST_CASE("convert_instance produces the float model") {
  auto instance = pmx::validate_instance(two_bid_raw());
  auto f = pmx::convert_instance<double>(instance);
  CHECK(f.arithmetic() == pmx::Arithmetic::kFloat);
  CHECK(f.bids[1].value(2) == 4.0);
  CHECK(f.cost.curve(1).capacity() == 100.0);
  CHECK(pmx::convert_price<double>(pmx::testing::price({Rational(15, 4), Rational(3)})).at(1) == 3.75);
}
