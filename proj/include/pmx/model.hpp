#ifndef PMX_MODEL_HPP_
#define PMX_MODEL_HPP_

// Auction instance data: bids with budgets, anonymous linear prices, bundles
// and the step-supply cost function. Goods are indexed 1..n; index 0 is the
// dummy good (the empty bundle) whose value and price are both 1. The dummy
// coordinate is never stored, only synthesized by the accessors.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmx/numeric.hpp"

namespace pmx {

template <class Num>
class Bid {
 public:
  Bid(std::string id, std::vector<Num> values, Num budget)
      : id_(std::move(id)), values_(std::move(values)), budget_(std::move(budget)) {}

  const std::string& id() const { return id_; }
  std::size_t goods() const { return values_.size(); }
  const Num& budget() const { return budget_; }
  const std::vector<Num>& values() const { return values_; }

  // Value for good i in 0..n; value(0) is the dummy value 1.
  Num value(std::size_t i) const { return i == 0 ? Num(1) : values_[i - 1]; }

 private:
  std::string id_;
  std::vector<Num> values_;
  Num budget_;
};

template <class Num>
class PriceVector {
 public:
  PriceVector() = default;
  explicit PriceVector(std::vector<Num> prices) : prices_(std::move(prices)) {}

  std::size_t goods() const { return prices_.size(); }
  const std::vector<Num>& values() const { return prices_; }

  // Price of good i in 0..n; at(0) is the dummy price 1.
  Num at(std::size_t i) const { return i == 0 ? Num(1) : prices_[i - 1]; }
  void set(std::size_t i, Num price) { prices_[i - 1] = std::move(price); }

  bool all_positive() const {
    for (const Num& p : prices_) {
      if (!(p > 0)) return false;
    }
    return true;
  }

  friend bool operator==(const PriceVector& a, const PriceVector& b) {
    return a.prices_ == b.prices_;
  }
  friend bool operator<(const PriceVector& a, const PriceVector& b) {
    return a.prices_ < b.prices_;
  }

 private:
  std::vector<Num> prices_;
};

// Quantities of goods 1..n. amount(0) is not defined for bundles.
template <class Num>
class Bundle {
 public:
  Bundle() = default;
  explicit Bundle(std::size_t goods) : amounts_(goods, Num(0)) {}
  explicit Bundle(std::vector<Num> amounts) : amounts_(std::move(amounts)) {}

  std::size_t goods() const { return amounts_.size(); }
  const std::vector<Num>& values() const { return amounts_; }
  const Num& amount(std::size_t i) const { return amounts_[i - 1]; }
  Num& amount(std::size_t i) { return amounts_[i - 1]; }

  friend bool operator==(const Bundle& a, const Bundle& b) { return a.amounts_ == b.amounts_; }

 private:
  std::vector<Num> amounts_;
};

// One segment of a marginal-cost step function: `marginal` per unit for
// quantities between the previous step's `until` (0 for the first) and `until`.
template <class Num>
struct SupplyStep {
  Num until;
  Num marginal;
};

template <class Num>
class SupplyCurve {
 public:
  SupplyCurve() = default;
  explicit SupplyCurve(std::vector<SupplyStep<Num>> steps) : steps_(std::move(steps)) {}

  const std::vector<SupplyStep<Num>>& steps() const { return steps_; }
  Num capacity() const { return steps_.empty() ? Num(0) : steps_.back().until; }
  // Lower end of step q (0-based).
  Num step_start(std::size_t q) const { return q == 0 ? Num(0) : steps_[q - 1].until; }

  // Cost of providing x units; nullopt when x exceeds capacity.
  std::optional<Num> cost(const Num& x, Tolerance tol = {}) const;

 private:
  std::vector<SupplyStep<Num>> steps_;
};

// psi(x) = sum_i sigma_i(x_i), convex and monotone with psi(0) = 0.
template <class Num>
class CostFunction {
 public:
  CostFunction() = default;
  explicit CostFunction(std::vector<SupplyCurve<Num>> curves) : curves_(std::move(curves)) {}

  std::size_t goods() const { return curves_.size(); }
  const SupplyCurve<Num>& curve(std::size_t i) const { return curves_[i - 1]; }
  const std::vector<SupplyCurve<Num>>& curves() const { return curves_; }

 private:
  std::vector<SupplyCurve<Num>> curves_;
};

template <class Num>
struct AuctionInstance {
  std::size_t goods = 0;
  std::vector<Bid<Num>> bids;
  CostFunction<Num> cost;
  Tolerance tolerance;

  static constexpr Arithmetic arithmetic() { return NumTraits<Num>::kMode; }
};

// Total cost of a bundle, or nullopt (+infinity) when any good exceeds its
// capacity.
template <class Num>
std::optional<Num> cost_value(const CostFunction<Num>& cost, const Bundle<Num>& x,
                              Tolerance tol = {});

// Unvalidated instance as read from an external description. All numbers are
// exact; the arithmetic field selects how the solver computes.
struct RawBid {
  std::string id;
  std::vector<Rational> values;
  Rational budget;
};

struct RawSupplyCurve {
  std::vector<SupplyStep<Rational>> steps;
};

struct RawInstance {
  long long goods = 0;
  Arithmetic arithmetic = Arithmetic::kRational;
  double tolerance = 1e-9;
  std::vector<RawBid> bids;
  std::vector<RawSupplyCurve> supply;
};

enum class IssueKind {
  kInvalidGoodCount,
  kEmptyBidSet,
  kDuplicateBidId,
  kValueArity,
  kNonPositiveBudget,
  kNegativeBidValue,
  kUndemandedGood,
  kSupplyArity,
  kEmptySupplyCurve,
  kNonMonotoneStepEnds,
  kNonIncreasingMarginals,
  kNegativeMarginal,
  kNonPositiveTolerance,
};

std::string_view to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  // Good index (1-based) or bid position, depending on kind; 0 when unused.
  std::size_t index = 0;
  std::string message;
};

class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }
  bool has(IssueKind kind) const;

 private:
  std::vector<ValidationIssue> issues_;
};

// Checks every invariant and throws InvalidInstance listing all violations.
AuctionInstance<Rational> validate_instance(const RawInstance& raw);

// Inverse of validate_instance, used for serialization.
RawInstance to_raw(const AuctionInstance<Rational>& instance,
                   Arithmetic arithmetic = Arithmetic::kRational);

template <class To>
AuctionInstance<To> convert_instance(const AuctionInstance<Rational>& instance);

template <class To>
PriceVector<To> convert_price(const PriceVector<Rational>& price);

}  // namespace pmx

#endif  // PMX_MODEL_HPP_
