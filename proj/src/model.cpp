#include "pmx/model.hpp"

#include <set>
#include <sstream>

namespace pmx {

template <class Num>
std::optional<Num> SupplyCurve<Num>::cost(const Num& x, Tolerance tol) const {
  Num total(0);
  Num start(0);
  for (const auto& step : steps_) {
    if (approx_le(x, step.until, tol)) {
      Num within = x < step.until ? x : step.until;
      return total + step.marginal * (within - start);
    }
    total += step.marginal * (step.until - start);
    start = step.until;
  }
  if (steps_.empty() && approx_le(x, Num(0), tol)) return Num(0);
  return std::nullopt;
}

template <class Num>
std::optional<Num> cost_value(const CostFunction<Num>& cost, const Bundle<Num>& x,
                              Tolerance tol) {
  Num total(0);
  for (std::size_t i = 1; i <= cost.goods(); ++i) {
    auto c = cost.curve(i).cost(x.amount(i), tol);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kInvalidGoodCount: return "InvalidGoodCount";
    case IssueKind::kEmptyBidSet: return "EmptyBidSet";
    case IssueKind::kDuplicateBidId: return "DuplicateBidId";
    case IssueKind::kValueArity: return "ValueArity";
    case IssueKind::kNonPositiveBudget: return "NonPositiveBudget";
    case IssueKind::kNegativeBidValue: return "NegativeBidValue";
    case IssueKind::kUndemandedGood: return "UndemandedGood";
    case IssueKind::kSupplyArity: return "SupplyArity";
    case IssueKind::kEmptySupplyCurve: return "EmptySupplyCurve";
    case IssueKind::kNonMonotoneStepEnds: return "NonMonotoneStepEnds";
    case IssueKind::kNonIncreasingMarginals: return "NonIncreasingMarginals";
    case IssueKind::kNegativeMarginal: return "NegativeMarginal";
    case IssueKind::kNonPositiveTolerance: return "NonPositiveTolerance";
  }
  return "Unknown";
}

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
  std::ostringstream out;
  out << "invalid instance:";
  for (const auto& issue : issues) out << "\n  " << to_string(issue.kind) << ": " << issue.message;
  return out.str();
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<ValidationIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

bool InvalidInstance::has(IssueKind kind) const {
  for (const auto& issue : issues_) {
    if (issue.kind == kind) return true;
  }
  return false;
}

AuctionInstance<Rational> validate_instance(const RawInstance& raw) {
  std::vector<ValidationIssue> issues;
  auto report = [&](IssueKind kind, std::size_t index, std::string message) {
    issues.push_back({kind, index, std::move(message)});
  };

  if (raw.goods < 1) {
    report(IssueKind::kInvalidGoodCount, 0,
           "good count must be at least 1, got " + std::to_string(raw.goods));
    throw InvalidInstance(std::move(issues));
  }
  const auto n = static_cast<std::size_t>(raw.goods);
  if (!(raw.tolerance > 0)) report(IssueKind::kNonPositiveTolerance, 0, "tolerance must be positive");
  if (raw.bids.empty()) report(IssueKind::kEmptyBidSet, 0, "at least one bid is required");

  std::set<std::string> ids;
  std::vector<bool> demanded(n + 1, false);
  for (std::size_t b = 0; b < raw.bids.size(); ++b) {
    const RawBid& bid = raw.bids[b];
    const std::string label = "bid '" + bid.id + "'";
    if (!ids.insert(bid.id).second)
      report(IssueKind::kDuplicateBidId, b, label + " appears more than once");
    if (bid.values.size() != n) {
      report(IssueKind::kValueArity, b,
             label + " has " + std::to_string(bid.values.size()) + " values, expected " +
                 std::to_string(n));
      continue;
    }
    if (bid.budget <= 0) report(IssueKind::kNonPositiveBudget, b, label + " budget must be positive");
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational& v = bid.values[i - 1];
      if (v < 0) {
        report(IssueKind::kNegativeBidValue, b,
               label + " value for good " + std::to_string(i) + " is negative");
      } else if (v > 0) {
        demanded[i] = true;
      }
    }
  }
  if (!raw.bids.empty()) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (!demanded[i])
        report(IssueKind::kUndemandedGood, i,
               "no bid has a positive value for good " + std::to_string(i));
    }
  }

  if (raw.supply.size() != n) {
    report(IssueKind::kSupplyArity, 0,
           "expected " + std::to_string(n) + " supply curves, got " +
               std::to_string(raw.supply.size()));
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      const auto& steps = raw.supply[i - 1].steps;
      const std::string label = "supply curve of good " + std::to_string(i);
      if (steps.empty()) {
        report(IssueKind::kEmptySupplyCurve, i, label + " has no steps");
        continue;
      }
      Rational previous_end(0);
      for (std::size_t q = 0; q < steps.size(); ++q) {
        if (steps[q].until <= previous_end) {
          report(IssueKind::kNonMonotoneStepEnds, i, label + ": step ends must strictly increase from 0");
          break;
        }
        previous_end = steps[q].until;
      }
      for (std::size_t q = 0; q < steps.size(); ++q) {
        if (steps[q].marginal < 0) {
          report(IssueKind::kNegativeMarginal, i, label + ": marginal costs must be nonnegative");
          break;
        }
      }
      for (std::size_t q = 1; q < steps.size(); ++q) {
        if (steps[q].marginal < steps[q - 1].marginal) {
          report(IssueKind::kNonIncreasingMarginals, i,
                 label + ": marginal costs must be weakly increasing");
          break;
        }
      }
    }
  }

  if (!issues.empty()) throw InvalidInstance(std::move(issues));

  AuctionInstance<Rational> instance;
  instance.goods = n;
  instance.tolerance = Tolerance{raw.tolerance};
  for (const RawBid& bid : raw.bids) instance.bids.emplace_back(bid.id, bid.values, bid.budget);
  std::vector<SupplyCurve<Rational>> curves;
  for (const auto& curve : raw.supply) curves.emplace_back(curve.steps);
  instance.cost = CostFunction<Rational>(std::move(curves));
  return instance;
}

RawInstance to_raw(const AuctionInstance<Rational>& instance, Arithmetic arithmetic) {
  RawInstance raw;
  raw.goods = static_cast<long long>(instance.goods);
  raw.arithmetic = arithmetic;
  raw.tolerance = instance.tolerance.eps;
  for (const auto& bid : instance.bids) raw.bids.push_back({bid.id(), bid.values(), bid.budget()});
  for (const auto& curve : instance.cost.curves()) raw.supply.push_back({curve.steps()});
  return raw;
}

template <class To>
PriceVector<To> convert_price(const PriceVector<Rational>& price) {
  std::vector<To> values;
  values.reserve(price.goods());
  for (const auto& p : price.values()) values.push_back(from_rational<To>(p));
  return PriceVector<To>(std::move(values));
}

template <class To>
AuctionInstance<To> convert_instance(const AuctionInstance<Rational>& instance) {
  AuctionInstance<To> out;
  out.goods = instance.goods;
  out.tolerance = instance.tolerance;
  for (const auto& bid : instance.bids) {
    std::vector<To> values;
    for (const auto& v : bid.values()) values.push_back(from_rational<To>(v));
    out.bids.emplace_back(bid.id(), std::move(values), from_rational<To>(bid.budget()));
  }
  std::vector<SupplyCurve<To>> curves;
  for (const auto& curve : instance.cost.curves()) {
    std::vector<SupplyStep<To>> steps;
    for (const auto& step : curve.steps())
      steps.push_back({from_rational<To>(step.until), from_rational<To>(step.marginal)});
    curves.emplace_back(std::move(steps));
  }
  out.cost = CostFunction<To>(std::move(curves));
  return out;
}

template class SupplyCurve<Rational>;
template class SupplyCurve<double>;
template std::optional<Rational> cost_value(const CostFunction<Rational>&, const Bundle<Rational>&,
                                            Tolerance);
template std::optional<double> cost_value(const CostFunction<double>&, const Bundle<double>&,
                                          Tolerance);
template AuctionInstance<Rational> convert_instance<Rational>(const AuctionInstance<Rational>&);
template AuctionInstance<double> convert_instance<double>(const AuctionInstance<Rational>&);
template PriceVector<Rational> convert_price<Rational>(const PriceVector<Rational>&);
template PriceVector<double> convert_price<double>(const PriceVector<Rational>&);

}  // namespace pmx
