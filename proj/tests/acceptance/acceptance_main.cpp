// Acceptance checks. Each criterion prints one PASS/FAIL line; run with a
// criterion name to check just that one, or with no arguments for all.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pmx/allocation.hpp"
#include "pmx/candidates.hpp"
#include "pmx/cli.hpp"
#include "pmx/demand.hpp"
#include "pmx/instance_json.hpp"
#include "pmx/oracle.hpp"
#include "random_instances.hpp"

namespace {

using pmx::Rational;
using Clock = std::chrono::steady_clock;
using Instance = pmx::AuctionInstance<Rational>;
using Price = pmx::PriceVector<Rational>;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string price_text(const Price& p) {
  std::string out = "(";
  for (std::size_t i = 1; i <= p.goods(); ++i) out += (i > 1 ? "," : "") + pmx::format_fraction(p.at(i));
  return out + ")";
}

// The shared random corpus: n cycles through 1..3, |B| through 1..4.
std::vector<Instance> oracle_corpus() {
  std::mt19937_64 rng(20240611);
  std::vector<Instance> out;
  for (std::size_t t = 0; t < 204; ++t)
    out.push_back(pmx::testing::random_instance(rng, {1 + t % 3, 1 + (t / 3) % 4, 2, false}));
  return out;
}

std::vector<Price> prices_of(const pmx::CandidateSet<Rational>& set) {
  std::vector<Price> out;
  for (const auto& c : set.candidates) out.push_back(c.price);
  return out;
}

Outcome two_bids() {
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = pmx::run_cli({"candidates", std::string(PMX_TEST_DATA) + "/two_bids.json"}, out, err);
  const double elapsed = seconds_since(start);
  if (code != 0) return {false, "exit code " + std::to_string(code) + ": " + err.str()};

  std::set<std::vector<Rational>> listed;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    std::istringstream fields(line.substr(0, line.find('\t')));
    std::vector<Rational> p;
    for (std::string f; fields >> f;) p.push_back(pmx::parse_rational(f));
    listed.insert(p);
  }
  const std::set<std::vector<Rational>> expected{
      {Rational(2), Rational(3)}, {Rational(5), Rational(4)}, {Rational(15, 4), Rational(3)}};

  auto instance = pmx::validate_instance(pmx::read_instance_file(std::string(PMX_TEST_DATA) + "/two_bids.json"));
  std::set<std::vector<Rational>> oracle;
  for (const auto& w : pmx::enumerate_hyperplane_intersections(instance)) oracle.insert(w.price.values());

  std::ostringstream detail;
  detail << listed.size() << " prices listed, oracle agrees: " << (oracle == expected ? "yes" : "no")
         << ", " << elapsed << " s";
  return {listed == expected && oracle == expected && elapsed < 1.0, detail.str()};
}

Outcome oracle_suite() {
  const auto start = Clock::now();
  const auto corpus = oracle_corpus();
  std::size_t set_mismatch = 0;
  std::size_t grid_above = 0;
  double worst_gap = -1e300;
  for (const auto& instance : corpus) {
    const auto oracle = pmx::enumerate_hyperplane_intersections(instance);
    std::vector<Price> oracle_prices;
    for (const auto& w : oracle) oracle_prices.push_back(w.price);
    const auto solution = pmx::solve_auction(instance);
    if (prices_of(solution.candidates) != oracle_prices) ++set_mismatch;

    const auto grid = pmx::grid_search_revenue(pmx::convert_instance<double>(instance), 40);
    if (grid.revenue) {
      const double gap = *grid.revenue - pmx::to_double(*solution.best.revenue);
      worst_gap = std::max(worst_gap, gap);
      if (gap > 1e-6) ++grid_above;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << corpus.size() << " instances, candidate/intersection mismatches " << set_mismatch
         << ", grid above candidate optimum " << grid_above << " (max gap " << worst_gap << "), "
         << elapsed << " s";
  return {set_mismatch == 0 && grid_above == 0 && elapsed < 300.0, detail.str()};
}

Outcome pruning() {
  const auto corpus = oracle_corpus();
  std::size_t differ = 0;
  std::size_t bad_counts = 0;
  std::uint64_t pruned_total = 0;
  for (const auto& instance : corpus) {
    const auto with = pmx::filtered_prices(instance, {true, 0});
    const auto without = pmx::filtered_prices(instance, {false, 0});
    bool same = with.candidates.size() == without.candidates.size();
    for (std::size_t c = 0; same && c < with.candidates.size(); ++c) {
      same = with.candidates[c].price == without.candidates[c].price &&
             with.candidates[c].bids == without.candidates[c].bids &&
             with.candidates[c].sigma == without.candidates[c].sigma;
    }
    if (!same) ++differ;
    const auto total = pmx::total_combinations(instance.bids.size(), instance.goods);
    if (with.stats.calls + with.stats.pruned != total || without.stats.calls != total ||
        with.stats.combinations != total)
      ++bad_counts;
    pruned_total += with.stats.pruned;
  }
  std::ostringstream detail;
  detail << corpus.size() << " instances, output differences " << differ
         << ", count identity violations " << bad_counts << ", permutations skipped " << pruned_total;
  return {differ == 0 && bad_counts == 0, detail.str()};
}

Outcome factors() {
  std::mt19937_64 rng(31337);
  std::size_t traces = 0;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  while (traces < 1000) {
    const std::size_t n = 1 + traces % 4;
    auto instance = pmx::testing::random_instance(rng, {n, 3, 1, true});
    std::vector<const pmx::Bid<Rational>*> tuple;
    std::uniform_int_distribution<std::size_t> pick(0, instance.bids.size() - 1);
    for (std::size_t k = 0; k < n; ++k) tuple.push_back(&instance.bids[pick(rng)]);
    std::vector<std::size_t> sigma(n);
    for (std::size_t k = 0; k < n; ++k) sigma[k] = k + 1;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    pmx::generate_candidate<Rational>(tuple, sigma, {}, [&](const pmx::FactorSnapshot<Rational>& s) {
      for (std::size_t l = s.step; l <= n; ++l) {
        ++checks;
        if (s.factors[l - 1] != pmx::factor_values_reference<Rational>(tuple, sigma, s.step, l, s.prices))
          ++mismatches;
      }
    });
    ++traces;
  }
  std::ostringstream detail;
  detail << traces << " traces, " << checks << " factor comparisons, " << mismatches << " mismatches";
  return {mismatches == 0 && checks > 0, detail.str()};
}

Outcome allocation_oracle() {
  std::mt19937_64 rng(777);
  std::size_t compared = 0;
  std::size_t off = 0;
  std::size_t feasibility_disagree = 0;
  double worst = 0;
  for (std::size_t t = 0; t < 50; ++t) {
    auto instance = pmx::testing::random_instance(rng, {1 + t % 2, 1 + t % 3, 2, false});
    auto p = pmx::testing::random_price(rng, instance.goods);
    const auto lp = pmx::revenue_at(instance, p).revenue;
    const auto oracle = pmx::allocation_oracle(instance, p);
    if (lp.has_value() != oracle.has_value()) {
      ++feasibility_disagree;
      continue;
    }
    if (!lp) continue;
    ++compared;
    const double gap = std::abs(pmx::to_double(*lp - *oracle));
    worst = std::max(worst, gap);
    if (gap > 1e-2) ++off;
  }

  using pmx::testing::make_instance;
  using pmx::testing::price;
  const bool r3 = pmx::revenue_at(make_instance({{2}}, {6}, 10, 1), price({2})).revenue == Rational(3);
  const bool r0 = pmx::revenue_at(make_instance({{2}}, {6}, 10, 3), price({2})).revenue == Rational(0);
  const bool r30 =
      pmx::revenue_at(make_instance({{2, 3}, {5, 4}}, {10, 20}), price({2, 3})).revenue == Rational(30);

  std::ostringstream detail;
  detail << "50 instances, " << compared << " finite comparisons, worst gap " << worst
         << ", beyond 1e-2: " << off << ", feasibility disagreements " << feasibility_disagree
         << "; analytic r=3 " << (r3 ? "ok" : "wrong") << ", r=0 " << (r0 ? "ok" : "wrong")
         << ", r=30 " << (r30 ? "ok" : "wrong");
  return {off == 0 && feasibility_disagree == 0 && r3 && r0 && r30, detail.str()};
}

Outcome envy_free() {
  auto corpus = oracle_corpus();
  corpus.push_back(pmx::validate_instance(pmx::read_instance_file(std::string(PMX_TEST_DATA) + "/two_bids.json")));
  corpus.push_back(pmx::validate_instance(pmx::read_instance_file(std::string(PMX_TEST_DATA) + "/three_goods.json")));
  std::size_t allocations = 0;
  std::size_t violations = 0;
  for (const auto& instance : corpus) {
    const auto solution = pmx::solve_auction(instance);
    for (std::size_t b = 0; b < instance.bids.size(); ++b) {
      ++allocations;
      if (!pmx::in_demand_set(instance.bids[b], solution.best.price, solution.best.allocation[b].bundle))
        ++violations;
    }
  }
  std::ostringstream detail;
  detail << corpus.size() << " instances, " << allocations << " bid allocations, " << violations
         << " outside the demand set";
  return {violations == 0, detail.str()};
}

Outcome saturation() {
  std::mt19937_64 rng(4242);
  std::size_t undemanded = 0;
  std::size_t not_dominating = 0;
  std::size_t revenue_drop = 0;
  std::string example;
  for (std::size_t t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3;
    auto instance = pmx::testing::random_instance(rng, {n, 1 + t % 4, 2, false});
    auto p = pmx::testing::random_price(rng, n);
    auto lifted = pmx::saturate_prices(instance, p);
    if (!pmx::undemanded_goods(instance, lifted).empty()) ++undemanded;
    bool dominates = true;
    for (std::size_t i = 1; i <= n; ++i) dominates = dominates && lifted.at(i) >= p.at(i);
    if (!dominates) {
      ++not_dominating;
      if (example.empty()) example = price_text(p) + " -> " + price_text(lifted);
    }
    const auto before = pmx::revenue_at(instance, p).revenue;
    const auto after = pmx::revenue_at(instance, lifted).revenue;
    if (before && (!after || pmx::to_double(*after) < pmx::to_double(*before) - 1e-6)) ++revenue_drop;
  }
  std::ostringstream detail;
  detail << "100 pairs: all goods demanded failures " << undemanded << ", coordinate-wise dominance failures "
         << not_dominating << (example.empty() ? "" : " (first: " + example + ")")
         << ", revenue decreases " << revenue_drop;
  return {undemanded == 0 && not_dominating == 0 && revenue_drop == 0, detail.str()};
}

Outcome performance() {
  const auto dir = std::filesystem::temp_directory_path();
  std::size_t slow = 0;
  std::size_t pruning_seeds = 0;
  std::uint64_t fewest_calls = ~std::uint64_t{0};
  double slowest = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    const auto raw = pmx::testing::random_raw_instance(rng, {3, 10, 2, false});
    const auto path = dir / ("pmx_acceptance_perf_" + std::to_string(seed) + ".json");
    std::ofstream(path) << pmx::serialize_instance(raw).dump(2);

    const auto start = Clock::now();
    std::ostringstream out, err;
    const int code = pmx::run_cli({"candidates", path.string(), "--stats", "--json"}, out, err);
    const double elapsed = seconds_since(start);
    std::filesystem::remove(path);
    if (code != 0) return {false, "seed " + std::to_string(seed) + " exit " + std::to_string(code)};
    slowest = std::max(slowest, elapsed);
    if (elapsed >= 10.0) ++slow;
    const auto stats = nlohmann::json::parse(out.str())["stats"];
    const auto calls = stats["calls"].get<std::uint64_t>();
    fewest_calls = std::min(fewest_calls, calls);
    if (calls < 6000 && stats["pruned"].get<std::uint64_t>() > 0) ++pruning_seeds;
  }
  std::ostringstream detail;
  detail << "5 seeded n=3 |B|=10 instances, slowest " << slowest << " s, fewest calls " << fewest_calls
         << " of 6000, seeds with pruning " << pruning_seeds;
  return {slow == 0 && pruning_seeds > 0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"two_bids", two_bids},         {"oracle_suite", oracle_suite},
      {"pruning", pruning},         {"factors", factors},
      {"allocation_oracle", allocation_oracle}, {"envy_free", envy_free},
      {"saturation", saturation},   {"performance", performance},
  };
  std::set<std::string> selected(argv + 1, argv + argc);
  for (const auto& name : selected) {
    bool known = false;
    for (const auto& c : criteria) known = known || c.first == name;
    if (!known) {
      std::cerr << "unknown criterion: " << name << '\n';
      return 2;
    }
  }
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    if (!selected.empty() && !selected.count(name)) continue;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail << std::endl;
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
