#ifndef PMX_CANDIDATES_HPP_
#define PMX_CANDIDATES_HPP_

// Candidate clearing prices. Some revenue-maximizing price is the unique
// intersection of n linearly independent indifference hyperplanes; every such
// intersection is produced by generate_candidate for some bid tuple and good
// ordering, and filtered_prices enumerates those inputs with prefix pruning.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "pmx/model.hpp"

namespace pmx {

// Bid `bid` (index into the instance's bids) is indifferent between goods
// `first` < `second` of 0..n and weakly prefers them to every other good.
struct IndifferencePair {
  std::size_t bid = 0;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const IndifferencePair&, const IndifferencePair&) = default;
};

// b_i p_j = b_j p_i and b_i p_k >= b_k p_i for all k in 0..n.
template <class Num>
bool hyperplane_contains(const Bid<Num>& bid, std::size_t i, std::size_t j,
                         const PriceVector<Num>& p, Tolerance tol = {});

template <class Num>
bool hyperplane_contains(const AuctionInstance<Num>& instance, const IndifferencePair& pair,
                         const PriceVector<Num>& p);

// The equation b_i p_j - b_j p_i = 0 as n + 1 coefficients: entry 0 is the
// constant (the p_0 = 1 term), entry g multiplies p_g.
template <class Num>
std::vector<Num> indifference_equation(const Bid<Num>& bid, std::size_t i, std::size_t j);

// Rank of the variable part (p_1..p_n) of the pairs' equations.
template <class Num>
std::size_t equations_rank(const AuctionInstance<Num>& instance,
                           std::span<const IndifferencePair> pairs);

// Step (1-based) at which generate_candidate gave up.
struct InfeasibleAt {
  std::size_t step = 0;
};

template <class Num>
struct GeneratedCandidate {
  PriceVector<Num> price;
  // anchors[k - 1] is the good sigma(m), m < k, realizing the minimum factor
  // C^k_k (0 for the dummy good). Step k's price lies on the hyperplane of
  // bid k between goods anchors[k - 1] and sigma(k).
  std::vector<std::size_t> anchors;
};

// State at the start of step k: factors[l - 1] holds C^l_k for l >= k;
// prices[g] is p_g for goods fixed so far and 0 otherwise, prices[0] = 1.
template <class Num>
struct FactorSnapshot {
  std::size_t step;
  std::span<const Num> factors;
  std::span<const Num> prices;
};

template <class Num>
using FactorObserver = std::function<void(const FactorSnapshot<Num>&)>;

// Fixes p_sigma(1), ..., p_sigma(n) in turn. At step k the price is
// C^k_k b^k_sigma(k), where C^l_k = min_{m<k} p_sigma(m) / b^l_sigma(m) with
// sigma(0) = 0 is maintained incrementally. Returns InfeasibleAt(k) when an
// earlier bid m strictly prefers good sigma(k) to good sigma(m) at the new
// price, or when the new price is zero (b^k_sigma(k) = 0).
//
// bids[k - 1] is b^k; sigma[k - 1] is sigma(k), a permutation of 1..n.
template <class Num>
std::variant<GeneratedCandidate<Num>, InfeasibleAt> generate_candidate(
    std::span<const Bid<Num>* const> bids, std::span<const std::size_t> sigma,
    Tolerance tol = {}, const FactorObserver<Num>& observer = {});

// Closed form of C^l_k from the prices fixed before step k; terms with
// b^l_sigma(m) = 0 are +infinity and skipped. Test oracle for the factors
// maintained by generate_candidate.
template <class Num>
Num factor_values_reference(std::span<const Bid<Num>* const> bids,
                            std::span<const std::size_t> sigma, std::size_t k, std::size_t l,
                            std::span<const Num> prices);

template <class Num>
struct CandidateRecord {
  PriceVector<Num> price;
  // Witness: bid indices of the tuple and the ordering that produced price.
  std::vector<std::size_t> bids;
  std::vector<std::size_t> sigma;
  std::vector<IndifferencePair> hyperplanes;
};

struct CandidateStats {
  std::uint64_t combinations = 0;  // |B|^n n!
  std::uint64_t calls = 0;         // generate_candidate invocations
  std::uint64_t pruned = 0;        // permutations skipped without a call
  std::uint64_t feasible = 0;      // calls returning a price
  std::uint64_t unique = 0;        // distinct prices

  CandidateStats& operator+=(const CandidateStats& other);
};

template <class Num>
struct CandidateSet {
  // Sorted lexicographically by price, one record per distinct price
  // (the first witness found in enumeration order).
  std::vector<CandidateRecord<Num>> candidates;
  CandidateStats stats;
};

struct EnumerationOptions {
  bool pruning = true;
  unsigned threads = 0;  // 0: PMX_THREADS or hardware concurrency
};

template <class Num>
CandidateSet<Num> filtered_prices(const AuctionInstance<Num>& instance,
                                  EnumerationOptions options = {});

// Number of tuples and permutations filtered_prices considers.
std::uint64_t total_combinations(std::size_t bids, std::size_t goods);

}  // namespace pmx

#endif  // PMX_CANDIDATES_HPP_
