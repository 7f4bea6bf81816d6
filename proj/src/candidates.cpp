#include "pmx/candidates.hpp"

#include <algorithm>

#include "pmx/linear_algebra.hpp"
#include "pmx/parallel.hpp"
#include "pmx/permutations.hpp"

namespace pmx {

template <class Num>
bool hyperplane_contains(const Bid<Num>& bid, std::size_t i, std::size_t j,
                         const PriceVector<Num>& p, Tolerance tol) {
  if (i == j || i > p.goods() || j > p.goods()) return false;
  if (!p.all_positive()) return false;
  const Num bi = bid.value(i);
  const Num pi = p.at(i);
  if (!approx_eq(Num(bi * p.at(j)), Num(bid.value(j) * pi), tol)) return false;
  for (std::size_t k = 0; k <= p.goods(); ++k) {
    if (!approx_ge(Num(bi * p.at(k)), Num(bid.value(k) * pi), tol)) return false;
  }
  return true;
}

template <class Num>
bool hyperplane_contains(const AuctionInstance<Num>& instance, const IndifferencePair& pair,
                         const PriceVector<Num>& p) {
  return hyperplane_contains(instance.bids.at(pair.bid), pair.first, pair.second, p,
                             instance.tolerance);
}

template <class Num>
std::vector<Num> indifference_equation(const Bid<Num>& bid, std::size_t i, std::size_t j) {
  std::vector<Num> row(bid.goods() + 1, Num(0));
  row[j] += bid.value(i);
  row[i] -= bid.value(j);
  return row;
}

template <class Num>
std::size_t equations_rank(const AuctionInstance<Num>& instance,
                           std::span<const IndifferencePair> pairs) {
  DenseMatrix<Num> rows;
  for (const auto& pair : pairs) {
    auto eq = indifference_equation(instance.bids.at(pair.bid), pair.first, pair.second);
    rows.emplace_back(eq.begin() + 1, eq.end());
  }
  return matrix_rank(std::move(rows), instance.tolerance);
}

template <class Num>
std::variant<GeneratedCandidate<Num>, InfeasibleAt> generate_candidate(
    std::span<const Bid<Num>* const> bids, std::span<const std::size_t> sigma, Tolerance tol,
    const FactorObserver<Num>& observer) {
  const std::size_t n = sigma.size();
  std::vector<Num> factors(n, Num(1));       // C^l, index l - 1
  std::vector<std::size_t> anchor(n, 0);     // argmin good behind C^l
  std::vector<Num> prices(n + 1, Num(0));
  prices[0] = Num(1);

  for (std::size_t k = 1; k <= n; ++k) {
    if (observer) observer(FactorSnapshot<Num>{k, factors, prices});
    const Bid<Num>& bid_k = *bids[k - 1];
    const std::size_t good = sigma[k - 1];
    const Num value = bid_k.value(good);
    if (value == 0) return InfeasibleAt{k};
    const Num price = factors[k - 1] * value;
    for (std::size_t m = 1; m < k; ++m) {
      const Bid<Num>& bid_m = *bids[m - 1];
      const std::size_t own = sigma[m - 1];
      if (definitely_lt(Num(bid_m.value(own) * price), Num(bid_m.value(good) * prices[own]), tol))
        return InfeasibleAt{k};
    }
    prices[good] = price;
    for (std::size_t l = k + 1; l <= n; ++l) {
      // p < C b is false whenever b = 0, so the division below never sees 0.
      const Num bl = bids[l - 1]->value(good);
      if (price < factors[l - 1] * bl) {
        factors[l - 1] = price / bl;
        anchor[l - 1] = good;
      }
    }
  }
  GeneratedCandidate<Num> out;
  out.price = PriceVector<Num>(std::vector<Num>(prices.begin() + 1, prices.end()));
  out.anchors = std::move(anchor);
  return out;
}

template <class Num>
Num factor_values_reference(std::span<const Bid<Num>* const> bids,
                            std::span<const std::size_t> sigma, std::size_t k, std::size_t l,
                            std::span<const Num> prices) {
  const Bid<Num>& bid_l = *bids[l - 1];
  Num best(1);  // m = 0: p_0 / b_0
  for (std::size_t m = 1; m < k; ++m) {
    const std::size_t good = sigma[m - 1];
    const Num b = bid_l.value(good);
    if (b == 0) continue;
    Num ratio = prices[good] / b;
    if (ratio < best) best = ratio;
  }
  return best;
}

CandidateStats& CandidateStats::operator+=(const CandidateStats& other) {
  combinations += other.combinations;
  calls += other.calls;
  pruned += other.pruned;
  feasible += other.feasible;
  unique += other.unique;
  return *this;
}

std::uint64_t total_combinations(std::size_t bids, std::size_t goods) {
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < goods; ++i) tuples *= bids;
  return tuples * factorial(goods);
}

namespace {

template <class Num>
bool same_price(const PriceVector<Num>& a, const PriceVector<Num>& b, Tolerance tol) {
  for (std::size_t i = 1; i <= a.goods(); ++i) {
    if (!approx_eq(a.at(i), b.at(i), tol)) return false;
  }
  return true;
}

// Keeps the first record of each distinct price and sorts the survivors.
template <class Num>
std::vector<CandidateRecord<Num>> deduplicate(std::vector<CandidateRecord<Num>> records,
                                              Tolerance tol) {
  auto by_price = [](const CandidateRecord<Num>& a, const CandidateRecord<Num>& b) {
    return a.price < b.price;
  };
  if constexpr (NumTraits<Num>::kExact) {
    std::stable_sort(records.begin(), records.end(), by_price);
    auto last = std::unique(records.begin(), records.end(),
                            [](const auto& a, const auto& b) { return a.price == b.price; });
    records.erase(last, records.end());
    return records;
  } else {
    std::vector<CandidateRecord<Num>> kept;
    for (auto& record : records) {
      bool seen = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
        return same_price(k.price, record.price, tol);
      });
      if (!seen) kept.push_back(std::move(record));
    }
    std::sort(kept.begin(), kept.end(), by_price);
    return kept;
  }
}

template <class Num>
CandidateRecord<Num> make_record(GeneratedCandidate<Num> generated,
                                 const std::vector<std::size_t>& tuple,
                                 std::span<const std::size_t> sigma) {
  CandidateRecord<Num> record;
  record.price = std::move(generated.price);
  record.bids = tuple;
  record.sigma.assign(sigma.begin(), sigma.end());
  for (std::size_t k = 1; k <= sigma.size(); ++k) {
    const std::size_t a = generated.anchors[k - 1];
    const std::size_t g = sigma[k - 1];
    record.hyperplanes.push_back({tuple[k - 1], std::min(a, g), std::max(a, g)});
  }
  return record;
}

}  // namespace

template <class Num>
CandidateSet<Num> filtered_prices(const AuctionInstance<Num>& instance,
                                  EnumerationOptions options) {
  const std::size_t n = instance.goods;
  const std::size_t bid_count = instance.bids.size();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) tuples *= bid_count;

  const unsigned workers = worker_count(options.threads);
  const std::size_t chunks = chunk_count(tuples, workers);
  std::vector<std::vector<CandidateRecord<Num>>> found(chunks);
  std::vector<CandidateStats> chunk_stats(chunks);

  parallel_chunks(tuples, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    CandidateStats& stats = chunk_stats[chunk];
    std::vector<CandidateRecord<Num>> local;
    std::vector<std::size_t> tuple(n);
    std::vector<const Bid<Num>*> tuple_bids(n);
    for (std::size_t t = begin; t < end; ++t) {
      // Tuple index in base |B|, most significant digit first.
      std::size_t rest = t;
      for (std::size_t pos = n; pos-- > 0;) {
        tuple[pos] = rest % bid_count;
        rest /= bid_count;
        tuple_bids[pos] = &instance.bids[tuple[pos]];
      }
      PrefixSkipPermutations perms(n);
      while (!perms.done()) {
        ++stats.calls;
        auto result = generate_candidate<Num>(tuple_bids, perms.current(), instance.tolerance);
        if (auto* generated = std::get_if<GeneratedCandidate<Num>>(&result)) {
          ++stats.feasible;
          local.push_back(make_record(std::move(*generated), tuple, perms.current()));
          perms.next();
        } else if (options.pruning) {
          stats.pruned += perms.skip(std::get<InfeasibleAt>(result).step) - 1;
        } else {
          perms.next();
        }
      }
    }
    found[chunk] = deduplicate(std::move(local), instance.tolerance);
  });

  CandidateSet<Num> out;
  std::vector<CandidateRecord<Num>> merged;
  for (std::size_t c = 0; c < chunks; ++c) {
    out.stats += chunk_stats[c];
    std::move(found[c].begin(), found[c].end(), std::back_inserter(merged));
  }
  // Chunk-local dedup sorted each chunk; restore enumeration order so the
  // first witness wins globally the same way it does within a chunk.
  std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    return a.bids < b.bids || (a.bids == b.bids && a.sigma < b.sigma);
  });
  out.candidates = deduplicate(std::move(merged), instance.tolerance);
  out.stats.combinations = total_combinations(bid_count, n);
  out.stats.unique = out.candidates.size();
  return out;
}

#define PMX_INSTANTIATE_CANDIDATES(Num)                                                           \
  template bool hyperplane_contains(const Bid<Num>&, std::size_t, std::size_t,                    \
                                    const PriceVector<Num>&, Tolerance);                          \
  template bool hyperplane_contains(const AuctionInstance<Num>&, const IndifferencePair&,         \
                                    const PriceVector<Num>&);                                     \
  template std::vector<Num> indifference_equation(const Bid<Num>&, std::size_t, std::size_t);     \
  template std::size_t equations_rank(const AuctionInstance<Num>&,                                \
                                      std::span<const IndifferencePair>);                         \
  template std::variant<GeneratedCandidate<Num>, InfeasibleAt> generate_candidate(                \
      std::span<const Bid<Num>* const>, std::span<const std::size_t>, Tolerance,                  \
      const FactorObserver<Num>&);                                                                \
  template Num factor_values_reference(std::span<const Bid<Num>* const>,                          \
                                       std::span<const std::size_t>, std::size_t, std::size_t,    \
                                       std::span<const Num>);                                     \
  template CandidateSet<Num> filtered_prices(const AuctionInstance<Num>&, EnumerationOptions);

PMX_INSTANTIATE_CANDIDATES(Rational)
PMX_INSTANTIATE_CANDIDATES(double)

}  // namespace pmx
