#include "pmx/permutations.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pmx {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

PrefixSkipPermutations::PrefixSkipPermutations(std::size_t n) : images_(n) {
  if (n == 0) throw std::invalid_argument("permutation size must be at least 1");
  std::iota(images_.begin(), images_.end(), std::size_t{1});
}

bool PrefixSkipPermutations::next() {
  if (done_) return false;
  if (!std::next_permutation(images_.begin(), images_.end())) done_ = true;
  return !done_;
}

std::uint64_t PrefixSkipPermutations::skip(std::size_t k) {
  assert(k >= 1 && k <= images_.size() && !done_);
  // Permutations of the suffix from the current one to the descending one,
  // i.e. (n - k)! minus the lexicographic rank of the current suffix.
  const std::size_t n = images_.size();
  std::uint64_t rank = 0;
  for (std::size_t i = k; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += images_[j] < images_[i] ? 1 : 0;
    rank += smaller * factorial(n - 1 - i);
  }
  std::sort(images_.begin() + static_cast<std::ptrdiff_t>(k), images_.end(), std::greater<>());
  next();
  return factorial(n - k) - rank;
}

}  // namespace pmx
