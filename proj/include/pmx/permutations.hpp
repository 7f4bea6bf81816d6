#ifndef PMX_PERMUTATIONS_HPP_
#define PMX_PERMUTATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pmx {

std::uint64_t factorial(std::size_t n);

// Permutations of {1..n} in lexicographic order of their image sequences
// (sigma(1), ..., sigma(n)), with the ability to jump past every permutation
// sharing the current length-k prefix.
//
//   PrefixSkipPermutations perms(3);
//   while (!perms.done()) {
//     if (rejected_at(perms.current(), k)) perms.skip(k);
//     else perms.next();
//   }
class PrefixSkipPermutations {
 public:
  explicit PrefixSkipPermutations(std::size_t n);

  std::size_t size() const { return images_.size(); }
  bool done() const { return done_; }
  // current()[m - 1] == sigma(m).
  std::span<const std::size_t> current() const { return images_; }

  // Advances by one permutation. Returns false once exhausted.
  bool next();

  // Retires the current permutation and every later one agreeing with it on
  // positions 1..k, then moves to the first permutation after them. Returns
  // the number retired: (n - k)! when the current one is the first with its
  // prefix. Requires 1 <= k <= n.
  std::uint64_t skip(std::size_t k);

 private:
  std::vector<std::size_t> images_;
  bool done_ = false;
};

}  // namespace pmx

#endif  // PMX_PERMUTATIONS_HPP_
