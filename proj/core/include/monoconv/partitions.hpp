#ifndef MONOCONV_PARTITIONS_HPP_
#define MONOCONV_PARTITIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monoconv/algebra.hpp"

namespace monoconv::partitions {

inline constexpr std::size_t kDefaultEnumerationBound = 10;

/// Sequence over {-1, +1}. Reading right to left, +1 is a creation and -1 an
/// annihilation, so a string contributes to a vacuum moment only when its
/// total is zero and every suffix sum is nonnegative.
class SignString {
 public:
  SignString() = default;
  // Throws ValidationError if an entry is not +-1.
  explicit SignString(std::vector<int> entries);

  std::span<const std::int8_t> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Zero total and nonnegative suffix sums.
  bool is_balanced() const;

  std::string to_string() const;

  friend bool operator==(const SignString&, const SignString&) = default;

 private:
  std::vector<std::int8_t> entries_;
};

// One block (left, right) of a pair partition, 1-based, left < right.
struct Pair {
  std::size_t left = 0;
  std::size_t right = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
};

/// A non-crossing pairing of {1, ..., 2n}; blocks are sorted by left end.
class PairPartition {
 public:
  PairPartition() = default;

  // Validates coverage, ordering and non-crossing; throws ValidationError.
  static PairPartition from_pairs(std::vector<Pair> pairs);

  // Blocks (1,2), (3,4), ..., (2n-1, 2n).
  static PairPartition interval(std::size_t n);

  std::span<const Pair> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t ground_size() const { return 2 * blocks_.size(); }

  // -1 at every left end, +1 at every right end.
  SignString to_sign_string() const;

  std::string to_string() const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;

 private:
  explicit PairPartition(std::vector<Pair> blocks) : blocks_(std::move(blocks)) {}

  std::vector<Pair> blocks_;
  friend PairPartition sign_string_to_partition(const SignString&);
  friend std::vector<PairPartition> enumerate_nc2(std::size_t, std::size_t);
};

/// Hasse diagram of the nesting order on blocks: B_i precedes B_j iff B_j lies
/// inside B_i. Indices refer to PairPartition::blocks().
struct NestingForest {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> roots;

  // True iff block `outer` encloses (or equals) block `inner`.
  bool is_ancestor(std::size_t outer, std::size_t inner) const;
};

// Lexicographic over balanced sign strings (-1 < +1). Throws SizeError when
// n exceeds `bound`.
std::vector<PairPartition> enumerate_nc2(std::size_t n,
                                         std::size_t bound = kDefaultEnumerationBound);

// Stack matching: each +1 closes the most recent unmatched -1.
// Throws ValidationError unless the string is balanced.
PairPartition sign_string_to_partition(const SignString& signs);

NestingForest nesting_forest(const PairPartition& partition);

enum class LabelCountMethod {
  kForestRecursion,
  // Tries all m^n label maps; oracle only.
  kExhaustive,
};

// Number of maps blocks -> {1..m} that never decrease from an enclosing block
// to an enclosed one.
BigInt count_weakly_monotone_labelings(const PairPartition& partition, std::size_t m,
                                       LabelCountMethod method = LabelCountMethod::kForestRecursion);

// Sum of count_weakly_monotone_labelings over all of NC_2(2n).
BigInt count_nc2wmo(std::size_t m, std::size_t n,
                    std::size_t bound = kDefaultEnumerationBound);

// binom(2n, n) / (n + 1).
BigInt catalan(std::size_t n);

}  // namespace monoconv::partitions

#endif  // MONOCONV_PARTITIONS_HPP_
