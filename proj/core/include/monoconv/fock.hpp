#ifndef MONOCONV_FOCK_HPP_
#define MONOCONV_FOCK_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoconv/algebra.hpp"

namespace monoconv::fock {

using Label = std::uint32_t;

inline constexpr std::size_t kDefaultMomentBound = 5;

/// Simple tensor e_{l_1} (x) e_{l_2} (x) ... with l_1 >= l_2 >= ...; the empty
/// tuple is the vacuum. labels()[0] is the leftmost (most recently created)
/// factor.
class BasisTuple {
 public:
  BasisTuple() = default;
  // Throws ValidationError unless weakly decreasing with all labels >= 1.
  explicit BasisTuple(std::vector<Label> labels);

  static BasisTuple vacuum() { return {}; }

  std::span<const Label> labels() const { return labels_; }
  std::size_t depth() const { return labels_.size(); }
  bool is_vacuum() const { return labels_.empty(); }
  std::optional<Label> leading() const {
    return labels_.empty() ? std::nullopt : std::optional<Label>(labels_.front());
  }

  // "Omega" or "e3(x)e2(x)e2".
  std::string to_string() const;

  friend auto operator<=>(const BasisTuple&, const BasisTuple&) = default;

 private:
  std::vector<Label> labels_;
  friend class FockSpace;
};

/// Finite exact linear combination of basis tuples. Zero coefficients are
/// never stored.
class FockState {
 public:
  using Terms = std::map<BasisTuple, BigRational>;

  FockState() = default;
  static FockState vacuum() { return basis(BasisTuple::vacuum()); }
  static FockState basis(const BasisTuple& tuple, const BigRational& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coefficient(const BasisTuple& tuple) const;
  BigRational vacuum_coefficient() const { return coefficient(BasisTuple::vacuum()); }
  std::size_t max_depth() const;

  void add(const BasisTuple& tuple, const BigRational& coefficient);

  FockState& operator+=(const FockState& rhs);
  FockState& operator-=(const FockState& rhs);
  FockState& operator*=(const BigRational& scalar);
  friend FockState operator+(FockState lhs, const FockState& rhs) { return lhs += rhs; }
  friend FockState operator-(FockState lhs, const FockState& rhs) { return lhs -= rhs; }
  friend FockState operator*(const BigRational& c, FockState s) { return s *= c; }
  friend bool operator==(const FockState&, const FockState&) = default;

  // Real inner product in the orthonormal tuple basis.
  friend BigRational inner_product(const FockState& lhs, const FockState& rhs);

  std::string to_string() const;

 private:
  Terms terms_;
};

enum class Sign : std::int8_t { kAnnihilation = -1, kCreation = 1 };

struct Letter {
  Label label = 1;
  Sign sign = Sign::kAnnihilation;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of creation/annihilation operators written left to right and
/// applied right to left.
class OperatorWord {
 public:
  OperatorWord() = default;
  explicit OperatorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Space-separated letters: "A2" annihilates with label 2, "A2+" creates.
  static OperatorWord parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  // Highest net number of creations reached while applying the word.
  std::size_t max_rise() const;

  std::string to_string() const;

  friend OperatorWord operator*(const OperatorWord& lhs, const OperatorWord& rhs);
  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Element of the *-algebra generated by A_i, A_i^+ for one label i, without
/// constant term. Every word alternates creation and annihilation.
class AlgebraElement {
 public:
  struct Term {
    BigRational coefficient;
    OperatorWord word;
  };

  // Throws ValidationError on a foreign label, an empty word, or two adjacent
  // letters with the same sign.
  AlgebraElement(Label label, std::vector<Term> terms);

  Label label() const { return label_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t max_rise() const;
  std::string to_string() const;

 private:
  Label label_;
  std::vector<Term> terms_;
};

/// Weakly monotone Fock space over labels {1..m}, truncated at `depth` tensor
/// factors. A creation that would exceed the depth drops the term.
class FockSpace {
 public:
  // Throws ValidationError if labels == 0.
  FockSpace(std::size_t labels, std::size_t depth);

  std::size_t labels() const { return labels_; }
  std::size_t depth() const { return depth_; }

  FockState annihilate(Label i, const FockState& state) const;
  FockState create(Label i, const FockState& state) const;
  FockState apply(const Letter& letter, const FockState& state) const;
  FockState apply(const OperatorWord& word, const FockState& state) const;
  FockState apply(const AlgebraElement& element, const FockState& state) const;

  // Sum over i of (A_i + A_i^+).
  FockState apply_position_sum(const FockState& state) const;

  // <Omega, w Omega>.
  BigRational vacuum_expectation(const OperatorWord& word) const;
  BigRational vacuum_expectation(const AlgebraElement& element) const;

  // All weakly decreasing tuples over {1..m} with at most max_depth factors,
  // in increasing tuple order.
  std::vector<BasisTuple> basis(std::size_t max_depth) const;

 private:
  void check_label(Label i) const;

  std::size_t labels_;
  std::size_t depth_;
};

// <Omega, w Omega> in the m-label space truncated at `depth`.
BigRational vacuum_expectation(const OperatorWord& word, std::size_t m, std::size_t depth);

// Omega-coefficient of S^power Omega with S = sum_i (A_i + A_i^+).
BigRational position_sum_moment(std::size_t m, std::size_t power, std::size_t depth);

// The 2n-th vacuum moment of G_1 + ... + G_m, computed at depth n.
// Throws SizeError if n > bound.
BigInt moment_via_fock(std::size_t m, std::size_t n, std::size_t bound = kDefaultMomentBound);

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  // First counterexample: labels and basis tuple.
  std::optional<std::string> witness = std::nullopt;
};

// Creation/annihilation identities (order relations, alpha gates, absorption,
// projection products and idempotence, adjointness) on every basis tuple that
// leaves room for the largest word. Requires depth >= 3.
std::vector<IdentityCheck> check_operator_identities(std::size_t m, std::size_t depth);

struct IndependenceReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t max_word_length = 0;
  std::vector<IdentityCheck> checks;

  bool passed() const;
};

// Seeded random elements p_i; checks the three-factor reduction
// p_i p_j p_k = omega(p_j) p_i p_k for i < j > k, vacuum factorisation along
// V-shaped label sequences, and p_k p_r Omega = omega(p_r) p_k Omega for k < r.
// max_word_length == 0 picks depth / 3. Throws ValidationError when
// 3 * max_word_length > depth.
IndependenceReport check_monotone_independence(std::size_t m, std::size_t depth,
                                               std::size_t trials, std::uint64_t seed,
                                               std::size_t max_word_length = 0);

}  // namespace monoconv::fock

#endif  // MONOCONV_FOCK_HPP_
