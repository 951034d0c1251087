#include "monoconv/fock.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "monoconv/errors.hpp"

namespace monoconv::fock {

BasisTuple::BasisTuple(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == 0) throw ValidationError("basis tuple labels start at 1");
    if (k > 0 && labels_[k - 1] < labels_[k]) {
      throw ValidationError("basis tuple must be weakly decreasing: " + to_string());
    }
  }
}

std::string BasisTuple::to_string() const {
  if (labels_.empty()) return "Omega";
  std::string out;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (k > 0) out += "(x)";
    out += "e" + std::to_string(labels_[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------

FockState FockState::basis(const BasisTuple& tuple, const BigRational& coefficient) {
  FockState state;
  state.add(tuple, coefficient);
  return state;
}

BigRational FockState::coefficient(const BasisTuple& tuple) const {
  const auto it = terms_.find(tuple);
  return it == terms_.end() ? BigRational{} : it->second;
}

std::size_t FockState::max_depth() const {
  std::size_t depth = 0;
  for (const auto& [tuple, c] : terms_) depth = std::max(depth, tuple.depth());
  return depth;
}

void FockState::add(const BasisTuple& tuple, const BigRational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(tuple, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockState& FockState::operator+=(const FockState& rhs) {
  for (const auto& [tuple, c] : rhs.terms_) add(tuple, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& rhs) {
  for (const auto& [tuple, c] : rhs.terms_) add(tuple, -c);
  return *this;
}

FockState& FockState::operator*=(const BigRational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [tuple, c] : terms_) c *= scalar;
  return *this;
}

BigRational inner_product(const FockState& lhs, const FockState& rhs) {
  BigRational total;
  for (const auto& [tuple, c] : lhs.terms_) {
    const auto it = rhs.terms_.find(tuple);
    if (it != rhs.terms_.end()) total += c * it->second;
  }
  return total;
}

std::string FockState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [tuple, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << '*' << tuple.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

OperatorWord OperatorWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const bool creation = token.size() > 1 && token.back() == '+';
    const std::string digits =
        token.substr(1, token.size() - 1 - (creation ? 1 : 0));
    const bool ok = token.front() == 'A' && !digits.empty() &&
                    std::all_of(digits.begin(), digits.end(),
                                [](char c) { return c >= '0' && c <= '9'; });
    if (!ok || std::stoul(digits) == 0) {
      throw ValidationError("bad operator letter '" + token + "' (expected A<i> or A<i>+)");
    }
    letters.push_back({static_cast<Label>(std::stoul(digits)),
                       creation ? Sign::kCreation : Sign::kAnnihilation});
  }
  return OperatorWord(std::move(letters));
}

std::size_t OperatorWord::max_rise() const {
  long height = 0;
  long highest = 0;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    height += static_cast<long>(it->sign);
    highest = std::max(highest, height);
  }
  return static_cast<std::size_t>(highest);
}

std::string OperatorWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k > 0) out += ' ';
    out += 'A' + std::to_string(letters_[k].label);
    if (letters_[k].sign == Sign::kCreation) out += '+';
  }
  return out;
}

OperatorWord operator*(const OperatorWord& lhs, const OperatorWord& rhs) {
  std::vector<Letter> letters = lhs.letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return OperatorWord(std::move(letters));
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(Label label, std::vector<Term> terms)
    : label_(label), terms_(std::move(terms)) {
  for (const Term& term : terms_) {
    const auto letters = term.word.letters();
    if (letters.empty()) {
      throw ValidationError("algebra element terms must be nonempty words");
    }
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (letters[k].label != label_) {
        throw ValidationError("word " + term.word.to_string() + " leaves label " +
                              std::to_string(label_));
      }
      if (k > 0 && letters[k].sign == letters[k - 1].sign) {
        throw ValidationError("word " + term.word.to_string() + " does not alternate signs");
      }
    }
  }
}

std::size_t AlgebraElement::max_rise() const {
  std::size_t rise = 0;
  for (const Term& term : terms_) rise = std::max(rise, term.word.max_rise());
  return rise;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out += " + ";
    out += terms_[k].coefficient.to_string() + "*[" + terms_[k].word.to_string() + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------

FockSpace::FockSpace(std::size_t labels, std::size_t depth) : labels_(labels), depth_(depth) {
  if (labels == 0) throw ValidationError("Fock space needs at least one label");
}

void FockSpace::check_label(Label i) const {
  if (i == 0 || i > labels_) {
    throw ValidationError("label " + std::to_string(i) + " outside [1, " +
                          std::to_string(labels_) + "]");
  }
}

FockState FockSpace::annihilate(Label i, const FockState& state) const {
  check_label(i);
  FockState out;
  for (const auto& [tuple, c] : state.terms()) {
    if (tuple.leading() != i) continue;
    BasisTuple tail;
    tail.labels_.assign(tuple.labels_.begin() + 1, tuple.labels_.end());
    out.add(tail, c);
  }
  return out;
}

FockState FockSpace::create(Label i, const FockState& state) const {
  check_label(i);
  FockState out;
  for (const auto& [tuple, c] : state.terms()) {
    if (tuple.depth() >= depth_) continue;
    if (tuple.leading() && i < *tuple.leading()) continue;
    BasisTuple longer;
    longer.labels_.reserve(tuple.depth() + 1);
    longer.labels_.push_back(i);
    longer.labels_.insert(longer.labels_.end(), tuple.labels_.begin(), tuple.labels_.end());
    out.add(longer, c);
  }
  return out;
}

FockState FockSpace::apply(const Letter& letter, const FockState& state) const {
  return letter.sign == Sign::kCreation ? create(letter.label, state)
                                        : annihilate(letter.label, state);
}

FockState FockSpace::apply(const OperatorWord& word, const FockState& state) const {
  FockState current = state;
  const auto letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend() && !current.is_zero(); ++it) {
    current = apply(*it, current);
  }
  return current;
}

FockState FockSpace::apply(const AlgebraElement& element, const FockState& state) const {
  FockState out;
  for (const auto& term : element.terms()) out += term.coefficient * apply(term.word, state);
  return out;
}

FockState FockSpace::apply_position_sum(const FockState& state) const {
  FockState out;
  for (Label i = 1; i <= labels_; ++i) {
    out += annihilate(i, state);
    out += create(i, state);
  }
  return out;
}

BigRational FockSpace::vacuum_expectation(const OperatorWord& word) const {
  return apply(word, FockState::vacuum()).vacuum_coefficient();
}

BigRational FockSpace::vacuum_expectation(const AlgebraElement& element) const {
  return apply(element, FockState::vacuum()).vacuum_coefficient();
}

std::vector<BasisTuple> FockSpace::basis(std::size_t max_depth) const {
  std::vector<BasisTuple> out;
  BasisTuple current;
  auto extend = [&](auto&& self, Label ceiling) -> void {
    out.push_back(current);
    if (current.depth() == max_depth) return;
    for (Label next = 1; next <= ceiling; ++next) {
      current.labels_.push_back(next);
      self(self, next);
      current.labels_.pop_back();
    }
  };
  extend(extend, static_cast<Label>(labels_));
  std::sort(out.begin(), out.end());
  return out;
}

BigRational vacuum_expectation(const OperatorWord& word, std::size_t m, std::size_t depth) {
  return FockSpace(m, depth).vacuum_expectation(word);
}

BigRational position_sum_moment(std::size_t m, std::size_t power, std::size_t depth) {
  const FockSpace space(m, depth);
  FockState state = FockState::vacuum();
  for (std::size_t step = 0; step < power && !state.is_zero(); ++step) {
    state = space.apply_position_sum(state);
  }
  return state.vacuum_coefficient();
}

BigInt moment_via_fock(std::size_t m, std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw SizeError("moment_via_fock: n = " + std::to_string(n) + " exceeds bound " +
                    std::to_string(bound));
  }
  // A 2n-step walk that returns to the vacuum never climbs above n.
  return position_sum_moment(m, 2 * n, n).numerator();
}

// ---------------------------------------------------------------------------

namespace {

using Expr = std::vector<std::pair<BigRational, OperatorWord>>;

Letter ann(Label i) { return {i, Sign::kAnnihilation}; }
Letter cre(Label i) { return {i, Sign::kCreation}; }
OperatorWord word(std::initializer_list<Letter> letters) { return OperatorWord(letters); }

FockState apply_expr(const FockSpace& space, const Expr& expr, const FockState& v) {
  FockState out;
  for (const auto& [c, w] : expr) out += c * space.apply(w, v);
  return out;
}

std::size_t expr_rise(const Expr& expr) {
  std::size_t rise = 0;
  for (const auto& [c, w] : expr) rise = std::max(rise, w.max_rise());
  return rise;
}

class IdentityRunner {
 public:
  explicit IdentityRunner(const FockSpace& space) : space_(space) {}

  void run(IdentityCheck& check, const std::string& labels, const Expr& lhs, const Expr& rhs) {
    const std::size_t rise = std::max(expr_rise(lhs), expr_rise(rhs));
    if (rise > space_.depth()) return;
    for (const BasisTuple& v : basis_up_to(space_.depth() - rise)) {
      const FockState start = FockState::basis(v);
      ++check.cases;
      if (apply_expr(space_, lhs, start) != apply_expr(space_, rhs, start)) {
        if (check.passed) check.witness = labels + " on " + v.to_string();
        check.passed = false;
      }
    }
  }

  const std::vector<BasisTuple>& basis_up_to(std::size_t max_depth) {
    auto it = cache_.find(max_depth);
    if (it == cache_.end()) it = cache_.emplace(max_depth, space_.basis(max_depth)).first;
    return it->second;
  }

 private:
  const FockSpace& space_;
  std::map<std::size_t, std::vector<BasisTuple>> cache_;
};

std::string label_text(std::initializer_list<std::pair<const char*, Label>> labels) {
  std::string out;
  for (const auto& [name, value] : labels) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + '=' + std::to_string(value);
  }
  return out;
}

}  // namespace

std::vector<IdentityCheck> check_operator_identities(std::size_t m, std::size_t depth) {
  if (depth < 3) throw ValidationError("check_operator_identities needs depth >= 3");
  const FockSpace space(m, depth);
  IdentityRunner runner(space);
  const Label top = static_cast<Label>(m);
  const Expr zero;
  auto one = [](OperatorWord w) { return Expr{{BigRational(1), std::move(w)}}; };
  auto gated = [](bool gate, OperatorWord w) {
    return gate ? Expr{{BigRational(1), std::move(w)}} : Expr{};
  };

  std::vector<IdentityCheck> checks;
  checks.reserve(12);  // references below stay valid
  auto add = [&](const char* name) -> IdentityCheck& {
    checks.push_back(IdentityCheck{.name = name});
    return checks.back();
  };

  IdentityCheck& creation_order = add("creation_order");          // A+_i A+_j = 0, i < j
  IdentityCheck& annihilation_order = add("annihilation_order");  // A_j A_i = 0, i < j
  IdentityCheck& mixed = add("mixed_labels");                     // A_i A+_j = 0, i != j
  IdentityCheck& alpha_ann = add("alpha_annihilation");           // A_k A_j A+_j = a_jk A_k
  IdentityCheck& alpha_cre = add("alpha_creation");               // A_j A+_j A+_k = a_jk A+_k
  IdentityCheck& absorb_ann = add("absorb_annihilation");         // A_j A+_j A_k = A_k, j >= k
  IdentityCheck& absorb_cre = add("absorb_creation");             // A+_k A_j A+_j = A+_k, j >= k
  IdentityCheck& product = add("projection_product");             // P_j P_k = P_min(j,k)
  IdentityCheck& nested = add("nested_projection");  // A_j A_k A+_k A+_j = a_kj A_j A+_j
  IdentityCheck& idempotent = add("projection_idempotence");      // (A_i A+_i)^2 = A_i A+_i
  IdentityCheck& number_idempotent = add("number_projection_idempotence");  // (A+_i A_i)^2
  IdentityCheck& adjoint = add("adjointness");  // <A+_i u, v> = <u, A_i v>

  for (Label i = 1; i <= top; ++i) {
    runner.run(idempotent, label_text({{"i", i}}), one(word({ann(i), cre(i), ann(i), cre(i)})),
               one(word({ann(i), cre(i)})));
    runner.run(number_idempotent, label_text({{"i", i}}),
               one(word({cre(i), ann(i), cre(i), ann(i)})), one(word({cre(i), ann(i)})));
    for (Label j = 1; j <= top; ++j) {
      const std::string ij = label_text({{"i", i}, {"j", j}});
      if (i < j) {
        runner.run(creation_order, ij, one(word({cre(i), cre(j)})), zero);
        runner.run(annihilation_order, ij, one(word({ann(j), ann(i)})), zero);
      }
      if (i != j) runner.run(mixed, ij, one(word({ann(i), cre(j)})), zero);
    }
  }

  for (Label j = 1; j <= top; ++j) {
    for (Label k = 1; k <= top; ++k) {
      const std::string jk = label_text({{"j", j}, {"k", k}});
      const bool alpha_jk = j >= k;
      runner.run(alpha_ann, jk, one(word({ann(k), ann(j), cre(j)})), gated(alpha_jk, word({ann(k)})));
      runner.run(alpha_cre, jk, one(word({ann(j), cre(j), cre(k)})), gated(alpha_jk, word({cre(k)})));
      if (j >= k) {
        runner.run(absorb_ann, jk, one(word({ann(j), cre(j), ann(k)})), one(word({ann(k)})));
        runner.run(absorb_cre, jk, one(word({cre(k), ann(j), cre(j)})), one(word({cre(k)})));
      }
      const Label l = std::min(j, k);
      runner.run(product, jk, one(word({ann(j), cre(j), ann(k), cre(k)})),
                 one(word({ann(l), cre(l)})));
      runner.run(nested, jk, one(word({ann(j), ann(k), cre(k), cre(j)})),
                 gated(k >= j, word({ann(j), cre(j)})));
    }
  }

  const auto& tuples = runner.basis_up_to(depth - 1);
  for (Label i = 1; i <= top; ++i) {
    for (const BasisTuple& u : tuples) {
      const FockState up = space.create(i, FockState::basis(u));
      for (const BasisTuple& v : tuples) {
        ++adjoint.cases;
        const FockState down = space.annihilate(i, FockState::basis(v));
        if (inner_product(up, FockState::basis(v)) != inner_product(FockState::basis(u), down)) {
          if (adjoint.passed) {
            adjoint.witness = label_text({{"i", i}}) + " on u=" + u.to_string() +
                              ", v=" + v.to_string();
          }
          adjoint.passed = false;
        }
      }
    }
  }
  return checks;
}

// ---------------------------------------------------------------------------

bool IndependenceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi]; modulo bias is irrelevant at these ranges.
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }

  bool coin() { return (engine_() & 1U) != 0; }

  BigRational coefficient() {
    const long num = static_cast<long>(between(1, 5)) * (coin() ? 1 : -1);
    return BigRational(BigInt(num), BigInt(static_cast<unsigned long>(between(1, 4))));
  }

  AlgebraElement element(Label label, std::size_t max_length) {
    std::vector<AlgebraElement::Term> terms;
    const std::size_t count = between(1, 3);
    for (std::size_t t = 0; t < count; ++t) {
      const std::size_t length = between(1, max_length);
      Sign sign = coin() ? Sign::kCreation : Sign::kAnnihilation;
      std::vector<Letter> letters;
      for (std::size_t k = 0; k < length; ++k) {
        letters.push_back({label, sign});
        sign = sign == Sign::kCreation ? Sign::kAnnihilation : Sign::kCreation;
      }
      terms.push_back({coefficient(), OperatorWord(std::move(letters))});
    }
    return AlgebraElement(label, std::move(terms));
  }

  // Random subset of {lo..hi} in increasing order.
  std::vector<Label> subset(Label lo, Label hi) {
    std::vector<Label> out;
    for (Label l = lo; l <= hi; ++l) {
      if (coin()) out.push_back(l);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

FockState apply_chain(const FockSpace& space, const std::vector<AlgebraElement>& chain,
                      FockState v) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) v = space.apply(*it, v);
  return v;
}

std::string describe(const std::vector<AlgebraElement>& chain) {
  std::string out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) out += "; ";
    out += "p" + std::to_string(chain[k].label()) + " = " + chain[k].to_string();
  }
  return out;
}

}  // namespace

IndependenceReport check_monotone_independence(std::size_t m, std::size_t depth,
                                               std::size_t trials, std::uint64_t seed,
                                               std::size_t max_word_length) {
  const std::size_t length = max_word_length == 0 ? depth / 3 : max_word_length;
  if (length == 0 || 3 * length > depth) {
    throw ValidationError("check_monotone_independence: need 1 <= 3 * word length <= depth");
  }
  const FockSpace space(m, depth);
  IdentityRunner runner(space);
  Sampler sampler(seed);
  const Label top = static_cast<Label>(m);

  IndependenceReport report;
  report.seed = seed;
  report.trials = trials;
  report.max_word_length = length;
  report.checks = {IdentityCheck{.name = "M1"}, IdentityCheck{.name = "M2"},
                   IdentityCheck{.name = "vacuum_absorption"}};
  IdentityCheck& m1 = report.checks[0];
  IdentityCheck& m2 = report.checks[1];
  IdentityCheck& absorption = report.checks[2];

  auto fail = [](IdentityCheck& check, std::string witness) {
    if (check.passed) check.witness = std::move(witness);
    check.passed = false;
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    // p_i p_j p_k v = omega(p_j) p_i p_k v for i < j > k.
    if (top >= 2) {
      const Label j = static_cast<Label>(sampler.between(2, top));
      const Label i = static_cast<Label>(sampler.between(1, j - 1));
      const Label k = static_cast<Label>(sampler.between(1, j - 1));
      const std::vector<AlgebraElement> triple = {sampler.element(i, length),
                                                  sampler.element(j, length),
                                                  sampler.element(k, length)};
      const BigRational middle = space.vacuum_expectation(triple[1]);
      const std::vector<AlgebraElement> outer = {triple[0], triple[2]};
      for (const BasisTuple& v : runner.basis_up_to(depth - 3 * length)) {
        ++m1.cases;
        const FockState start = FockState::basis(v);
        if (apply_chain(space, triple, start) != middle * apply_chain(space, outer, start)) {
          fail(m1, describe(triple) + " on " + v.to_string());
        }
      }
    }

    // omega(p_{j_1} ... p_{j_n}) = prod omega(p_{j_r}) for j_1 > ... > j_v < ... < j_n.
    {
      const Label valley = static_cast<Label>(sampler.between(1, top));
      std::vector<Label> left = sampler.subset(valley + 1, top);
      std::vector<Label> right = sampler.subset(valley + 1, top);
      const std::size_t max_factors = depth / length;
      while (left.size() + right.size() + 1 > max_factors) {
        (left.size() >= right.size() ? left : right).pop_back();
      }
      std::vector<Label> labels(left.rbegin(), left.rend());
      labels.push_back(valley);
      labels.insert(labels.end(), right.begin(), right.end());

      std::vector<AlgebraElement> chain;
      BigRational product = 1;
      for (Label l : labels) {
        chain.push_back(sampler.element(l, length));
        product *= space.vacuum_expectation(chain.back());
      }
      ++m2.cases;
      if (apply_chain(space, chain, FockState::vacuum()).vacuum_coefficient() != product) {
        fail(m2, describe(chain));
      }
    }

    // p_k p_r Omega = omega(p_r) p_k Omega for k < r.
    if (top >= 2) {
      const Label r = static_cast<Label>(sampler.between(2, top));
      const Label k = static_cast<Label>(sampler.between(1, r - 1));
      const std::vector<AlgebraElement> pair = {sampler.element(k, length),
                                                sampler.element(r, length)};
      ++absorption.cases;
      const FockState lhs = apply_chain(space, pair, FockState::vacuum());
      const FockState rhs =
          space.vacuum_expectation(pair[1]) * space.apply(pair[0], FockState::vacuum());
      if (lhs != rhs) fail(absorption, describe(pair));
    }
  }
  return report;
}

}  // namespace monoconv::fock
