#include "doctest.h"

#include <string>
#include <vector>

#include "monoconv/errors.hpp"
#include "monoconv/fock.hpp"
#include "monoconv/moments.hpp"
#include "monoconv/partitions.hpp"

namespace fk = monoconv::fock;
using fk::BasisTuple;
using fk::FockSpace;
using fk::FockState;
using fk::OperatorWord;
using monoconv::BigInt;
using monoconv::BigRational;

namespace {

FockState e(std::vector<fk::Label> labels) { return FockState::basis(BasisTuple(std::move(labels))); }

}  // namespace

TEST_CASE("basis tuples") {
  CHECK(BasisTuple({3, 2, 2}).depth() == 3);
  CHECK(BasisTuple({3, 2, 2}).leading() == std::optional<fk::Label>(3));
  CHECK_FALSE(BasisTuple::vacuum().leading().has_value());
  CHECK_THROWS_AS(BasisTuple({1, 2}), monoconv::ValidationError);
  CHECK_THROWS_AS(BasisTuple({0}), monoconv::ValidationError);
  CHECK(BasisTuple::vacuum().to_string() == "Omega");
}

TEST_CASE("states drop zero coefficients") {
  FockState s = e({1});
  s -= e({1});
  CHECK(s.is_zero());
  FockState t = e({2, 1}) + BigRational(3) * e({1});
  CHECK(t.coefficient(BasisTuple({1})) == BigRational(3));
  CHECK(t.max_depth() == 2);
  CHECK(inner_product(t, t) == BigRational(10));
}

TEST_CASE("annihilation") {
  const FockSpace space(3, 4);
  CHECK(space.annihilate(1, FockState::vacuum()).is_zero());
  CHECK(space.annihilate(2, e({2, 1})) == e({1}));
  CHECK(space.annihilate(1, e({2, 1})).is_zero());
  CHECK_THROWS_AS(space.annihilate(4, e({1})), monoconv::ValidationError);
}

TEST_CASE("creation") {
  const FockSpace space(3, 4);
  CHECK(space.create(1, FockState::vacuum()) == e({1}));
  CHECK(space.create(1, e({2})).is_zero());
  CHECK(space.create(3, e({2, 2})) == e({3, 2, 2}));
  CHECK(space.create(2, e({2, 2})) == e({2, 2, 2}));
  SUBCASE("truncation drops terms at full depth") {
    const FockSpace shallow(2, 2);
    CHECK(shallow.create(2, e({1, 1})).is_zero());
  }
}

TEST_CASE("words") {
  CHECK(OperatorWord::parse("A2 A1+").size() == 2);
  CHECK(OperatorWord::parse("A1 A2 A2+ A1+").max_rise() == 2);
  CHECK(OperatorWord::parse("A1+ A1").max_rise() == 0);
  CHECK(OperatorWord::parse("A1 A1+").max_rise() == 1);
  CHECK_THROWS_AS(OperatorWord::parse("B1"), monoconv::ValidationError);
  CHECK_THROWS_AS(OperatorWord::parse("A0"), monoconv::ValidationError);
  const auto w = OperatorWord::parse("A1 A2+");
  CHECK(OperatorWord::parse(w.to_string()) == w);
}

TEST_CASE("vacuum expectations of words") {
  CHECK(fk::vacuum_expectation(OperatorWord::parse("A1 A1+"), 1, 2) == BigRational(1));
  CHECK(fk::vacuum_expectation(OperatorWord::parse("A1+ A1"), 1, 2) == BigRational(0));
  CHECK(fk::vacuum_expectation(OperatorWord::parse("A1 A2 A2+ A1+"), 2, 2) == BigRational(1));
  CHECK(fk::vacuum_expectation(OperatorWord::parse("A2 A1 A1+ A2+"), 2, 2) == BigRational(0));
}

TEST_CASE("algebra elements") {
  const auto word = OperatorWord::parse("A1 A1+");
  CHECK_NOTHROW(fk::AlgebraElement(1, {{BigRational(2), word}}));
  CHECK_THROWS_AS(fk::AlgebraElement(2, {{BigRational(2), word}}), monoconv::ValidationError);
  CHECK_THROWS_AS(fk::AlgebraElement(1, {{BigRational(1), OperatorWord::parse("A1 A1")}}),
                  monoconv::ValidationError);
  const FockSpace space(2, 3);
  const fk::AlgebraElement p(1, {{BigRational(3), word}, {BigRational(-1), OperatorWord::parse("A1+")}});
  CHECK(space.vacuum_expectation(p) == BigRational(3));
}

TEST_CASE("moments from the operator model") {
  const std::vector<int> catalan = {1, 1, 2, 5, 14};
  for (std::size_t n = 1; n <= 4; ++n) CHECK(fk::moment_via_fock(1, n) == catalan[n]);
  CHECK(fk::moment_via_fock(2, 2) == 7);
  CHECK(fk::moment_via_fock(3, 3) == 87);
  CHECK_THROWS_AS(fk::moment_via_fock(2, 6), monoconv::SizeError);
}

TEST_CASE("depth n suffices for the 2n-th moment") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const BigRational at_n = fk::position_sum_moment(m, 2 * n, n);
      CHECK(fk::position_sum_moment(m, 2 * n, n + 1) == at_n);
      CHECK(fk::position_sum_moment(m, 2 * n, n + 3) == at_n);
      if (n > 1) CHECK(fk::position_sum_moment(m, 2 * n, n - 1) != at_n);
    }
  }
}

TEST_CASE("odd moments vanish") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(fk::position_sum_moment(m, 2 * n + 1, n + 1).is_zero());
    }
  }
}

TEST_CASE("operator model equals the recurrence and the labeled count") {
  const monoconv::moments::MomentTable table(3, 5);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const BigInt via_fock = fk::moment_via_fock(m, n);
      REQUIRE(via_fock == table.at(m, n));
      REQUIRE(via_fock == monoconv::partitions::count_nc2wmo(m, n));
    }
  }
}

TEST_CASE("operator identities") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t depth = 3; depth <= 6; ++depth) {
      for (const auto& check : fk::check_operator_identities(m, depth)) {
        CAPTURE(m);
        CAPTURE(depth);
        CAPTURE(check.name);
        CAPTURE(check.witness.value_or(""));
        REQUIRE(check.passed);
        if (m >= 2) REQUIRE(check.cases > 0);
      }
    }
  }
  CHECK(fk::check_operator_identities(2, 4).size() == 12);
  CHECK_THROWS_AS(fk::check_operator_identities(2, 2), monoconv::ValidationError);
}

TEST_CASE("the zero table entry for alpha") {
  const FockSpace space(2, 4);
  const auto w = OperatorWord::parse("A2 A1 A1+");
  CHECK(space.apply(w, FockState::vacuum()).is_zero());
  CHECK(space.apply(w, e({1})).is_zero());
}

TEST_CASE("projections are idempotent") {
  const FockSpace space(3, 5);
  for (fk::Label i = 1; i <= 3; ++i) {
    const OperatorWord p({{i, fk::Sign::kAnnihilation}, {i, fk::Sign::kCreation}});
    for (const auto& tuple : space.basis(4)) {
      const auto once = space.apply(p, FockState::basis(tuple));
      REQUIRE(space.apply(p, once) == once);
    }
  }
}

TEST_CASE("adjointness on basis vectors") {
  const FockSpace space(3, 4);
  const auto basis = space.basis(3);
  for (fk::Label i = 1; i <= 3; ++i) {
    for (const auto& u : basis) {
      for (const auto& v : basis) {
        const auto lhs = inner_product(space.create(i, FockState::basis(u)), FockState::basis(v));
        const auto rhs = inner_product(FockState::basis(u), space.annihilate(i, FockState::basis(v)));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("monotone independence on seeded samples") {
  const auto report = fk::check_monotone_independence(3, 8, 100, 2024);
  CHECK(report.seed == 2024);
  CHECK(report.trials == 100);
  for (const auto& check : report.checks) {
    CAPTURE(check.name);
    CAPTURE(check.witness.value_or(""));
    CHECK(check.passed);
    CHECK(check.cases > 0);
  }
  CHECK(report.passed());
  CHECK_THROWS_AS(fk::check_monotone_independence(3, 5, 1, 1, 2), monoconv::ValidationError);
}

TEST_CASE("independence reports are reproducible") {
  const auto a = fk::check_monotone_independence(3, 6, 20, 99);
  const auto b = fk::check_monotone_independence(3, 6, 20, 99);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) CHECK(a.checks[k].cases == b.checks[k].cases);
}
