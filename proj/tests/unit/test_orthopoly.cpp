#include "doctest.h"

#include <string>
#include <vector>

#include "monoconv/errors.hpp"
#include "monoconv/orthopoly.hpp"
#include "monoconv/partitions.hpp"
#include "support/reference_tables.hpp"

namespace op = monoconv::orthopoly;
using monoconv::BigRational;
using monoconv::DensePolynomial;

namespace {

BigRational q(const char* text) { return BigRational::parse(text); }

std::vector<BigRational> semicircle_moments(std::size_t max_n) {
  std::vector<BigRational> out(2 * max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) out[2 * n] = monoconv::partitions::catalan(n);
  return out;
}

DensePolynomial printed(std::size_t n) {
  std::vector<BigRational> c;
  for (auto s : reference::kOrthogonalPolynomials[n - 1]) c.push_back(BigRational::parse(s));
  return DensePolynomial(c);
}

}  // namespace

TEST_CASE("semicircle recurrence coefficients are all one") {
  const auto moments = semicircle_moments(10);
  const auto jc = op::jacobi_from_moments(moments, 10);
  REQUIRE(jc.beta.size() == 11);
  for (const auto& b : jc.beta) CHECK(b == BigRational(1));
  for (const auto& a : jc.alpha) CHECK(a.is_zero());
  const auto polys = op::monic_orthogonal_polys(jc, 8);
  const auto report = op::verify_orthogonality(polys, moments, &jc);
  CHECK(report.passed());
  CHECK(report.pairs_checked == 36);
}

TEST_CASE("second power: first coefficients") {
  const auto moments = op::full_moments(2, 2);
  CHECK(moments == std::vector<BigRational>{1, 0, 2, 0, 7});
  const auto jc = op::jacobi_from_moments(moments, 2);
  CHECK(jc.beta[1] == BigRational(2));
  CHECK(jc.beta[2] == q("3/2"));
}

TEST_CASE("second power: polynomials") {
  const auto moments = op::full_moments(2, 10);
  const auto jc = op::jacobi_from_moments(moments, 10);
  const auto polys = op::monic_orthogonal_polys(jc, 10);
  const auto x = DensePolynomial::variable();
  CHECK(polys[1] == x);
  CHECK(polys[2] == x * x - DensePolynomial::constant(2));
  CHECK(polys[2] != printed(2));
  CHECK(polys[4] == printed(4));
  CHECK(polys[7] == printed(7));
  for (std::size_t n = 3; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(polys[n] == printed(n));
  }
}

TEST_CASE("parity, monicity and orthogonality") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto moments = op::full_moments(m, 9);
    const auto jc = op::jacobi_from_moments(moments, 9);
    const auto polys = op::monic_orthogonal_polys(jc, 9);
    for (std::size_t n = 0; n < polys.size(); ++n) {
      REQUIRE(polys[n].degree() == static_cast<int>(n));
      REQUIRE(polys[n].leading_coefficient() == BigRational(1));
      for (std::size_t k = 0; k <= n; ++k) {
        if ((n - k) % 2 == 1) REQUIRE(polys[n].coefficient(k).is_zero());
      }
    }
    const auto report = op::verify_orthogonality(polys, moments, &jc);
    CHECK(report.passed());
    for (const auto& norm : report.norms) CHECK(norm.sign() > 0);
  }
}

TEST_CASE("coefficients are positive and agree with Hankel determinants") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto moments = op::full_moments(m, 8);
    const auto jc = op::jacobi_from_moments(moments, 8);
    for (std::size_t k = 0; k <= 8; ++k) REQUIRE(jc.beta[k].sign() > 0);

    const auto minors = op::hankel_leading_minors(moments, 9);
    for (const auto& h : minors) REQUIRE(h.sign() > 0);
    // beta_k = H_{k+1} H_{k-1} / H_k^2 with H_0 = 1.
    for (std::size_t k = 1; k <= 8; ++k) {
      const BigRational prev = k >= 2 ? minors[k - 2] : BigRational(1);
      REQUIRE(jc.beta[k] == minors[k] * prev / (minors[k - 1] * minors[k - 1]));
    }
  }
}

TEST_CASE("even-index Hankel matrices of the tables are positive definite") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto full = op::full_moments(m, 8);
    std::vector<BigRational> even;
    for (std::size_t n = 0; n <= 8; ++n) even.push_back(full[2 * n]);
    for (const auto& h : op::hankel_leading_minors(even, 5)) REQUIRE(h.sign() > 0);
  }
}

TEST_CASE("errors") {
  const std::vector<BigRational> short_list = {1, 0, 1};
  CHECK_THROWS_AS(op::jacobi_from_moments(short_list, 2), monoconv::ValidationError);
  const std::vector<BigRational> odd = {1, q("1/2"), 1};
  CHECK_THROWS_AS(op::jacobi_from_moments(odd, 1), monoconv::ValidationError);
  const std::vector<BigRational> degenerate = {1, 0, 0, 0, 0};
  try {
    op::jacobi_from_moments(degenerate, 2);
    FAIL("expected failure");
  } catch (const monoconv::ValidationError& err) {
    CHECK(std::string(err.what()) == "not positive definite at order 1");
  }
  const std::vector<BigRational> negative = {1, 0, 1, 0, q("1/2")};
  CHECK_THROWS_WITH_AS(op::jacobi_from_moments(negative, 2), "not positive definite at order 2",
                       monoconv::ValidationError);
  const std::vector<BigRational> zero_mass = {0, 0, 1};
  CHECK_THROWS_WITH_AS(op::jacobi_from_moments(zero_mass, 1), "not positive definite at order 0",
                       monoconv::ValidationError);
}

TEST_CASE("orthogonality failures are reported") {
  const auto moments = op::full_moments(2, 4);
  std::vector<DensePolynomial> polys = {DensePolynomial::constant(1),
                                        DensePolynomial::variable(),
                                        printed(2)};
  const auto report = op::verify_orthogonality(polys, moments);
  CHECK_FALSE(report.passed());
  REQUIRE(report.nonzero.size() == 2);
  CHECK(report.nonzero[0].i == 0);
  CHECK(report.nonzero[0].j == 2);
  CHECK(report.nonzero[0].value == BigRational(2));
}
