#include "doctest.h"

#include <string>
#include <vector>

#include "monoconv/errors.hpp"
#include "monoconv/moments.hpp"
#include "monoconv/partitions.hpp"
#include "support/reference_tables.hpp"
#include "support/oracles.hpp"

namespace mm = monoconv::moments;
using monoconv::BigInt;
using monoconv::BigRational;

TEST_CASE("m = 2 recurrence") {
  const auto d = mm::moments_m2(12);
  CHECK(d[0] == 1);
  CHECK(d[1] == 2);
  CHECK(d[2] == 7);
  CHECK(d[3] == 29);
  CHECK(d[8] == 82595);
  CHECK(d == mm::moments_general(2, 12));
}

TEST_CASE("general recurrence") {
  const auto d5 = mm::moments_general(5, 4);
  CHECK(d5 == std::vector<BigInt>{1, 5, 40, 365, 3555});
  CHECK(mm::moments_general(10, 6)[6] == 18713619);
  const auto catalan = oracle::catalan_numbers(25);
  const auto d1 = mm::moments_general(1, 25);
  for (std::size_t n = 0; n <= 25; ++n) REQUIRE(d1[n] == BigInt(std::to_string(catalan[n])));
  CHECK_THROWS_AS(mm::moments_general(0, 3), monoconv::ValidationError);
}

TEST_CASE("table rows reproduce the published rows") {
  const mm::MomentTable table(10, 8);
  for (std::size_t r = 0; r < reference::kMomentRows.size(); ++r) {
    const std::size_t m = r + reference::kFirstMomentRow;
    for (std::size_t n = 0; n < reference::kMomentRows[r].size(); ++n) {
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(table.at(m, n) == BigInt(std::string(reference::kMomentRows[r][n])));
    }
  }
  CHECK_THROWS_AS(table.at(11, 0), std::out_of_range);
  CHECK_THROWS_AS(table.at(0, 0), std::out_of_range);
  CHECK_THROWS_AS(table.at(1, 9), std::out_of_range);
}

TEST_CASE("table invariants") {
  const mm::MomentTable table(12, 10);
  for (std::size_t m = 1; m <= 12; ++m) {
    REQUIRE(table.at(m, 0) == 1);
    REQUIRE(table.at(m, 1) == static_cast<unsigned long>(m));
    for (std::size_t n = 1; n <= 10; ++n) {
      REQUIRE(table.at(m, n) > 0);
      if (m > 1) REQUIRE(table.at(m, n) > table.at(m - 1, n));
    }
  }
}

TEST_CASE("moment polynomials") {
  CHECK(mm::moment_polynomial(0).poly == monoconv::DensePolynomial::constant(1));
  for (std::size_t n = 0; n < reference::kMomentPolynomials.size(); ++n) {
    std::vector<BigRational> c;
    for (auto s : reference::kMomentPolynomials[n]) c.push_back(BigRational::parse(s));
    CAPTURE(n);
    CHECK(mm::moment_polynomial(n).poly == monoconv::DensePolynomial(c));
  }
}

TEST_CASE("moment polynomials: degree, root at zero, and values up to m = 20") {
  const mm::MomentTable table(20, 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto p = mm::moment_polynomial(n).poly;
    CAPTURE(n);
    REQUIRE(p.degree() == static_cast<int>(n));
    REQUIRE(p.coefficient(0).is_zero());
    REQUIRE_FALSE(p.coefficient(1).is_zero());
    for (std::size_t m = 1; m <= 20; ++m) REQUIRE(p(m) == BigRational(table.at(m, n)));
  }
}

TEST_CASE("monotone cumulants") {
  const auto r = mm::monotone_cumulants(20);
  REQUIRE(r.size() == 20);
  for (std::size_t k = 1; k <= 20; k += 2) CHECK(r[k].is_zero());
  CHECK(r[2] == BigRational(1));
  CHECK(r[4] == BigRational::parse("1/2"));
  CHECK(r[6] == BigRational::parse("1/2"));
  CHECK(r[8] == BigRational::parse("7/12"));
  CHECK(r[8] == mm::moment_polynomial(4).poly.coefficient(1));
  CHECK(r[14] == BigRational::parse("9/20"));
  for (std::size_t k = 1; k <= 14; ++k) {
    CAPTURE(k);
    CHECK(r[k] == BigRational::parse(reference::kCumulants[k - 1]));
  }
  // Computed values for the tail of the printed list.
  CHECK(r[16] == BigRational::parse("71/280"));
  CHECK(r[18] == BigRational::parse("121/140"));
  CHECK(r[20] == BigRational::parse("19/7"));
}

TEST_CASE("shorter cumulant sequences are prefixes") {
  const auto full = mm::monotone_cumulants(16);
  for (std::size_t k = 1; k <= 16; ++k) {
    const auto part = mm::monotone_cumulants(k);
    REQUIRE(part.size() == k);
    for (std::size_t j = 1; j <= k; ++j) REQUIRE(part[j] == full[j]);
  }
}
