#include "monoconv/moments.hpp"

#include <stdexcept>
#include <string>

#include "monoconv/errors.hpp"
#include "monoconv/partitions.hpp"

namespace monoconv::moments {

MomentTable::MomentTable(std::size_t max_m, std::size_t max_n)
    : max_m_(max_m), max_n_(max_n), rows_(max_m, std::vector<BigInt>(max_n + 1)) {
  if (max_m == 0) throw ValidationError("MomentTable: need max_m >= 1");
  // label_sums[n] = sum_{j <= current m} d_n^(j); grows one row at a time.
  std::vector<BigInt> label_sums(max_n + 1, 0);
  for (std::size_t m = 1; m <= max_m; ++m) {
    std::vector<BigInt>& row = rows_[m - 1];
    row[0] = 1;
    // Entry n only needs label_sums up to n - 1, which already include row m
    // once row[n - 1] is known.
    label_sums[0] += row[0];
    for (std::size_t n = 1; n <= max_n; ++n) {
      BigInt total = 0;
      for (std::size_t k = 1; k <= n; ++k) total += row[n - k] * label_sums[k - 1];
      row[n] = total;
      label_sums[n] += row[n];
    }
  }
}

const BigInt& MomentTable::at(std::size_t m, std::size_t n) const {
  if (m == 0 || m > max_m_ || n > max_n_) {
    throw std::out_of_range("MomentTable: (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                            ") outside filled range");
  }
  return rows_[m - 1][n];
}

const std::vector<BigInt>& MomentTable::row(std::size_t m) const {
  if (m == 0 || m > max_m_) throw std::out_of_range("MomentTable: row out of range");
  return rows_[m - 1];
}

std::vector<BigInt> moments_m2(std::size_t max_n) {
  std::vector<BigInt> d(max_n + 1);
  std::vector<BigInt> c(max_n + 1);
  for (std::size_t k = 0; k <= max_n; ++k) c[k] = partitions::catalan(k);
  d[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    BigInt total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += d[n - k] * (d[k - 1] + c[k - 1]);
    d[n] = total;
  }
  return d;
}

std::vector<BigInt> moments_general(std::size_t m, std::size_t max_n) {
  if (m == 0) throw ValidationError("moments_general: m must be >= 1");
  return MomentTable(m, max_n).row(m);
}

PolynomialInM moment_polynomial(std::size_t n) {
  if (n == 0) return {0, DensePolynomial::constant(1)};
  const MomentTable table(n + 2, n);
  std::vector<InterpolationPoint> points;
  points.push_back({0, 0});
  for (std::size_t m = 1; m <= n; ++m) points.push_back({m, table.at(m, n)});
  DensePolynomial poly = interpolate(points);
  for (std::size_t m = n + 1; m <= n + 2; ++m) {
    if (poly(m) != BigRational(table.at(m, n))) {
      throw ConsistencyError("moment_polynomial(" + std::to_string(n) +
                             "): interpolant misses d_n^(m) at m = " + std::to_string(m));
    }
  }
  return {n, std::move(poly)};
}

CumulantSequence monotone_cumulants(std::size_t max_k) {
  CumulantSequence out;
  out.r.reserve(max_k);
  for (std::size_t k = 1; k <= max_k; ++k) {
    out.r.push_back(k % 2 == 1 ? BigRational{} : moment_polynomial(k / 2).poly.coefficient(1));
  }
  return out;
}

}  // namespace monoconv::moments
