#ifndef MONOCONV_MOMENTS_HPP_
#define MONOCONV_MOMENTS_HPP_

#include <cstddef>
#include <vector>

#include "monoconv/algebra.hpp"

namespace monoconv::moments {

/// Even moments d_n^(m) of the m-fold monotone convolution power of the
/// standard semicircle law, for 1 <= m <= max_m and 0 <= n <= max_n.
///
/// Row m is built from rows 1..m, so the whole triangle is kept. Filled
/// eagerly in the constructor; read-only afterwards.
class MomentTable {
 public:
  MomentTable(std::size_t max_m, std::size_t max_n);

  std::size_t max_m() const { return max_m_; }
  std::size_t max_n() const { return max_n_; }

  // Throws std::out_of_range outside the filled triangle.
  const BigInt& at(std::size_t m, std::size_t n) const;
  // d_0^(m), ..., d_{max_n}^(m).
  const std::vector<BigInt>& row(std::size_t m) const;

 private:
  std::size_t max_m_;
  std::size_t max_n_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[m - 1][n]
};

// d_n = sum_{k=1}^{n} d_{n-k} (d_{k-1} + C_{k-1}), d_0 = 1; the m = 2 row.
std::vector<BigInt> moments_m2(std::size_t max_n);

// d_0^(m), ..., d_{max_n}^(m) via the general recurrence. Throws
// ValidationError when m == 0.
std::vector<BigInt> moments_general(std::size_t m, std::size_t max_n);

/// d_n^(m) as a polynomial in m.
struct PolynomialInM {
  std::size_t n = 0;
  DensePolynomial poly;
};

// Interpolates d_n^(m) at m = 0 (value 0 for n >= 1), 1, ..., n and checks the
// result at m = n + 1, n + 2; throws ConsistencyError if either disagrees.
PolynomialInM moment_polynomial(std::size_t n);

/// Monotone cumulants r_1, ..., r_{max_k}; r[k - 1] holds r_k.
struct CumulantSequence {
  std::vector<BigRational> r;

  // 1-based accessor.
  const BigRational& operator[](std::size_t k) const { return r.at(k - 1); }
  std::size_t size() const { return r.size(); }
};

// r_{2n} is the coefficient of m^1 in moment_polynomial(n); odd terms vanish.
CumulantSequence monotone_cumulants(std::size_t max_k);

}  // namespace monoconv::moments

#endif  // MONOCONV_MOMENTS_HPP_
