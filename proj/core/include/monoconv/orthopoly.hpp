#ifndef MONOCONV_ORTHOPOLY_HPP_
#define MONOCONV_ORTHOPOLY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "monoconv/algebra.hpp"

namespace monoconv::orthopoly {

/// Coefficients of p_{n+1} = (x - alpha_n) p_n - beta_n p_{n-1}.
/// beta[0] holds the total mass m_0 by convention.
struct JacobiCoefficients {
  std::vector<BigRational> alpha;
  std::vector<BigRational> beta;

  std::size_t order() const { return beta.empty() ? 0 : beta.size() - 1; }
};

using MonicPolynomial = DensePolynomial;

// Chebyshev algorithm on m_0..m_{2 order} of a symmetric moment sequence;
// returns beta_0..beta_order. Throws ValidationError when fewer moments are
// given or an odd moment is nonzero, and ValidationError("not positive
// definite at order k") when sigma_kk <= 0.
JacobiCoefficients jacobi_from_moments(std::span<const BigRational> moments, std::size_t order);

// p_0, ..., p_{n_max}. Requires jc.order() >= n_max - 1.
std::vector<MonicPolynomial> monic_orthogonal_polys(const JacobiCoefficients& jc,
                                                    std::size_t n_max);

// L[p] = sum_k p_k m_k. Throws ValidationError when deg p exceeds the moments.
BigRational moment_functional(const DensePolynomial& p, std::span<const BigRational> moments);

struct NonzeroPairing {
  std::size_t i = 0;
  std::size_t j = 0;
  BigRational value;
};

struct NormMismatch {
  std::size_t n = 0;
  BigRational norm;
  BigRational expected;  // beta_0 beta_1 ... beta_n
};

struct OrthogonalityReport {
  std::size_t pairs_checked = 0;
  std::vector<NonzeroPairing> nonzero;
  std::vector<BigRational> norms;  // L[p_n^2]
  std::vector<NormMismatch> norm_mismatches;

  bool passed() const { return nonzero.empty() && norm_mismatches.empty(); }
};

// Checks L[p_i p_j] = 0 for i < j exactly. When `jacobi` is given, also checks
// L[p_n^2] = beta_0 ... beta_n.
OrthogonalityReport verify_orthogonality(std::span<const MonicPolynomial> polys,
                                         std::span<const BigRational> moments,
                                         const JacobiCoefficients* jacobi = nullptr);

// det [m_{i+j}]_{0 <= i,j < k} for k = 1..size, by exact elimination.
std::vector<BigRational> hankel_leading_minors(std::span<const BigRational> moments,
                                               std::size_t size);

// Moments m_0..m_{2 max_n} of nu_m with odd entries zero.
std::vector<BigRational> full_moments(std::size_t m, std::size_t max_n);

}  // namespace monoconv::orthopoly

#endif  // MONOCONV_ORTHOPOLY_HPP_
