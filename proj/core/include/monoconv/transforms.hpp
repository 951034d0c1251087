#ifndef MONOCONV_TRANSFORMS_HPP_
#define MONOCONV_TRANSFORMS_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "monoconv/algebra.hpp"

namespace monoconv::transforms {

using Complex = std::complex<double>;

// Exact endpoints are computed up to this power; numerator and denominator
// sizes double at every step.
inline constexpr std::size_t kExactEndpointLimit = 20;

// Heights for Stieltjes inversion. Extrapolation runs in t = sqrt(y): at the
// points +-a_j (j <= m) Im G_m picks up a sqrt(y) term, elsewhere only
// integer powers of y appear.
inline constexpr std::array<double, 3> kDefaultYLadder = {1e-4, 1e-6, 1e-8};

// Cauchy transform of the standard semicircle, 1 / F_1(z).
// Throws NumericalDomainError for Im z < 0 or z real in [-2, 2].
Complex g1(Complex z);

// Reciprocal Cauchy transform (z + sqrt(z - 2) sqrt(z + 2)) / 2, principal
// roots. Defined on the closed upper half-plane minus (-2, 2).
Complex f1(Complex z);

// m-fold composition of f1. Accepts Im z > 0, or real z with |z| >= a_m.
// Throws NumericalDomainError (with the failing stage) otherwise.
Complex fm(Complex z, std::size_t m);

// Cauchy transform of the m-fold monotone power, 1 / fm(z, m).
Complex gm(Complex z, std::size_t m);

// sum_{k=1}^{count} gm(z, k); zero for count == 0.
Complex cauchy_partial_sum(Complex z, std::size_t count);

// |G_m^2 + G_m (K_{m-1} - z) + 1|.
double cauchy_quadratic_residual(Complex z, std::size_t m);

// Z(w) = w + 1/w. Throws NumericalDomainError for w == 0.
Complex zhukovsky(Complex w);
BigRational zhukovsky(const BigRational& w);

// Z applied m times.
Complex zhukovsky_power(Complex w, std::size_t m);
BigRational zhukovsky_power(const BigRational& w, std::size_t m);

// ---------------------------------------------------------------------------
// Support endpoints: supp = [-a_m, a_m], a_1 = 2, a_{m+1} = a_m + 1/a_m.

/// Exact endpoints a_1, ..., a_{a.size()}; a[m - 1] holds a_m.
struct SupportEndpoints {
  std::vector<BigRational> a;

  const BigRational& operator[](std::size_t m) const { return a.at(m - 1); }
};

// Throws SizeError above kExactEndpointLimit.
BigRational support_endpoint(std::size_t m);
SupportEndpoints support_endpoints(std::size_t max_m);
// Extended-precision float recursion; any m >= 1.
double support_endpoint_approx(std::size_t m);

struct EndpointRow {
  std::size_t m = 0;
  std::optional<BigRational> exact;  // set for m <= kExactEndpointLimit
  double approx = 0.0;
  double scaled = 0.0;                     // a_m / sqrt(m)
  std::optional<bool> lower_bound_holds;   // sqrt(m + sqrt(m(m+1))) <= a_m, m >= 3
  std::optional<bool> upper_bound_holds;   // a_m <= sqrt(2m + sqrt(2m)), m >= 3
  std::optional<bool> ratio_bound_holds;   // a_{m+1}/a_m <= sqrt((m+1)/m)
  std::optional<bool> scaled_decreasing;   // a_{m+1}/sqrt(m+1) < a_m/sqrt(m)
};

struct EndpointBoundsReport {
  std::size_t max_m = 0;
  std::size_t exact_through = 0;
  bool lower_bounds = true;
  bool upper_bounds = true;
  bool ratio_bounds = true;
  bool scaled_decreasing = true;
  double final_scaled = 0.0;  // a_{max_m} / sqrt(max_m)
  std::optional<std::size_t> first_failure;
  std::vector<EndpointRow> rows;  // only filled when requested

  bool passed() const { return lower_bounds && upper_bounds && ratio_bounds && scaled_decreasing; }
};

// Exact rational comparisons for m <= kExactEndpointLimit, long double above.
// The ratio checks at m = max_m use a_{max_m + 1}.
EndpointBoundsReport endpoint_bounds_check(std::size_t max_m, bool keep_rows = false);

// ---------------------------------------------------------------------------
// Densities.

// Closed form for m = 2, supported on [-5/2, 5/2].
double density_m2_closed(double x);

// The two nonzero pieces of density_m2_closed, evaluated without the range
// test: the first is used for |x| <= 2, the second for 2 <= |x| <= 5/2.
// Both are even; the second clamps a negative radicand to zero.
double density_m2_inner(double x);
double density_m2_outer(double x);

struct DensityEstimate {
  double value = 0.0;
  double residual = 0.0;  // |full extrapolation - extrapolation without the coarsest y|
  bool converged = true;
};

// -(1/pi) Im G_m(x + iy), extrapolated to y = 0 along the decreasing ladder
// by Neville interpolation in sqrt(y).
// The sample is flagged (converged = false) when the residual exceeds
// `tolerance`. Throws ValidationError for an empty or non-decreasing ladder.
DensityEstimate density_numeric(std::size_t m, double x,
                                std::span<const double> y_ladder = kDefaultYLadder,
                                double tolerance = 1e-6);

struct DensitySample {
  double x = 0.0;
  DensityEstimate estimate;
};

struct DensityCurve {
  std::size_t m = 0;
  std::vector<DensitySample> samples;
};

// `count` evenly spaced samples on [x_min, x_max] (both ends included when count > 1).
DensityCurve density_curve(std::size_t m, double x_min, double x_max, std::size_t count,
                           std::span<const double> y_ladder = kDefaultYLadder);

// ---------------------------------------------------------------------------
// Quadrature.

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive Gauss-Kronrod on each interval between consecutive breakpoints,
// after the substitution x = mid - half cos(theta) on each piece.
Integral integrate_piecewise(const std::function<double(double)>& f,
                             std::span<const double> breakpoints, double tolerance = 1e-11);

// Breakpoints {-a_m, ..., -a_1, 0, a_1, ..., a_m} where the density of the
// m-fold power can lose smoothness.
std::vector<double> support_breakpoints(std::size_t m);

struct MomentQuadrature {
  std::vector<double> moments;  // index k
  std::vector<double> errors;   // quadrature error estimate per k
};

// int x^k g_m(x) dx over [-a_m, a_m] for k = 0..max_k using density_numeric.
// max_k must be even and <= 8. Throws ConsistencyError when an error estimate
// exceeds tolerance * max(1, |moment|).
MomentQuadrature moment_quadrature(std::size_t m, std::size_t max_k,
                                   std::span<const double> y_ladder = kDefaultYLadder,
                                   double tolerance = 1e-7);

// ---------------------------------------------------------------------------
// Identity checks.

// G_2 from the explicit +- formula in G_1, with the sign picked by Re z:
// "-" for Re z >= 0, "+" for Re z < 0, principal square root.
Complex g2_explicit(Complex z);

// Coefficients of w^0..w^{terms-1} of  w M_m^2 + M_m (w L_{m-1} - 1) + 1  where
// w = z^2, M_m = sum_n d_n^(m) w^n truncated to `terms`, L_{m-1} = sum_{k<m} M_k.
// All entries vanish exactly when the moments are right.
std::vector<BigRational> generating_series_residual(std::size_t m, std::size_t terms);

struct GeneratingIdentityReport {
  std::uint64_t seed = 0;
  std::size_t series_terms = 0;
  std::optional<std::size_t> series_first_nonzero;  // power of z, if any
  std::size_t points = 0;
  double explicit_max_residual = 0.0;  // max |g2_explicit - gm(., 2)| / |gm|
  std::size_t negative_imaginary = 0;  // points with Im G_2 < 0
  std::size_t sign_rule_agreements = 0;  // rule choice == the Im < 0 root
  double tolerance = 1e-10;

  bool passed() const;
};

GeneratingIdentityReport m2_generating_identities_check(std::uint64_t seed,
                                                        std::size_t points = 100);

struct TransformIdentityReport {
  std::uint64_t seed = 0;
  std::size_t max_m = 0;
  std::size_t points = 0;
  double max_quadratic_residual = 0.0;
  double max_inverse_residual = 0.0;  // relative |Z_m(F_m(z)) - z| / |z|
  double max_recursion_residual = 0.0;  // relative |G_1 + 1/G_1 - z| / |z|
  std::size_t branch_violations = 0;  // Im f1 <= 0, |f1| < 1, or Im gm >= 0
  double quadratic_tolerance = 1e-10;
  double inverse_tolerance = 1e-9;

  bool passed() const;
};

// Random points in the upper half-plane; m = 1..max_m.
TransformIdentityReport check_transform_identities(std::size_t max_m, std::size_t points,
                                                   std::uint64_t seed);

}  // namespace monoconv::transforms

#endif  // MONOCONV_TRANSFORMS_HPP_
