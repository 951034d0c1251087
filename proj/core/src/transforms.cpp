#include "monoconv/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "monoconv/errors.hpp"
#include "monoconv/moments.hpp"

namespace monoconv::transforms {

namespace {

// Signed zeros would flip std::sqrt onto the lower sheet.
Complex normalized(Complex z) { return z.imag() == 0.0 ? Complex(z.real(), 0.0) : z; }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_boundary_domain(Complex z, std::size_t m, const char* who) {
  if (!finite(z)) {
    throw NumericalDomainError(std::string(who) + ": non-finite argument");
  }
  if (z.imag() < 0.0) {
    throw NumericalDomainError(std::string(who) + ": argument in the lower half-plane");
  }
  if (z.imag() == 0.0) {
    const double edge = support_endpoint_approx(m);
    if (std::abs(z.real()) < edge * (1.0 - 1e-12)) {
      throw NumericalDomainError(std::string(who) + ": real argument " +
                                 std::to_string(z.real()) + " inside the support [-" +
                                 std::to_string(edge) + ", " + std::to_string(edge) +
                                 "]; use density_numeric for boundary limits");
    }
  }
}

Complex f1_unchecked(Complex z) {
  z = normalized(z);
  return 0.5 * (z + std::sqrt(z - 2.0) * std::sqrt(z + 2.0));
}

// Uniform doubles from a fixed engine so runs are reproducible across platforms.
class UniformDraw {
 public:
  explicit UniformDraw(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

Complex random_upper(UniformDraw& draw) {
  return {draw(-6.0, 6.0), draw(1e-2, 5.0)};
}

}  // namespace

Complex g1(Complex z) {
  require_boundary_domain(z, 1, "g1");
  return 1.0 / f1_unchecked(z);
}

Complex f1(Complex z) {
  require_boundary_domain(z, 1, "f1");
  return f1_unchecked(z);
}

Complex fm(Complex z, std::size_t m) {
  if (m == 0) throw ValidationError("fm: m must be >= 1");
  require_boundary_domain(z, m, "fm");
  Complex w = normalized(z);
  for (std::size_t stage = 1; stage <= m; ++stage) {
    w = f1_unchecked(w);
    if (!finite(w) || w.imag() < 0.0) {
      throw NumericalDomainError("fm: composition left the closed upper half-plane at stage " +
                                     std::to_string(stage),
                                 static_cast<int>(stage));
    }
  }
  return w;
}

Complex gm(Complex z, std::size_t m) { return 1.0 / fm(z, m); }

Complex cauchy_partial_sum(Complex z, std::size_t count) {
  Complex total = 0.0;
  for (std::size_t k = 1; k <= count; ++k) total += gm(z, k);
  return total;
}

double cauchy_quadratic_residual(Complex z, std::size_t m) {
  const Complex g = gm(z, m);
  const Complex k = cauchy_partial_sum(z, m - 1);
  return std::abs(g * g + g * (k - z) + 1.0);
}

Complex zhukovsky(Complex w) {
  if (w == Complex(0.0, 0.0)) throw NumericalDomainError("zhukovsky: w = 0");
  return w + 1.0 / w;
}

BigRational zhukovsky(const BigRational& w) {
  if (w.is_zero()) throw NumericalDomainError("zhukovsky: w = 0");
  return w + BigRational(1) / w;
}

Complex zhukovsky_power(Complex w, std::size_t m) {
  for (std::size_t k = 0; k < m; ++k) w = zhukovsky(w);
  return w;
}

BigRational zhukovsky_power(const BigRational& w, std::size_t m) {
  BigRational out = w;
  for (std::size_t k = 0; k < m; ++k) out = zhukovsky(out);
  return out;
}

// ---------------------------------------------------------------------------

BigRational support_endpoint(std::size_t m) {
  if (m == 0) throw ValidationError("support_endpoint: m must be >= 1");
  if (m > kExactEndpointLimit) {
    throw SizeError("support_endpoint: exact a_m limited to m <= " +
                    std::to_string(kExactEndpointLimit));
  }
  // a_m = Z_{m-1}(2) = Z_m(1).
  return zhukovsky_power(BigRational(2), m - 1);
}

SupportEndpoints support_endpoints(std::size_t max_m) {
  if (max_m > kExactEndpointLimit) {
    throw SizeError("support_endpoints: exact a_m limited to m <= " +
                    std::to_string(kExactEndpointLimit));
  }
  SupportEndpoints out;
  BigRational a = 2;
  for (std::size_t m = 1; m <= max_m; ++m) {
    out.a.push_back(a);
    a = zhukovsky(a);
  }
  return out;
}

double support_endpoint_approx(std::size_t m) {
  if (m == 0) throw ValidationError("support_endpoint_approx: m must be >= 1");
  long double a = 2.0L;
  for (std::size_t k = 1; k < m; ++k) a += 1.0L / a;
  return static_cast<double>(a);
}

EndpointBoundsReport endpoint_bounds_check(std::size_t max_m, bool keep_rows) {
  if (max_m == 0) throw ValidationError("endpoint_bounds_check: max_m must be >= 1");
  EndpointBoundsReport report;
  report.max_m = max_m;
  report.exact_through = std::min(max_m, kExactEndpointLimit);

  auto note_failure = [&](std::size_t m) {
    if (!report.first_failure) report.first_failure = m;
  };

  BigRational exact = 2;
  BigRational exact_next = zhukovsky(exact);
  long double a = 2.0L;
  for (std::size_t m = 1; m <= max_m; ++m) {
    const long double next = a + 1.0L / a;
    const long double ml = static_cast<long double>(m);
    EndpointRow row;
    row.m = m;
    row.approx = static_cast<double>(a);
    row.scaled = static_cast<double>(a / std::sqrt(ml));

    if (m <= kExactEndpointLimit) {
      row.exact = exact;
      const BigRational mr(m);
      const BigRational sq = exact * exact;
      if (m >= 3) {
        const BigRational low = sq - mr;
        row.lower_bound_holds = low.sign() >= 0 && low * low >= mr * (mr + BigRational(1));
        const BigRational high = sq - BigRational(2) * mr;
        row.upper_bound_holds = high.sign() <= 0 || high * high <= BigRational(2) * mr;
      }
      const BigRational lhs = exact_next * exact_next * mr;
      const BigRational rhs = sq * (mr + BigRational(1));
      row.ratio_bound_holds = lhs <= rhs;
      row.scaled_decreasing = lhs < rhs;
      exact = exact_next;
      if (m < kExactEndpointLimit) exact_next = zhukovsky(exact);
    } else {
      if (m >= 3) {
        row.lower_bound_holds = a >= std::sqrt(ml + std::sqrt(ml * (ml + 1.0L)));
        row.upper_bound_holds = a <= std::sqrt(2.0L * ml + std::sqrt(2.0L * ml));
      }
      const long double lhs = next * next * ml;
      const long double rhs = a * a * (ml + 1.0L);
      row.ratio_bound_holds = lhs <= rhs;
      row.scaled_decreasing = lhs < rhs;
    }

    if (row.lower_bound_holds == false) report.lower_bounds = false, note_failure(m);
    if (row.upper_bound_holds == false) report.upper_bounds = false, note_failure(m);
    if (row.ratio_bound_holds == false) report.ratio_bounds = false, note_failure(m);
    if (row.scaled_decreasing == false) report.scaled_decreasing = false, note_failure(m);
    if (m == max_m) report.final_scaled = row.scaled;
    if (keep_rows) report.rows.push_back(std::move(row));
    a = next;
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kDensityScale = 1.0 / (4.0 * std::numbers::pi);

}  // namespace

double density_m2_inner(double x) {
  const double t = std::abs(x);
  return kDensityScale *
         (std::sqrt(std::sqrt(100.0 - 16.0 * t * t) - t * t + 10.0) - std::sqrt(4.0 - t * t));
}

double density_m2_outer(double x) {
  const double t = std::abs(x);
  const double radicand = -2.0 * t * t - 2.0 * t * std::sqrt(t * t - 4.0) + 20.0;
  return kDensityScale * std::sqrt(std::max(0.0, radicand));
}

double density_m2_closed(double x) {
  const double t = std::abs(x);
  if (t <= 2.0) return density_m2_inner(t);
  if (t <= 2.5) return density_m2_outer(t);
  return 0.0;
}

DensityEstimate density_numeric(std::size_t m, double x, std::span<const double> y_ladder,
                                double tolerance) {
  if (m == 0) throw ValidationError("density_numeric: m must be >= 1");
  if (!std::isfinite(x)) throw ValidationError("density_numeric: x must be finite");
  if (y_ladder.size() < 2) {
    throw ValidationError("density_numeric: y ladder needs at least two levels");
  }
  for (std::size_t i = 0; i < y_ladder.size(); ++i) {
    if (!(y_ladder[i] > 0.0) || (i > 0 && !(y_ladder[i] < y_ladder[i - 1]))) {
      throw ValidationError("density_numeric: y ladder must be positive and decreasing");
    }
  }

  // Neville tableau in t = sqrt(y), evaluated at t = 0: entry i after pass j
  // is the extrapolation through levels i..i+j.
  const std::size_t n = y_ladder.size();
  std::vector<double> table(n);
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = std::sqrt(y_ladder[i]);
    table[i] = -gm(Complex(x, y_ladder[i]), m).imag() / std::numbers::pi;
  }
  double without_coarsest = table[n - 1];
  for (std::size_t pass = 1; pass < n; ++pass) {
    for (std::size_t i = 0; i + pass < n; ++i) {
      const double ti = t[i];
      const double tj = t[i + pass];
      table[i] = (ti * table[i + 1] - tj * table[i]) / (ti - tj);
    }
    if (pass == n - 2) without_coarsest = table[1];
  }

  DensityEstimate out;
  out.value = table[0];
  out.residual = std::abs(table[0] - without_coarsest);
  out.converged = out.residual <= tolerance;
  if (out.value < 0.0) {
    if (out.value < -tolerance) {
      out.converged = false;
    } else {
      out.value = 0.0;
    }
  }
  return out;
}

DensityCurve density_curve(std::size_t m, double x_min, double x_max, std::size_t count,
                           std::span<const double> y_ladder) {
  if (count == 0 || !(x_min <= x_max)) {
    throw ValidationError("density_curve: need count >= 1 and x_min <= x_max");
  }
  DensityCurve curve;
  curve.m = m;
  curve.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x =
        count == 1 ? x_min : x_min + (x_max - x_min) * static_cast<double>(i) /
                                         static_cast<double>(count - 1);
    curve.samples.push_back({x, density_numeric(m, x, y_ladder)});
  }
  return curve;
}

// ---------------------------------------------------------------------------

Integral integrate_piecewise(const std::function<double(double)>& f,
                             std::span<const double> breakpoints, double tolerance) {
  using boost::math::quadrature::gauss_kronrod;
  Integral total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double mid = 0.5 * (breakpoints[i] + breakpoints[i + 1]);
    const double half = 0.5 * (breakpoints[i + 1] - breakpoints[i]);
    // x = mid - half cos(theta) turns sqrt(x - a) edges into smooth ones.
    auto mapped = [&](double theta) {
      return f(mid - half * std::cos(theta)) * half * std::sin(theta);
    };
    double error = 0.0;
    total.value +=
        gauss_kronrod<double, 15>::integrate(mapped, 0.0, std::numbers::pi, 15, tolerance, &error);
    total.error += error;
  }
  return total;
}

std::vector<double> support_breakpoints(std::size_t m) {
  std::vector<double> points = {0.0};
  for (std::size_t j = 1; j <= m; ++j) {
    const double a = support_endpoint_approx(j);
    points.push_back(a);
    points.push_back(-a);
  }
  std::sort(points.begin(), points.end());
  return points;
}

MomentQuadrature moment_quadrature(std::size_t m, std::size_t max_k,
                                   std::span<const double> y_ladder, double tolerance) {
  if (max_k % 2 != 0 || max_k > 8) {
    throw ValidationError("moment_quadrature: max_k must be even and <= 8");
  }
  const std::vector<double> breakpoints = support_breakpoints(m);
  MomentQuadrature out;
  for (std::size_t k = 0; k <= max_k; ++k) {
    const Integral integral = integrate_piecewise(
        [&](double x) {
          return std::pow(x, static_cast<double>(k)) *
                 density_numeric(m, x, y_ladder, std::numeric_limits<double>::infinity()).value;
        },
        breakpoints, 1e-10);
    if (integral.error > tolerance * std::max(1.0, std::abs(integral.value))) {
      throw ConsistencyError("moment_quadrature: k = " + std::to_string(k) +
                             " error estimate " + std::to_string(integral.error) +
                             " above tolerance");
    }
    out.moments.push_back(integral.value);
    out.errors.push_back(integral.error);
  }
  return out;
}

// ---------------------------------------------------------------------------

Complex g2_explicit(Complex z) {
  const Complex w = z - g1(z);
  const Complex root = std::sqrt(normalized(w * w - 4.0));
  return z.real() >= 0.0 ? 0.5 * (w - root) : 0.5 * (w + root);
}

std::vector<BigRational> generating_series_residual(std::size_t m, std::size_t terms) {
  if (m == 0) throw ValidationError("generating_series_residual: m must be >= 1");
  if (terms == 0) return {};
  const moments::MomentTable table(m, terms - 1);
  std::vector<BigRational> series(terms);
  std::vector<BigRational> lower(terms);  // L_{m-1}
  for (std::size_t n = 0; n < terms; ++n) {
    series[n] = table.at(m, n);
    for (std::size_t k = 1; k < m; ++k) lower[n] += table.at(k, n);
  }
  std::vector<BigRational> residual(terms);
  residual[0] += BigRational(1);
  for (std::size_t i = 0; i < terms; ++i) {
    residual[i] -= series[i];
    for (std::size_t j = 0; i + j + 1 < terms; ++j) {
      residual[i + j + 1] += series[i] * series[j];  // w M^2
      residual[i + j + 1] += series[i] * lower[j];   // w M L
    }
  }
  return residual;
}

bool GeneratingIdentityReport::passed() const {
  return !series_first_nonzero && explicit_max_residual < tolerance &&
         negative_imaginary == points && sign_rule_agreements == points;
}

GeneratingIdentityReport m2_generating_identities_check(std::uint64_t seed, std::size_t points) {
  GeneratingIdentityReport report;
  report.seed = seed;
  report.series_terms = 12;
  report.points = points;

  const auto residual = generating_series_residual(2, report.series_terms);
  for (std::size_t n = 0; n < residual.size(); ++n) {
    if (!residual[n].is_zero()) {
      report.series_first_nonzero = 2 * n;
      break;
    }
  }

  UniformDraw draw(seed);
  for (std::size_t p = 0; p < points; ++p) {
    const Complex z = random_upper(draw);
    const Complex reference = gm(z, 2);
    const Complex chosen = g2_explicit(z);
    report.explicit_max_residual =
        std::max(report.explicit_max_residual, std::abs(chosen - reference) / std::abs(reference));
    if (reference.imag() < 0.0) ++report.negative_imaginary;
    if (chosen.imag() < 0.0) ++report.sign_rule_agreements;
  }
  return report;
}

bool TransformIdentityReport::passed() const {
  return max_quadratic_residual < quadratic_tolerance && max_inverse_residual < inverse_tolerance &&
         max_recursion_residual < quadratic_tolerance && branch_violations == 0;
}

TransformIdentityReport check_transform_identities(std::size_t max_m, std::size_t points,
                                                   std::uint64_t seed) {
  TransformIdentityReport report;
  report.seed = seed;
  report.max_m = max_m;
  report.points = points;
  UniformDraw draw(seed);
  for (std::size_t p = 0; p < points; ++p) {
    const Complex z = random_upper(draw);
    const Complex g = g1(z);
    report.max_recursion_residual =
        std::max(report.max_recursion_residual, std::abs(g + 1.0 / g - z) / std::abs(z));
    const Complex f = f1(z);
    if (!(f.imag() > 0.0) || std::abs(f) < 1.0) ++report.branch_violations;
    for (std::size_t m = 1; m <= max_m; ++m) {
      const Complex fz = fm(z, m);
      if (!((1.0 / fz).imag() < 0.0)) ++report.branch_violations;
      report.max_quadratic_residual =
          std::max(report.max_quadratic_residual, cauchy_quadratic_residual(z, m));
      report.max_inverse_residual = std::max(
          report.max_inverse_residual, std::abs(zhukovsky_power(fz, m) - z) / std::abs(z));
    }
  }
  return report;
}

}  // namespace monoconv::transforms
