#include "cli/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "monoconv/fock.hpp"
#include "monoconv/moments.hpp"
#include "monoconv/orthopoly.hpp"
#include "monoconv/partitions.hpp"
#include "monoconv/transforms.hpp"

namespace monoconv::cli {

namespace {

constexpr std::size_t kPartitionMaxN = 6;
constexpr std::size_t kPartitionMaxM = 4;
constexpr std::size_t kFockMaxM = 3;
constexpr std::size_t kFockMinDepth = 3;
constexpr std::size_t kFockMaxDepth = 6;
constexpr std::size_t kIndependenceDepth = 8;
constexpr std::size_t kIndependenceTrials = 200;
constexpr std::size_t kTransformMaxM = 5;
constexpr std::size_t kTransformPoints = 1000;
constexpr std::size_t kEndpointMaxM = 10000;
constexpr double kDensityTolerance = 1e-6;
constexpr double kQuadratureTolerance = 1e-5;
constexpr std::size_t kOrthopolyMaxM = 6;
constexpr std::size_t kOrthopolyOrder = 8;

Json check_json(const fock::IdentityCheck& check) {
  Json j;
  j["identity"] = check.name;
  j["status"] = check.passed ? "pass" : "fail";
  j["cases"] = check.cases;
  if (check.witness) j["witness"] = *check.witness;
  return j;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

Json tagged(double value, double tolerance) {
  Json j;
  j["value"] = value;
  j["tolerance"] = tolerance;
  return j;
}

Json verify_partitions(const VerifyOptions& options) {
  const std::size_t max_n = std::min(kPartitionMaxN, options.enumeration_bound);
  const moments::MomentTable table(kPartitionMaxM, max_n);
  Json rows = Json::array();
  bool passed = true;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const bool sized = partitions::enumerate_nc2(n, options.enumeration_bound).size() ==
                       partitions::catalan(n);
    passed = passed && sized;
    for (std::size_t m = 1; m <= kPartitionMaxM; ++m) {
      const BigInt enumerated = partitions::count_nc2wmo(m, n, options.enumeration_bound);
      const bool equal = enumerated == table.at(m, n);
      passed = passed && equal;
      Json row;
      row["n"] = n;
      row["m"] = m;
      row["enumerated_count"] = to_string(enumerated);
      row["recurrence_count"] = to_string(table.at(m, n));
      row["equal"] = equal;
      rows.push_back(std::move(row));
    }
  }
  Json report;
  report["enumeration_bound"] = options.enumeration_bound;
  report["rows"] = std::move(rows);
  report["passed"] = passed;
  return report;
}

Json verify_fock(const VerifyOptions& options) {
  bool passed = true;
  Json identities = Json::array();
  for (std::size_t m = 1; m <= kFockMaxM; ++m) {
    for (std::size_t depth = kFockMinDepth; depth <= kFockMaxDepth; ++depth) {
      for (const auto& check : fock::check_operator_identities(m, depth)) {
        passed = passed && check.passed;
        Json j = check_json(check);
        j["m"] = m;
        j["depth"] = depth;
        identities.push_back(std::move(j));
      }
    }
  }

  const auto independence = fock::check_monotone_independence(
      kFockMaxM, kIndependenceDepth, kIndependenceTrials, options.seed);
  passed = passed && independence.passed();
  Json ind;
  ind["seed"] = independence.seed;
  ind["m"] = kFockMaxM;
  ind["depth"] = kIndependenceDepth;
  ind["trials"] = independence.trials;
  ind["max_word_length"] = independence.max_word_length;
  ind["checks"] = Json::array();
  for (const auto& check : independence.checks) ind["checks"].push_back(check_json(check));

  const std::size_t max_n = fock::kDefaultMomentBound;
  const moments::MomentTable table(kFockMaxM, max_n);
  Json moments_rows = Json::array();
  for (std::size_t m = 1; m <= kFockMaxM; ++m) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      const BigInt simulated = fock::moment_via_fock(m, n);
      const bool equal = simulated == table.at(m, n);
      passed = passed && equal;
      Json row;
      row["m"] = m;
      row["n"] = n;
      row["fock"] = to_string(simulated);
      row["recurrence"] = to_string(table.at(m, n));
      row["equal"] = equal;
      moments_rows.push_back(std::move(row));
    }
  }

  Json report;
  report["identities"] = std::move(identities);
  report["independence"] = std::move(ind);
  report["moments"] = std::move(moments_rows);
  report["passed"] = passed;
  return report;
}

Json verify_moments(const VerifyOptions&) {
  bool passed = true;
  const auto m2 = moments::moments_m2(12);
  const bool recurrences_agree = m2 == moments::moments_general(2, 12);
  passed = passed && recurrences_agree;

  Json polys = Json::array();
  const moments::MomentTable table(20, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto p = moments::moment_polynomial(n).poly;
    bool ok = p.degree() == static_cast<int>(n);
    if (n >= 1) ok = ok && p.coefficient(0).is_zero() && !p.coefficient(1).is_zero();
    for (std::size_t m = 1; m <= 20 && ok; ++m) ok = p(m) == BigRational(table.at(m, n));
    passed = passed && ok;
    Json row;
    row["n"] = n;
    row["polynomial"] = p.to_string("m");
    row["reproduces_table_through_m20"] = ok;
    polys.push_back(std::move(row));
  }
  Json report;
  report["m2_recurrence_matches_general"] = recurrences_agree;
  report["polynomials"] = std::move(polys);
  report["passed"] = passed;
  return report;
}

Json verify_transforms(const VerifyOptions& options) {
  bool passed = true;
  const auto ident =
      transforms::check_transform_identities(kTransformMaxM, kTransformPoints, options.seed);
  passed = passed && ident.passed();
  Json identities;
  identities["seed"] = ident.seed;
  identities["max_m"] = ident.max_m;
  identities["points"] = ident.points;
  identities["quadratic_residual"] = tagged(ident.max_quadratic_residual, ident.quadratic_tolerance);
  identities["inverse_residual"] = tagged(ident.max_inverse_residual, ident.inverse_tolerance);
  identities["recursion_residual"] = tagged(ident.max_recursion_residual, ident.quadratic_tolerance);
  identities["branch_violations"] = ident.branch_violations;
  identities["passed"] = ident.passed();

  const auto gen = transforms::m2_generating_identities_check(options.seed);
  passed = passed && gen.passed();
  Json generating;
  generating["seed"] = gen.seed;
  generating["series_terms"] = gen.series_terms;
  generating["series_exact_through_power"] = 2 * (gen.series_terms - 1);
  generating["series_first_nonzero_power"] =
      gen.series_first_nonzero ? Json(*gen.series_first_nonzero) : Json(nullptr);
  generating["points"] = gen.points;
  generating["explicit_formula_residual"] = tagged(gen.explicit_max_residual, gen.tolerance);
  generating["negative_imaginary"] = gen.negative_imaginary;
  generating["sign_rule_agreements"] = gen.sign_rule_agreements;
  generating["passed"] = gen.passed();

  const auto bounds = transforms::endpoint_bounds_check(kEndpointMaxM);
  const auto first = transforms::support_endpoints(3);
  const bool first_ok = first[1] == BigRational(2) && first[2] == BigRational::parse("5/2") &&
                        first[3] == BigRational::parse("29/10");
  const double sqrt2 = std::numbers::sqrt2;
  const bool limit_ok = bounds.final_scaled - sqrt2 < 1e-2 * sqrt2 && bounds.final_scaled > sqrt2;
  passed = passed && bounds.passed() && first_ok && limit_ok;
  Json endpoints;
  endpoints["a"] = Json::array({first[1].to_string(), first[2].to_string(), first[3].to_string()});
  endpoints["max_m"] = bounds.max_m;
  endpoints["exact_through"] = bounds.exact_through;
  endpoints["lower_bounds"] = bounds.lower_bounds;
  endpoints["upper_bounds"] = bounds.upper_bounds;
  endpoints["ratio_bounds"] = bounds.ratio_bounds;
  endpoints["scaled_decreasing"] = bounds.scaled_decreasing;
  endpoints["final_scaled"] = tagged(bounds.final_scaled, 1e-2 * sqrt2);
  endpoints["passed"] = bounds.passed() && first_ok && limit_ok;

  double worst_m2 = 0.0;
  double worst_m1 = 0.0;
  std::size_t flagged = 0;
  for (int i = 1; i <= 50; ++i) {
    const double x = -2.5 + 5.0 * i / 51.0;
    const auto est = transforms::density_numeric(2, x);
    if (!est.converged) ++flagged;
    worst_m2 = std::max(worst_m2, std::abs(est.value - transforms::density_m2_closed(x)));
  }
  for (int i = 1; i <= 79; ++i) {
    const double x = -2.0 + 0.05 * i;
    const auto est = transforms::density_numeric(1, x);
    if (!est.converged) ++flagged;
    const double exact = std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
    worst_m1 = std::max(worst_m1, std::abs(est.value - exact));
  }
  const bool density_ok = worst_m2 < kDensityTolerance && worst_m1 < kDensityTolerance;
  passed = passed && density_ok;
  Json density;
  density["m2_vs_closed_form"] = tagged(worst_m2, kDensityTolerance);
  density["m1_vs_semicircle"] = tagged(worst_m1, kDensityTolerance);
  density["flagged_samples"] = flagged;
  density["passed"] = density_ok;

  Json quadrature = Json::array();
  const moments::MomentTable table(4, 4);
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto mq = transforms::moment_quadrature(m, 8);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 4; ++n) {
      const double exact = BigRational(table.at(m, n)).to_double();
      worst = std::max(worst, std::abs(mq.moments[2 * n] - exact) / exact);
    }
    for (std::size_t k = 1; k <= 8; k += 2) worst = std::max(worst, std::abs(mq.moments[k]));
    const bool ok = worst < kQuadratureTolerance;
    passed = passed && ok;
    Json row;
    row["m"] = m;
    row["max_k"] = 8;
    row["relative_error"] = tagged(worst, kQuadratureTolerance);
    row["passed"] = ok;
    quadrature.push_back(std::move(row));
  }

  Json report;
  report["identities"] = std::move(identities);
  report["generating_function"] = std::move(generating);
  report["endpoints"] = std::move(endpoints);
  report["density"] = std::move(density);
  report["quadrature"] = std::move(quadrature);
  report["passed"] = passed;
  return report;
}

Json verify_orthopoly(const VerifyOptions&) {
  bool passed = true;
  Json rows = Json::array();
  for (std::size_t m = 1; m <= kOrthopolyMaxM; ++m) {
    const auto moments = orthopoly::full_moments(m, kOrthopolyOrder);
    const auto jc = orthopoly::jacobi_from_moments(moments, kOrthopolyOrder);
    const auto polys = orthopoly::monic_orthogonal_polys(jc, kOrthopolyOrder);
    const auto orth = orthopoly::verify_orthogonality(polys, moments, &jc);
    const auto minors = orthopoly::hankel_leading_minors(moments, kOrthopolyOrder + 1);
    bool positive = true;
    for (const auto& b : jc.beta) positive = positive && b.sign() > 0;
    bool hankel_agrees = true;
    for (std::size_t k = 1; k <= kOrthopolyOrder; ++k) {
      const BigRational prev = k >= 2 ? minors[k - 2] : BigRational(1);
      hankel_agrees = hankel_agrees && minors[k - 1].sign() > 0 &&
                      jc.beta[k] == minors[k] * prev / (minors[k - 1] * minors[k - 1]);
    }
    const bool ok = positive && hankel_agrees && orth.passed();
    passed = passed && ok;
    Json row;
    row["m"] = m;
    row["order"] = kOrthopolyOrder;
    Json beta = Json::array();
    for (const auto& b : jc.beta) beta.push_back(b.to_string());
    row["beta"] = std::move(beta);
    row["beta_positive"] = positive;
    row["hankel_agrees"] = hankel_agrees;
    row["orthogonal_pairs_checked"] = orth.pairs_checked;
    row["nonzero_pairings"] = orth.nonzero.size();
    row["passed"] = ok;
    rows.push_back(std::move(row));
  }
  Json report;
  report["rows"] = std::move(rows);
  report["passed"] = passed;
  return report;
}

}  // namespace monoconv::cli
