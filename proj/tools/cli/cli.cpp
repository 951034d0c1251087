#include "cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/report.hpp"
#include "cli/svg.hpp"
#include "monoconv/errors.hpp"
#include "monoconv/moments.hpp"
#include "monoconv/orthopoly.hpp"
#include "monoconv/partitions.hpp"
#include "monoconv/transforms.hpp"

namespace monoconv::cli {

namespace {

constexpr const char* kEnumBoundVariable = "MONOCONV_ENUM_BOUND";
constexpr std::size_t kMaxMomentIndex = 500;
constexpr std::size_t kMaxMomentPower = 1000;
constexpr std::size_t kMaxPower = 1000000;
constexpr std::size_t kMaxOrder = 40;
constexpr std::size_t kMaxSamples = 100000;

struct RunConfig {
  std::string subcommand;
  std::size_t m = 1;
  std::size_t n = 8;
  std::size_t k = 20;
  std::size_t order = 10;
  std::size_t m_max = 10;
  std::size_t samples = 201;
  std::size_t cumulants = 0;
  bool poly = false;
  std::string format;
  std::string suite = "all";
  std::string output;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::size_t enumeration_bound = partitions::kDefaultEnumerationBound;
};

Json header(const RunConfig& config) {
  Json j;
  j["command"] = config.subcommand;
  j["seed"] = config.seed;
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json coefficient_array(const DensePolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
  if (arr.empty()) arr.push_back("0");
  return arr;
}

int run_moments(const RunConfig& c, std::ostream& out) {
  if (c.format == "csv" && c.cumulants > 0) {
    throw ValidationError("--cumulants needs --format json (or use the cumulants subcommand)");
  }
  const auto d = moments::moments_general(c.m, c.n);
  std::vector<DensePolynomial> polys;
  if (c.poly) {
    for (std::size_t n = 0; n <= c.n; ++n) polys.push_back(moments::moment_polynomial(n).poly);
  }
  if (c.format == "csv") {
    out << "n,moment" << (c.poly ? ",polynomial" : "") << '\n';
    for (std::size_t n = 0; n <= c.n; ++n) {
      out << n << ',' << to_string(d[n]);
      if (c.poly) out << ',' << polys[n].to_string("m");
      out << '\n';
    }
    return kOk;
  }
  Json j = header(c);
  j["m"] = c.m;
  j["n_max"] = c.n;
  Json values = Json::array();
  for (const auto& v : d) values.push_back(to_string(v));
  j["moments"] = std::move(values);
  if (c.poly) {
    Json arr = Json::array();
    for (std::size_t n = 0; n <= c.n; ++n) {
      Json p;
      p["n"] = n;
      p["polynomial"] = polys[n].to_string("m");
      p["coefficients"] = coefficient_array(polys[n]);
      arr.push_back(std::move(p));
    }
    j["polynomials"] = std::move(arr);
  }
  if (c.cumulants > 0) {
    Json arr = Json::array();
    const auto r = moments::monotone_cumulants(c.cumulants);
    for (std::size_t k = 1; k <= r.size(); ++k) arr.push_back(r[k].to_string());
    j["cumulants"] = std::move(arr);
  }
  emit(out, j);
  return kOk;
}

int run_cumulants(const RunConfig& c, std::ostream& out) {
  const auto r = moments::monotone_cumulants(c.k);
  if (c.format == "csv") {
    out << "k,cumulant\n";
    for (std::size_t k = 1; k <= r.size(); ++k) out << k << ',' << r[k].to_string() << '\n';
    return kOk;
  }
  Json j = header(c);
  j["k_max"] = c.k;
  Json arr = Json::array();
  for (std::size_t k = 1; k <= r.size(); ++k) arr.push_back(r[k].to_string());
  j["cumulants"] = std::move(arr);
  emit(out, j);
  return kOk;
}

int run_poly(const RunConfig& c, std::ostream& out) {
  if (c.format == "csv") {
    out << "n,polynomial\n";
    for (std::size_t n = 0; n <= c.n; ++n) {
      out << n << ',' << moments::moment_polynomial(n).poly.to_string("m") << '\n';
    }
    return kOk;
  }
  Json j = header(c);
  j["n_max"] = c.n;
  Json arr = Json::array();
  for (std::size_t n = 0; n <= c.n; ++n) {
    const auto p = moments::moment_polynomial(n).poly;
    Json row;
    row["n"] = n;
    row["polynomial"] = p.to_string("m");
    row["coefficients"] = coefficient_array(p);
    arr.push_back(std::move(row));
  }
  j["polynomials"] = std::move(arr);
  emit(out, j);
  return kOk;
}

transforms::DensityCurve sample_curve(const RunConfig& c) {
  const double edge = transforms::support_endpoint_approx(c.m) + 0.25;
  const double lo = c.x_min.value_or(-edge);
  const double hi = c.x_max.value_or(edge);
  if (!(lo <= hi)) throw ValidationError("--x-min must not exceed --x-max");
  auto curve = transforms::density_curve(c.m, lo, hi, c.samples);
  for (auto& s : curve.samples) {
    s.estimate.converged = s.estimate.residual <= c.tolerance && s.estimate.value >= 0.0;
  }
  return curve;
}

int run_density(const RunConfig& c, std::ostream& out) {
  const auto curve = sample_curve(c);
  if (c.format == "svg") {
    out << render_density_svg(curve, c.seed);
    return kOk;
  }
  if (c.format == "csv") {
    out << "x,density,residual,converged\n";
    for (const auto& s : curve.samples) {
      out << format_double(s.x) << ',' << format_double(s.estimate.value) << ','
          << format_double(s.estimate.residual) << ',' << (s.estimate.converged ? "true" : "false")
          << '\n';
    }
    return kOk;
  }
  Json j = header(c);
  j["m"] = c.m;
  j["tolerance"] = c.tolerance;
  Json ladder = Json::array();
  for (double y : transforms::kDefaultYLadder) ladder.push_back(y);
  j["y_ladder"] = std::move(ladder);
  Json arr = Json::array();
  std::size_t flagged = 0;
  for (const auto& s : curve.samples) {
    Json row;
    row["x"] = s.x;
    row["g"] = s.estimate.value;
    row["residual"] = s.estimate.residual;
    row["converged"] = s.estimate.converged;
    if (!s.estimate.converged) ++flagged;
    arr.push_back(std::move(row));
  }
  j["samples"] = std::move(arr);
  j["flagged_samples"] = flagged;
  emit(out, j);
  return kOk;
}

int run_plot(const RunConfig& c, std::ostream& out) {
  const std::string svg = render_density_svg(sample_curve(c), c.seed);
  if (c.output.empty()) {
    out << svg;
    return kOk;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file " + c.output);
  file << svg;
  return kOk;
}

int run_support(const RunConfig& c, std::ostream& out) {
  const auto report = transforms::endpoint_bounds_check(c.m_max, true);
  auto flag = [](const std::optional<bool>& b) -> Json { return b ? Json(*b) : Json(nullptr); };
  auto csv_flag = [](const std::optional<bool>& b) -> std::string {
    return b ? (*b ? "true" : "false") : "";
  };
  if (c.format == "csv") {
    out << "m,a_exact,a_approx,lower_bound,upper_bound,ratio_bound,scaled_decreasing\n";
    for (const auto& row : report.rows) {
      out << row.m << ',' << (row.exact ? row.exact->to_string() : "") << ','
          << format_double(row.approx) << ',' << csv_flag(row.lower_bound_holds) << ','
          << csv_flag(row.upper_bound_holds) << ',' << csv_flag(row.ratio_bound_holds) << ','
          << csv_flag(row.scaled_decreasing) << '\n';
    }
    return kOk;
  }
  Json j = header(c);
  j["m_max"] = c.m_max;
  j["exact_through"] = report.exact_through;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["m"] = row.m;
    r["a_exact"] = row.exact ? Json(row.exact->to_string()) : Json(nullptr);
    r["a_approx"] = tagged(row.approx, 1e-15 * row.approx * static_cast<double>(row.m));
    r["lower_bound"] = flag(row.lower_bound_holds);
    r["upper_bound"] = flag(row.upper_bound_holds);
    r["ratio_bound"] = flag(row.ratio_bound_holds);
    r["scaled_decreasing"] = flag(row.scaled_decreasing);
    rows.push_back(std::move(r));
  }
  j["endpoints"] = std::move(rows);
  j["passed"] = report.passed();
  emit(out, j);
  return kOk;
}

int run_orthopoly(const RunConfig& c, std::ostream& out) {
  const auto moments = orthopoly::full_moments(c.m, c.order);
  const auto jc = orthopoly::jacobi_from_moments(moments, c.order);
  const auto polys = orthopoly::monic_orthogonal_polys(jc, c.order);
  const auto orth = orthopoly::verify_orthogonality(polys, moments, &jc);
  Json j = header(c);
  j["m"] = c.m;
  j["order"] = c.order;
  Json alpha = Json::array(), beta = Json::array();
  for (const auto& a : jc.alpha) alpha.push_back(a.to_string());
  for (const auto& b : jc.beta) beta.push_back(b.to_string());
  j["alpha"] = std::move(alpha);
  j["beta"] = std::move(beta);
  Json arr = Json::array();
  for (std::size_t n = 0; n < polys.size(); ++n) {
    Json row;
    row["n"] = n;
    row["polynomial"] = polys[n].to_string("x");
    row["coefficients"] = coefficient_array(polys[n]);
    arr.push_back(std::move(row));
  }
  j["polynomials"] = std::move(arr);
  j["orthogonal"] = orth.passed();
  emit(out, j);
  return orth.passed() ? kOk : kVerificationFailed;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const VerifyOptions options{c.seed, c.enumeration_bound};
  Json j = header(c);
  j["suite"] = c.suite;
  Json suites;
  const bool all = c.suite == "all";
  if (all || c.suite == "partitions") suites["partitions"] = verify_partitions(options);
  if (all || c.suite == "fock") suites["fock"] = verify_fock(options);
  if (all) suites["moments"] = verify_moments(options);
  if (all || c.suite == "transforms") suites["transforms"] = verify_transforms(options);
  if (all || c.suite == "orthopoly") suites["orthopoly"] = verify_orthopoly(options);
  bool passed = true;
  Json failures = Json::array();
  for (const auto& [name, report] : suites.items()) {
    if (!report.at("passed").get<bool>()) {
      passed = false;
      failures.push_back(name);
    }
  }
  j["passed"] = passed;
  if (!passed) j["failed_suites"] = std::move(failures);
  j["suites"] = std::move(suites);
  emit(out, j);
  return passed ? kOk : kVerificationFailed;
}

std::size_t default_enumeration_bound() {
  const char* env = std::getenv(kEnumBoundVariable);
  if (env == nullptr || *env == '\0') return partitions::kDefaultEnumerationBound;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(env, &used);
    if (used == std::string(env).size() && value >= 1 && value <= 16) return value;
  } catch (const std::exception&) {
  }
  throw ValidationError(std::string(kEnumBoundVariable) + " must be an integer in [1, 16]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Moments, cumulants, transforms and orthogonal polynomials of monotone "
               "convolution powers of the semicircle law",
               "monoconv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  auto* bound_opt =
      app.add_option("--enum-bound", config.enumeration_bound,
                     "Largest n for partition enumeration (env MONOCONV_ENUM_BOUND)")
          ->check(CLI::Range(1, 16));

  const auto power = CLI::Range(std::size_t{1}, kMaxPower);

  auto* moments_cmd = app.add_subcommand("moments", "Even moments d_n^(m)");
  moments_cmd->add_option("--m", config.m, "Convolution power")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxMomentPower));
  moments_cmd->add_option("--n", config.n, "Largest moment index")
      ->required()
      ->check(CLI::Range(std::size_t{0}, kMaxMomentIndex));
  moments_cmd->add_flag("--poly", config.poly, "Include d_n as polynomials in m");
  moments_cmd->add_option("--cumulants", config.cumulants, "Include cumulants r_1..r_K")
      ->check(CLI::Range(std::size_t{1}, std::size_t{200}));
  moments_cmd->add_option("--format", config.format, "Output format: csv (default) or json")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* cumulants_cmd = app.add_subcommand("cumulants", "Monotone cumulants of the semicircle law");
  cumulants_cmd->add_option("--k", config.k, "Largest cumulant index")
      ->check(CLI::Range(std::size_t{1}, std::size_t{200}))
      ->capture_default_str();
  cumulants_cmd->add_option("--format", config.format, "Output format: json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* poly_cmd = app.add_subcommand("poly", "d_n^(m) as polynomials in m");
  poly_cmd->add_option("--n", config.n, "Largest moment index")
      ->check(CLI::Range(std::size_t{0}, std::size_t{200}))
      ->capture_default_str();
  poly_cmd->add_option("--format", config.format, "Output format: json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto add_curve_options = [&](CLI::App* cmd) {
    cmd->add_option("--m", config.m, "Convolution power")->required()->check(power);
    cmd->add_option("--x-min", config.x_min, "Left end of the grid (default -a_m - 1/4)");
    cmd->add_option("--x-max", config.x_max, "Right end of the grid (default a_m + 1/4)");
    cmd->add_option("--samples", config.samples, "Number of grid points")
        ->check(CLI::Range(std::size_t{1}, kMaxSamples))
        ->capture_default_str();
    cmd->add_option("--tolerance", config.tolerance, "Extrapolation residual flag threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto* density_cmd = app.add_subcommand("density", "Density by Stieltjes inversion");
  add_curve_options(density_cmd);
  density_cmd->add_option("--format", config.format, "Output format: csv (default), json or svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}));

  auto* plot_cmd = app.add_subcommand("plot", "SVG plot of the density");
  add_curve_options(plot_cmd);
  plot_cmd->add_option("--output,-o", config.output, "Output file (default stdout)");

  auto* support_cmd = app.add_subcommand("support", "Support endpoints a_m and their bounds");
  support_cmd->add_option("--m-max", config.m_max, "Largest m")->required()->check(power);
  support_cmd->add_option("--format", config.format, "Output format: json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* orthopoly_cmd = app.add_subcommand("orthopoly", "Monic orthogonal polynomials");
  orthopoly_cmd->add_option("--m", config.m, "Convolution power")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  orthopoly_cmd->add_option("--order", config.order, "Largest polynomial degree")
      ->required()
      ->check(CLI::Range(std::size_t{1}, kMaxOrder));
  orthopoly_cmd->add_option("--format", config.format, "Output format: json")
      ->check(CLI::IsMember({"json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check independent computations");
  verify_cmd->add_option("suite", config.suite, "partitions, fock, transforms, orthopoly or all")
      ->check(CLI::IsMember({"partitions", "fock", "transforms", "orthopoly", "all"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (bound_opt->count() == 0) config.enumeration_bound = default_enumeration_bound();
    config.subcommand = app.get_subcommands().front()->get_name();
    const std::string& cmd = config.subcommand;
    if (config.format.empty()) {
      config.format = cmd == "moments" || cmd == "density" ? "csv" : "json";
    }
    if (cmd == "moments") return run_moments(config, out);
    if (cmd == "cumulants") return run_cumulants(config, out);
    if (cmd == "poly") return run_poly(config, out);
    if (cmd == "density") return run_density(config, out);
    if (cmd == "plot") return run_plot(config, out);
    if (cmd == "support") return run_support(config, out);
    if (cmd == "orthopoly") return run_orthopoly(config, out);
    if (cmd == "verify") return run_verify(config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalDomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    Json j;
    j["command"] = config.subcommand;
    j["seed"] = config.seed;
    j["passed"] = false;
    j["error"] = e.what();
    emit(out, j);
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace monoconv::cli
