// disq: exact discriminants, certified real roots, and the non-Gaussian
// integral int_R |f(x)|^(-2/n) dx, with verification sweeps tying the two
// sides together.
//
// Coefficients are given highest degree first, as integers or "p/q"
// rationals. Machine-readable JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <cmath>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "disq/exact_poly.hpp"
#include "disq/quadrature.hpp"
#include "disq/real_roots.hpp"
#include "disq/specfun.hpp"
#include "disq/sweep.hpp"
#include "disq/symbolic_disc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Malformed coefficient syntax is a usage error (exit 2); semantic
// violations (bad degree, divergence) stay domain errors (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

disq::Polynomial parse_poly(const std::vector<std::string>& args) {
  std::vector<disq::Rational> coeffs;
  coeffs.reserve(args.size());
  for (const auto& a : args) {
    try {
      coeffs.push_back(disq::rational_from_string(a));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return disq::Polynomial(std::move(coeffs));
}

std::string json_double(double v) { return disq::double_to_json(v); }

int cmd_disc(const std::vector<std::string>& coeff_args) {
  disq::Polynomial f = parse_poly(coeff_args);
  disq::Rational d = disq::discriminant(f);
  std::cout << "{\"D\":\"" << d.get_str() << "\",\"sign\":" << disq::sign(d)
            << "}\n";
  return kExitOk;
}

int cmd_symdisc(int n, int cap) {
  disq::SymPoly d = disq::sym_discriminant(n, cap);
  std::cout << "{\"n\":" << n << ",\"term_count\":" << d.term_count()
            << ",\"pretty\":\"" << d.pretty() << "\",\"terms\":" << d.to_json()
            << "}\n";
  return kExitOk;
}

int cmd_roots(const std::vector<std::string>& coeff_args, double eps) {
  disq::Polynomial f = parse_poly(coeff_args);
  disq::IsolationResult iso = disq::isolate(f);
  disq::Polynomial g = disq::squarefree_part(f);
  std::cout << "{\"count\":" << iso.intervals.size() << ",\"multiplicity_flag\":"
            << (iso.multiplicity_flag ? "true" : "false") << ",\"intervals\":[";
  for (size_t i = 0; i < iso.intervals.size(); ++i) {
    const auto& iv = iso.intervals[i];
    if (i) std::cout << ",";
    std::cout << "{\"lo\":\"" << iv.lo.get_str() << "\",\"hi\":\""
              << iv.hi.get_str() << "\",\"root\":"
              << json_double(disq::refine(g, iv, eps)) << "}";
  }
  std::cout << "]}\n";
  return kExitOk;
}

int cmd_integrate(const std::vector<std::string>& coeff_args,
                  std::optional<int> n_flag, double tol) {
  disq::Polynomial f = parse_poly(coeff_args);
  const int n = n_flag.value_or(f.degree());
  if (n != f.degree()) {
    std::cerr << "disq: --n (" << n << ") does not match the coefficient count ("
              << f.degree() + 1 << " coefficients => degree " << f.degree()
              << ")\n";
    return kExitUsage;
  }
  disq::IntegralResult r = disq::integrate_power(f, n, tol);
  disq::Rational d = disq::discriminant(f);
  std::cout << "{\"value\":" << json_double(r.value)
            << ",\"error_estimate\":" << json_double(r.abs_error_estimate)
            << ",\"pieces\":" << r.pieces
            << ",\"levels_used\":" << r.levels_used << ",\"discriminant\":\""
            << d.get_str() << "\"";
  if (n == 3 && d != 0) {
    const double c =
        disq::sign(d) > 0 ? disq::constant_C_plus() : disq::constant_C_minus();
    const double predicted =
        c / std::pow(std::abs(disq::to_double(d)), 1.0 / 6.0);
    std::cout << ",\"predicted\":" << json_double(predicted);
  }
  std::cout << "}\n";
  return kExitOk;
}

int cmd_gaussian(double a, double b, double c, double tol) {
  auto [numeric, closed_form] = disq::gaussian_check(a, b, c, tol);
  std::cout << "{\"numeric\":" << json_double(numeric)
            << ",\"closed_form\":" << json_double(closed_form)
            << ",\"rel_error\":"
            << json_double(std::abs(numeric - closed_form) / closed_form)
            << "}\n";
  return kExitOk;
}

int cmd_identity(double tol) {
  const double c_minus = disq::constant_C_minus();
  const double c_plus = disq::constant_C_plus();
  const double lhs = std::sqrt(3.0) * disq::beta(1.0 / 3, 1.0 / 3);
  const double rhs = std::cbrt(2.0) * disq::beta(0.5, 1.0 / 6);
  const double anchor = disq::beta(0.5, 0.5);
  const double pi = 3.14159265358979323846;
  const double by_integral = disq::beta_by_integral(0.5, 0.5, tol);
  std::cout << "{\"C_minus\":" << json_double(c_minus)
            << ",\"C_plus\":" << json_double(c_plus)
            << ",\"ratio\":" << json_double(c_plus / c_minus)
            << ",\"formula_iii_residual\":"
            << json_double(std::abs(lhs - rhs) / c_minus)
            << ",\"beta_half_half\":" << json_double(anchor)
            << ",\"beta_half_half_by_integral\":" << json_double(by_integral)
            << ",\"pi_anchor_rel_error\":"
            << json_double(std::abs(anchor - pi) / pi) << "}\n";
  return kExitOk;
}

int cmd_verify_cubic(const disq::SweepConfig& cfg, const std::string& format) {
  disq::SweepResult res = disq::run_cubic_sweep(cfg);
  if (format == "csv") {
    std::cout << disq::sweep_csv_header() << "\n";
    for (const auto& r : res.records) std::cout << disq::to_csv_line(r) << "\n";
  } else {
    for (const auto& r : res.records) std::cout << disq::to_json_line(r) << "\n";
    std::cout << disq::to_json(res.summary) << "\n";
  }
  std::cerr << "verify-cubic: " << res.summary.ok << "/" << res.summary.records
            << " ok, max rel error (D<0) "
            << res.summary.d_neg.max_rel_error << ", (D>0) "
            << res.summary.d_pos.max_rel_error << "\n";
  return kExitOk;
}

int cmd_explore(const disq::SweepConfig& cfg, const std::string& format) {
  disq::ExplorationResult res = disq::run_exploration(cfg);
  if (format == "csv") {
    std::cout << disq::explore_csv_header() << "\n";
    for (const auto& t : res.trials) std::cout << disq::to_csv_line(t) << "\n";
  } else {
    for (const auto& t : res.trials) std::cout << disq::to_json_line(t) << "\n";
    for (const auto& o : res.orbits) std::cout << disq::to_json_line(o) << "\n";
    std::cout << disq::to_json(res.summary) << "\n";
  }
  std::cerr << "explore n=" << cfg.n << ": P in [" << res.summary.p_min << ", "
            << res.summary.p_max << "] over " << res.summary.ok
            << " ok trials; orbit max deviation "
            << res.summary.orbit_max_rel_dev
            << (res.summary.orbit_pass ? " (pass)" : " (FAIL)") << "\n";
  return res.summary.orbit_pass ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "disq: polynomial discriminants, certified real roots, and the "
      "non-Gaussian integral int |f|^(-2/n) dx"};
  app.require_subcommand(1);

  std::vector<std::string> coeff_args;
  std::optional<int> n_flag;
  double tol = 1e-10;
  double eps = 1e-12;
  int sym_n = 3;
  int sym_cap = 6;
  double ga = 1, gb = 0, gc = 1;
  disq::SweepConfig cfg;
  std::string format = "json";

  auto* disc = app.add_subcommand("disc", "Exact discriminant of a polynomial");
  disc->add_option("coeffs", coeff_args, "coefficients, highest degree first")
      ->required()
      ->expected(-1);

  auto* symdisc =
      app.add_subcommand("symdisc", "Symbolic discriminant in a0..a_n");
  symdisc->add_option("n", sym_n, "degree (2..cap)")->required();
  symdisc->add_option("--cap", sym_cap, "degree cap (default 6)");

  auto* roots = app.add_subcommand("roots", "Isolate and refine real roots");
  roots->add_option("coeffs", coeff_args, "coefficients, highest degree first")
      ->required()
      ->expected(-1);
  roots->add_option("--eps", eps, "refinement tolerance (default 1e-12)");

  auto* integrate =
      app.add_subcommand("integrate", "Evaluate int_R |f(x)|^(-2/n) dx");
  integrate
      ->add_option("coeffs", coeff_args, "coefficients, highest degree first")
      ->required()
      ->expected(-1);
  integrate->add_option("--n", n_flag, "declared degree (must match coeffs)");
  integrate->add_option("--tol", tol, "tolerance in [1e-13, 1e-4]");

  auto* gaussian = app.add_subcommand(
      "gaussian-check", "Engine vs 2*pi/sqrt(-D) for a positive quadratic");
  gaussian->add_option("a", ga)->required();
  gaussian->add_option("b", gb)->required();
  gaussian->add_option("c", gc)->required();
  gaussian->add_option("--tol", tol, "tolerance (default 1e-10)");

  auto* identity = app.add_subcommand(
      "identity-check", "C-, C+, the Beta identity residual and the pi anchor");
  identity->add_option("--tol", tol, "tolerance for the integral cross-check");

  auto* verify = app.add_subcommand(
      "verify-cubic", "Random-cubic sweep: integral vs C_sign/|D|^(1/6)");
  verify->add_option("--count", cfg.count, "records to produce (default 100)");
  verify->add_option("--seed", cfg.seed, "RNG seed (default 1)");
  verify->add_option("--range", cfg.coeff_range, "coefficient box (default 9)");
  verify->add_option("--tol", cfg.tol, "integration tolerance (default 1e-10)");
  verify->add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* explore = app.add_subcommand(
      "explore", "Degree-4/5 exploration of P = I*|D|^(1/(n(n-1)))");
  explore->add_option("--n", cfg.n, "degree, 4 or 5")
      ->required()
      ->check(CLI::IsMember({4, 5}));
  explore->add_option("--count", cfg.count, "trials (default 100)");
  explore->add_option("--seed", cfg.seed, "RNG seed (default 1)");
  explore->add_option("--range", cfg.coeff_range, "coefficient box (default 9)");
  explore->add_option("--tol", cfg.tol, "integration tolerance (default 1e-10)");
  explore->add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (disc->parsed()) return cmd_disc(coeff_args);
    if (symdisc->parsed()) return cmd_symdisc(sym_n, sym_cap);
    if (roots->parsed()) return cmd_roots(coeff_args, eps);
    if (integrate->parsed()) return cmd_integrate(coeff_args, n_flag, tol);
    if (gaussian->parsed()) return cmd_gaussian(ga, gb, gc, tol);
    if (identity->parsed()) return cmd_identity(tol);
    if (verify->parsed()) return cmd_verify_cubic(cfg, format);
    if (explore->parsed()) return cmd_explore(cfg, format);
  } catch (const UsageError& e) {
    std::cerr << "disq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "disq: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
