#ifndef DISQ_SWEEP_HPP
#define DISQ_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disq/polynomial.hpp"

namespace disq {

struct SweepConfig {
  int count = 100;
  std::uint64_t seed = 1;
  int coeff_range = 9;
  int n = 3;
  double tol = 1e-10;
};

enum class TrialStatus { ok, divergent, tol_fail };
const char* to_string(TrialStatus s);

// One verification trial: exact discriminant on one side, the integral and
// the closed-form prediction C_sign / |D|^(1/6) on the other.
struct SweepRecord {
  int trial = 0;
  std::vector<Rational> coeffs;
  int n = 3;
  Rational D;
  int sign_D = 0;
  TrialStatus status = TrialStatus::ok;
  std::optional<double> integral;
  std::optional<double> predicted;  // present iff n == 3 and sign_D != 0
  std::optional<double> rel_error;  // present iff predicted and status ok
};

struct StratumStats {
  int count = 0;
  double max_rel_error = 0.0;
  double median_rel_error = 0.0;
};

struct SweepSummary {
  int records = 0, ok = 0, divergent = 0, tol_fail = 0;
  int skipped_zero_disc = 0;
  StratumStats d_neg, d_pos;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

// Uniform integer cubics in [-range, range] with a0 != 0; D == 0 draws are
// skipped (both sides are infinite there, by the multiplicity rule).
// Deterministic per seed.
SweepResult run_cubic_sweep(const SweepConfig& cfg);

// ---- degree-4/5 exploration ------------------------------------------

struct ExploreTrial {
  int trial = 0;
  std::vector<Rational> coeffs;
  int n = 0;
  Rational D;
  int sign_D = 0;
  TrialStatus status = TrialStatus::ok;
  std::optional<double> integral;
  std::optional<double> P;  // integral * |D|^(1/(n(n-1)))
};

struct OrbitMember {
  std::string transform;
  std::vector<Rational> coeffs;
  Rational D;
  TrialStatus status = TrialStatus::ok;
  std::optional<double> integral;
  std::optional<double> P;
  std::optional<double> rel_dev;
};

struct OrbitFamily {
  std::vector<Rational> base_coeffs;
  Rational base_D;
  bool covariance_mode = false;  // base has D == 0: compare against the
                                 // covariance-predicted integral instead
  double base_value = 0.0;       // base P (product mode) or base integral
  std::vector<OrbitMember> members;
  double max_rel_dev = 0.0;
};

// One orbit family: `members` random translation/scale/lambda/reversal
// images of `base`, asserting the invariance of P (or, for a base with
// D == 0 but finite integral, the covariance-predicted integral).
OrbitFamily run_orbit_family(const Polynomial& base, int n, int members,
                             std::uint64_t seed, double tol);

struct ExploreSummary {
  int n = 0;
  int trials = 0, ok = 0, divergent = 0, tol_fail = 0;
  double p_min = 0.0, p_max = 0.0, p_median = 0.0, p_spread = 0.0;
  int orbit_families = 0;
  double orbit_max_rel_dev = 0.0;
  double orbit_tolerance = 1e-6;
  bool orbit_pass = false;
};

struct ExplorationResult {
  std::vector<ExploreTrial> trials;
  std::vector<OrbitFamily> orbits;
  ExploreSummary summary;
};

// The open-problem harness for n in {4, 5}: reports the spread of
// P = I * |D|^(1/(n(n-1))) across random polynomials (no truth asserted)
// and asserts P-constancy within random GL(2) orbits to 1e-6.
ExplorationResult run_exploration(const SweepConfig& cfg);

// ---- deterministic serialization --------------------------------------

// Shortest round-trip formatting; equal seeds give byte-identical output.
std::string double_to_json(double v);
std::string coeffs_to_json(const std::vector<Rational>& coeffs);

std::string to_json_line(const SweepRecord& r);
std::string to_json(const SweepSummary& s);
std::string to_json_line(const ExploreTrial& t);
std::string to_json_line(const OrbitFamily& o);
std::string to_json(const ExploreSummary& s);

std::string sweep_csv_header();
std::string to_csv_line(const SweepRecord& r);
std::string explore_csv_header();
std::string to_csv_line(const ExploreTrial& t);

}  // namespace disq

#endif  // DISQ_SWEEP_HPP
