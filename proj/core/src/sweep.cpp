#include "disq/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "disq/exact_poly.hpp"
#include "disq/quadrature.hpp"
#include "disq/specfun.hpp"

namespace disq {

namespace {

// Rejection-sampled bounded draw: identical streams on every platform,
// unlike std::uniform_int_distribution.
int draw_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<int>(v % span);
}

int draw_nonzero(std::mt19937_64& rng, int range) {
  int v;
  do {
    v = draw_int(rng, -range, range);
  } while (v == 0);
  return v;
}

Polynomial draw_poly(std::mt19937_64& rng, int degree, int range) {
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  c[0] = draw_nonzero(rng, range);
  for (int i = 1; i <= degree; ++i)
    c[static_cast<size_t>(i)] = draw_int(rng, -range, range);
  return Polynomial(std::move(c));
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

const char* to_string(TrialStatus s) {
  switch (s) {
    case TrialStatus::ok: return "ok";
    case TrialStatus::divergent: return "divergent";
    case TrialStatus::tol_fail: return "tol_fail";
  }
  return "?";
}

SweepResult run_cubic_sweep(const SweepConfig& cfg) {
  if (cfg.n != 3)
    throw std::invalid_argument("cubic sweep needs n == 3");
  if (cfg.count < 1 || cfg.coeff_range < 1)
    throw std::invalid_argument("count and range must be >= 1");

  std::mt19937_64 rng(cfg.seed);
  SweepResult out;
  std::vector<double> rel_neg, rel_pos;

  while (static_cast<int>(out.records.size()) < cfg.count) {
    Polynomial f = draw_poly(rng, 3, cfg.coeff_range);
    Rational D = discriminant(f);
    if (D == 0) {
      ++out.summary.skipped_zero_disc;
      continue;
    }
    SweepRecord rec;
    rec.trial = static_cast<int>(out.records.size());
    rec.coeffs = f.coeffs();
    rec.n = 3;
    rec.D = D;
    rec.sign_D = sign(D);
    const double c_sign = rec.sign_D > 0 ? constant_C_plus() : constant_C_minus();
    rec.predicted = c_sign / std::pow(std::abs(to_double(D)), 1.0 / 6.0);
    try {
      IntegralResult ir = integrate_power(f, 3, cfg.tol);
      rec.integral = ir.value;
      rec.status = TrialStatus::ok;
      rec.rel_error = std::abs(ir.value - *rec.predicted) / *rec.predicted;
      (rec.sign_D > 0 ? rel_pos : rel_neg).push_back(*rec.rel_error);
      ++out.summary.ok;
    } catch (const RepeatedRootDivergence&) {
      rec.status = TrialStatus::divergent;
      ++out.summary.divergent;
    } catch (const ToleranceNotReached& e) {
      rec.status = TrialStatus::tol_fail;
      rec.integral = e.partial().value;
      ++out.summary.tol_fail;
    }
    out.records.push_back(std::move(rec));
  }

  out.summary.records = static_cast<int>(out.records.size());
  out.summary.d_neg.count = static_cast<int>(rel_neg.size());
  out.summary.d_pos.count = static_cast<int>(rel_pos.size());
  if (!rel_neg.empty())
    out.summary.d_neg.max_rel_error = *std::max_element(rel_neg.begin(), rel_neg.end());
  if (!rel_pos.empty())
    out.summary.d_pos.max_rel_error = *std::max_element(rel_pos.begin(), rel_pos.end());
  out.summary.d_neg.median_rel_error = median_of(rel_neg);
  out.summary.d_pos.median_rel_error = median_of(rel_pos);
  return out;
}

namespace {

struct Transform {
  Rational t;       // translation
  Rational s;       // x-scale, positive
  Rational lambda;  // overall scale, positive
  bool reverse = false;

  std::string describe() const {
    std::ostringstream out;
    out << "t=" << t.get_str() << " s=" << s.get_str()
        << " lambda=" << lambda.get_str() << " rev=" << (reverse ? 1 : 0);
    return out.str();
  }
};

Transform draw_transform(std::mt19937_64& rng) {
  Transform tr;
  tr.t = Rational(draw_int(rng, -3, 3), draw_int(rng, 1, 3));
  tr.t.canonicalize();
  tr.s = Rational(draw_int(rng, 1, 3), draw_int(rng, 1, 2));
  tr.s.canonicalize();
  tr.lambda = Rational(draw_int(rng, 1, 3), draw_int(rng, 1, 2));
  tr.lambda.canonicalize();
  tr.reverse = draw_int(rng, 0, 1) == 1;
  return tr;
}

Polynomial apply_transform(const Polynomial& base, Transform& tr) {
  Polynomial g = base.translated(tr.t).scaled_x(tr.s).scaled(tr.lambda);
  if (tr.reverse && g.constant_term() != 0) return g.reversed();
  tr.reverse = false;  // reversal skipped: root at 0 / degree would drop
  return g;
}

}  // namespace

OrbitFamily run_orbit_family(const Polynomial& base, int n, int members,
                             std::uint64_t seed, double tol) {
  if (base.degree() != n)
    throw std::invalid_argument("orbit base degree must equal n");
  const double inv_weight = 1.0 / (n * (n - 1));

  OrbitFamily fam;
  fam.base_coeffs = base.coeffs();
  fam.base_D = discriminant(base);
  fam.covariance_mode = fam.base_D == 0;

  const double base_integral = integrate_power(base, n, tol).value;
  fam.base_value =
      fam.covariance_mode
          ? base_integral
          : base_integral * std::pow(std::abs(to_double(fam.base_D)), inv_weight);

  std::mt19937_64 rng(seed);
  for (int i = 0; i < members; ++i) {
    Transform tr = draw_transform(rng);
    OrbitMember m;
    Polynomial g = apply_transform(base, tr);
    m.transform = tr.describe();
    m.coeffs = g.coeffs();
    m.D = discriminant(g);
    try {
      const double value = integrate_power(g, n, tol).value;
      m.integral = value;
      if (fam.covariance_mode) {
        // Predicted integral from the covariance laws: translation and
        // reversal neutral, f(sx) divides by s, lambda*f scales by
        // lambda^(-2/n).
        const double pred = base_integral / to_double(tr.s) *
                            std::pow(to_double(tr.lambda), -2.0 / n);
        m.rel_dev = std::abs(value - pred) / std::abs(pred);
      } else {
        m.P = value * std::pow(std::abs(to_double(m.D)), inv_weight);
        m.rel_dev = std::abs(*m.P - fam.base_value) / std::abs(fam.base_value);
      }
      fam.max_rel_dev = std::max(fam.max_rel_dev, *m.rel_dev);
    } catch (const RepeatedRootDivergence&) {
      m.status = TrialStatus::divergent;
    } catch (const ToleranceNotReached&) {
      m.status = TrialStatus::tol_fail;
    }
    fam.members.push_back(std::move(m));
  }
  return fam;
}

ExplorationResult run_exploration(const SweepConfig& cfg) {
  if (cfg.n != 4 && cfg.n != 5)
    throw std::invalid_argument("exploration runs at n in {4, 5}");
  if (cfg.count < 1 || cfg.coeff_range < 1)
    throw std::invalid_argument("count and range must be >= 1");

  std::mt19937_64 rng(cfg.seed);
  ExplorationResult out;
  out.summary.n = cfg.n;
  const double inv_weight = 1.0 / (cfg.n * (cfg.n - 1));
  std::vector<double> p_values;

  for (int i = 0; i < cfg.count; ++i) {
    Polynomial f = draw_poly(rng, cfg.n, cfg.coeff_range);
    ExploreTrial trial;
    trial.trial = i;
    trial.coeffs = f.coeffs();
    trial.n = cfg.n;
    trial.D = discriminant(f);
    trial.sign_D = sign(trial.D);
    try {
      IntegralResult ir = integrate_power(f, cfg.n, cfg.tol);
      trial.integral = ir.value;
      trial.P = ir.value * std::pow(std::abs(to_double(trial.D)), inv_weight);
      // D == 0 draws (repeated complex roots, or a real double root still
      // below n/2) give P == 0 exactly; keep the record but leave the
      // degenerate stratum out of the spread statistics.
      if (trial.sign_D != 0) p_values.push_back(*trial.P);
      ++out.summary.ok;
    } catch (const RepeatedRootDivergence&) {
      trial.status = TrialStatus::divergent;
      ++out.summary.divergent;
    } catch (const ToleranceNotReached& e) {
      trial.status = TrialStatus::tol_fail;
      trial.integral = e.partial().value;
      ++out.summary.tol_fail;
    }
    out.trials.push_back(std::move(trial));
  }
  out.summary.trials = cfg.count;
  if (!p_values.empty()) {
    out.summary.p_min = *std::min_element(p_values.begin(), p_values.end());
    out.summary.p_max = *std::max_element(p_values.begin(), p_values.end());
    out.summary.p_median = median_of(p_values);
    out.summary.p_spread = out.summary.p_max - out.summary.p_min;
  }

  // Two orbit families per run; bases are random with D != 0, which keeps
  // every root simple, so the whole family stays integrable.
  for (int fam = 0; fam < 2; ++fam) {
    Polynomial base = draw_poly(rng, cfg.n, cfg.coeff_range);
    while (discriminant(base) == 0) base = draw_poly(rng, cfg.n, cfg.coeff_range);
    out.orbits.push_back(run_orbit_family(base, cfg.n, 10, rng(), cfg.tol));
    out.summary.orbit_max_rel_dev =
        std::max(out.summary.orbit_max_rel_dev, out.orbits.back().max_rel_dev);
  }
  out.summary.orbit_families = static_cast<int>(out.orbits.size());
  out.summary.orbit_pass =
      out.summary.orbit_max_rel_dev <= out.summary.orbit_tolerance;
  return out;
}

// ---- serialization -----------------------------------------------------

std::string double_to_json(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

std::string coeffs_to_json(const std::vector<Rational>& coeffs) {
  std::string out = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += "\"" + coeffs[i].get_str() + "\"";
  }
  return out + "]";
}

namespace {

void append_optional(std::string& out, const char* key,
                     const std::optional<double>& v) {
  if (!v) return;
  out += ",\"";
  out += key;
  out += "\":";
  out += double_to_json(*v);
}

}  // namespace

std::string to_json_line(const SweepRecord& r) {
  std::string out = "{\"trial\":" + std::to_string(r.trial);
  out += ",\"coeffs\":" + coeffs_to_json(r.coeffs);
  out += ",\"n\":" + std::to_string(r.n);
  out += ",\"D\":\"" + r.D.get_str() + "\"";
  out += ",\"sign_D\":" + std::to_string(r.sign_D);
  out += ",\"status\":\"" + std::string(to_string(r.status)) + "\"";
  append_optional(out, "integral", r.integral);
  append_optional(out, "predicted", r.predicted);
  append_optional(out, "rel_error", r.rel_error);
  return out + "}";
}

std::string to_json(const SweepSummary& s) {
  auto stratum = [](const StratumStats& st) {
    return "{\"count\":" + std::to_string(st.count) +
           ",\"max_rel_error\":" + double_to_json(st.max_rel_error) +
           ",\"median_rel_error\":" + double_to_json(st.median_rel_error) + "}";
  };
  return "{\"summary\":{\"records\":" + std::to_string(s.records) +
         ",\"ok\":" + std::to_string(s.ok) +
         ",\"divergent\":" + std::to_string(s.divergent) +
         ",\"tol_fail\":" + std::to_string(s.tol_fail) +
         ",\"skipped_zero_disc\":" + std::to_string(s.skipped_zero_disc) +
         ",\"d_neg\":" + stratum(s.d_neg) + ",\"d_pos\":" + stratum(s.d_pos) +
         "}}";
}

std::string to_json_line(const ExploreTrial& t) {
  std::string out = "{\"trial\":" + std::to_string(t.trial);
  out += ",\"coeffs\":" + coeffs_to_json(t.coeffs);
  out += ",\"n\":" + std::to_string(t.n);
  out += ",\"D\":\"" + t.D.get_str() + "\"";
  out += ",\"sign_D\":" + std::to_string(t.sign_D);
  out += ",\"status\":\"" + std::string(to_string(t.status)) + "\"";
  append_optional(out, "integral", t.integral);
  append_optional(out, "P", t.P);
  return out + "}";
}

std::string to_json_line(const OrbitFamily& o) {
  std::string out = "{\"orbit\":{\"base\":" + coeffs_to_json(o.base_coeffs);
  out += ",\"base_D\":\"" + o.base_D.get_str() + "\"";
  out += ",\"mode\":\"" + std::string(o.covariance_mode ? "covariance" : "product") + "\"";
  out += ",\"base_value\":" + double_to_json(o.base_value);
  out += ",\"members\":[";
  for (size_t i = 0; i < o.members.size(); ++i) {
    const OrbitMember& m = o.members[i];
    if (i) out += ",";
    out += "{\"transform\":\"" + m.transform + "\"";
    out += ",\"coeffs\":" + coeffs_to_json(m.coeffs);
    out += ",\"D\":\"" + m.D.get_str() + "\"";
    out += ",\"status\":\"" + std::string(to_string(m.status)) + "\"";
    append_optional(out, "integral", m.integral);
    append_optional(out, "P", m.P);
    append_optional(out, "rel_dev", m.rel_dev);
    out += "}";
  }
  out += "],\"max_rel_dev\":" + double_to_json(o.max_rel_dev) + "}}";
  return out;
}

std::string to_json(const ExploreSummary& s) {
  return "{\"summary\":{\"n\":" + std::to_string(s.n) +
         ",\"trials\":" + std::to_string(s.trials) +
         ",\"ok\":" + std::to_string(s.ok) +
         ",\"divergent\":" + std::to_string(s.divergent) +
         ",\"tol_fail\":" + std::to_string(s.tol_fail) +
         ",\"P_min\":" + double_to_json(s.p_min) +
         ",\"P_max\":" + double_to_json(s.p_max) +
         ",\"P_median\":" + double_to_json(s.p_median) +
         ",\"P_spread\":" + double_to_json(s.p_spread) +
         ",\"orbit_families\":" + std::to_string(s.orbit_families) +
         ",\"orbit_max_rel_dev\":" + double_to_json(s.orbit_max_rel_dev) +
         ",\"orbit_tolerance\":" + double_to_json(s.orbit_tolerance) +
         ",\"orbit_pass\":" + (s.orbit_pass ? "true" : "false") + "}}";
}

namespace {

std::string quoted_coeffs(const std::vector<Rational>& coeffs) {
  std::string out = "\"";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += " ";
    out += coeffs[i].get_str();
  }
  return out + "\"";
}

std::string opt_field(const std::optional<double>& v) {
  return v ? double_to_json(*v) : std::string();
}

}  // namespace

std::string sweep_csv_header() {
  return "trial,status,n,sign_D,D,integral,predicted,rel_error,coeffs";
}

std::string to_csv_line(const SweepRecord& r) {
  return std::to_string(r.trial) + "," + to_string(r.status) + "," +
         std::to_string(r.n) + "," + std::to_string(r.sign_D) + "," +
         r.D.get_str() + "," + opt_field(r.integral) + "," +
         opt_field(r.predicted) + "," + opt_field(r.rel_error) + "," +
         quoted_coeffs(r.coeffs);
}

std::string explore_csv_header() {
  return "trial,status,n,sign_D,D,integral,P,coeffs";
}

std::string to_csv_line(const ExploreTrial& t) {
  return std::to_string(t.trial) + "," + to_string(t.status) + "," +
         std::to_string(t.n) + "," + std::to_string(t.sign_D) + "," +
         t.D.get_str() + "," + opt_field(t.integral) + "," + opt_field(t.P) +
         "," + quoted_coeffs(t.coeffs);
}

}  // namespace disq
