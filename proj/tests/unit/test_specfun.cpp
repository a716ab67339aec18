#include <doctest.h>

#include <cmath>

#include "disq/specfun.hpp"
#include "disq/tanh_sinh.hpp"

using namespace disq;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Frozen 50-digit-oracle values (tests/oracle/gen_expected_values.py).
constexpr double kGammaThird = 2.678938534707747633656;
constexpr double kGammaSixth = 5.56631600178023520425;
constexpr double kBetaHalfSixth = 7.28595194366274483546;
constexpr double kBetaThirdThird = 5.299916250856349871941;
constexpr double kCMinus = 9.179724222343157249479;
constexpr double kCPlus = 15.89974875256904961582;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma: classical anchors and oracle digits") {
  CHECK(rel(disq::gamma(1.0), 1.0) <= 1e-14);
  CHECK(rel(disq::gamma(0.5), 1.7724538509055160273) <= 1e-14);
  CHECK(rel(disq::gamma(1.0 / 3.0), kGammaThird) <= 1e-14);
  CHECK(rel(disq::gamma(1.0 / 6.0), kGammaSixth) <= 1e-14);
  CHECK(rel(disq::gamma(10.0), 362880.0) <= 1e-14);
  CHECK(rel(disq::gamma(100.0), 9.332621544394415268e155) <= 1e-13);
  CHECK_THROWS_AS(disq::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(disq::gamma(-3.0), std::domain_error);
  CHECK(gamma_value(2.5).method == GammaMethod::lanczos);
  CHECK(gamma_value(0.25).method == GammaMethod::reflection);
  CHECK(rel(disq::gamma(-0.5), -2.0 * 1.7724538509055160273) <= 1e-13);
}

TEST_CASE("gamma recurrence p*gamma(p) == gamma(p+1)") {
  for (double p = 0.11; p < 50.0; p *= 1.37)
    CHECK(rel(p * disq::gamma(p), disq::gamma(p + 1.0)) <= 1e-13);
}

TEST_CASE("beta: anchors, symmetry, oracle digits") {
  CHECK(rel(disq::beta(1.0, 1.0), 1.0) <= 1e-14);
  CHECK(rel(disq::beta(0.5, 0.5), kPi) <= 1e-13);
  CHECK(rel(disq::beta(1.0 / 3, 1.0 / 3), kBetaThirdThird) <= 1e-12);
  CHECK(rel(disq::beta(0.5, 1.0 / 6), kBetaHalfSixth) <= 1e-12);
  CHECK(disq::beta(0.7, 2.9) == disq::beta(2.9, 0.7));
  CHECK_THROWS_AS(disq::beta(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(disq::beta(1.0, -2.0), std::domain_error);
}

TEST_CASE("beta by half-line integral cross-checks the closed form") {
  CHECK(std::abs(beta_by_integral(1.0, 1.0, 1e-10) - 1.0) <= 1e-10);
  CHECK(std::abs(beta_by_integral(0.5, 0.5, 1e-10) - kPi) <= 1e-10);
  CHECK(std::abs(beta_by_integral(0.5, 1.0 / 6, 1e-10) -
                 disq::beta(0.5, 1.0 / 6)) <= 1e-9);
  CHECK(std::abs(beta_by_integral(2.5, 3.5, 1e-11) - disq::beta(2.5, 3.5)) <=
        1e-11);
}

TEST_CASE("closed-form constants and the Beta identity") {
  const double c_minus = constant_C_minus();
  const double c_plus = constant_C_plus();
  CHECK(rel(c_minus, kCMinus) <= 1e-12);
  CHECK(rel(c_plus, kCPlus) <= 1e-12);
  CHECK(rel(c_minus / disq::beta(0.5, 1.0 / 6), std::cbrt(2.0)) <= 1e-14);
  CHECK(rel(c_plus / disq::beta(1.0 / 3, 1.0 / 3), 3.0) <= 1e-14);
  CHECK(rel(c_plus / c_minus, std::sqrt(3.0)) <= 1e-13);

  const double residual = std::abs(std::sqrt(3.0) * disq::beta(1.0 / 3, 1.0 / 3) -
                                   std::cbrt(2.0) * disq::beta(0.5, 1.0 / 6));
  CHECK(residual / c_minus <= 1e-12);
}

TEST_CASE("tanh-sinh handles plain and endpoint-singular integrands") {
  auto [one, e1] = tanh_sinh([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(one - 1.0) <= 1e-12);

  auto [invsqrt, e2] =
      tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(invsqrt - 2.0) <= 1e-9);

  // |x|^(-2/3): the cubic simple-root singularity exponent.
  auto [cuberoot, e3] =
      tanh_sinh([](double x) { return std::pow(x, -2.0 / 3.0); }, 0.0, 1.0,
                1e-10);
  CHECK(std::abs(cuberoot - 3.0) <= 1e-9);

  // Error estimates are the difference of the last two levels: sane sizes.
  CHECK(e1 <= 1e-12);
  CHECK(e2 <= 1e-9);
  CHECK(e3 <= 1e-9);
}

TEST_CASE("tanh-sinh rejects non-finite interior samples") {
  CHECK_THROWS_AS(tanh_sinh([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0,
                            1e-10),
                  QuadratureError);
}
