#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "vortexwave/specfun.hpp"

using namespace vortexwave::specfun;
using Cx = Complex;

constexpr double kPi = std::numbers::pi;

// Frozen oracle values. Recomputed by the series oracles in the checks
// below before being asserted against the implementation.
constexpr double kSi1 = 0.94608307036718301;
constexpr double kShi1 = 1.0572508753757285;
constexpr double kSi100 = 1.5622254668890563;
constexpr double kCi1 = 0.33740392290096813;
constexpr double kChi1 = 0.83786694098020824;
constexpr double kSiSmall1 = -0.62471325642771360;
constexpr double kEi1 = 1.8951178163559368;
constexpr double kEi001 = -4.0179294654266694;
constexpr double kEiZero = 0.37250741078136663;
constexpr double kF1 = 0.62144962423581336;
constexpr double kG1 = 0.34337796155642703;

TEST_CASE("series oracles reproduce the frozen literals") {
  CHECK(oracle::si(Cx(1, 0)).real() == doctest::Approx(kSi1).epsilon(1e-15));
  CHECK(oracle::ci(Cx(1, 0)).real() == doctest::Approx(kCi1).epsilon(1e-15));
  CHECK(oracle::shi(1.0) == doctest::Approx(kShi1).epsilon(1e-15));
  CHECK(oracle::chi(1.0) == doctest::Approx(kChi1).epsilon(1e-15));
  CHECK(oracle::ei_series(1.0) == doctest::Approx(kEi1).epsilon(1e-15));
  CHECK(oracle::ei_series(0.01) == doctest::Approx(kEi001).epsilon(1e-15));
  CHECK(oracle::ei_zero() == doctest::Approx(kEiZero).epsilon(1e-12));
  CHECK(oracle::aux_f(Cx(1, 0)).real() == doctest::Approx(kF1).epsilon(1e-14));
  CHECK(oracle::aux_g(Cx(1, 0)).real() == doctest::Approx(kG1).epsilon(1e-14));
}

TEST_CASE("sine integral") {
  CHECK(sine_integral(Cx(0, 0)) == Cx(0, 0));
  CHECK(std::abs(sine_integral(Cx(1, 0)) - Cx(kSi1, 0)) < 1e-14);
  CHECK(std::abs(sine_integral(Cx(0, 1)) - Cx(0, kShi1)) < 1e-14);
  CHECK(std::abs(sine_integral(Cx(100, 0)) - Cx(kSi100, 0)) < 1e-13);

  SUBCASE("matches the series oracle inside the series disk") {
    for (double x : {0.25, 2.0, 7.5, 11.0}) {
      const Cx z(x, 0.4 * x);
      CHECK(std::abs(sine_integral(z) - oracle::si(z)) <=
            1e-13 * std::max(1.0, std::abs(oracle::si(z))));
    }
  }

  SUBCASE("oddness on a random grid") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> radius(0.05, 30.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 200; ++i) {
      const double r = radius(rng), th = angle(rng);
      const Cx z(r * std::cos(th), r * std::sin(th));
      const Cx lhs = sine_integral(-z), rhs = -sine_integral(z);
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    }
  }

  SUBCASE("range error once the trig rebuild overflows") {
    CHECK_THROWS_AS(sine_integral(Cx(0, 800)), std::range_error);
  }
}

TEST_CASE("cosine integral") {
  CHECK(std::abs(cosine_integral(Cx(1, 0)) - Cx(kCi1, 0)) < 1e-14);
  CHECK(std::abs(cosine_integral(Cx(0, 1)) - Cx(kChi1, kPi / 2)) < 1e-14);

  SUBCASE("Schwarz reflection off the cut") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> radius(0.05, 30.0);
    std::uniform_real_distribution<double> angle(-3.1, 3.1);
    for (int i = 0; i < 200; ++i) {
      const double r = radius(rng), th = angle(rng);
      const Cx z(r * std::cos(th), r * std::sin(th));
      const Cx lhs = cosine_integral(std::conj(z));
      const Cx rhs = std::conj(cosine_integral(z));
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    }
  }

  SUBCASE("domain errors on the closed negative axis") {
    CHECK_THROWS_AS(cosine_integral(Cx(0, 0)), std::domain_error);
    CHECK_THROWS_AS(cosine_integral(Cx(-2.5, 0)), std::domain_error);
  }

  SUBCASE("left half plane via the reflection formula") {
    // Frozen from the 40-digit oracle.
    const Cx ref(-1.9595423880945496, 0.11989822255569752);
    CHECK(std::abs(sine_integral(Cx(-9, 2)) - ref) < 1e-13);
    const Cx ref_ci(3.5395978130077274, 0.80500381698320876);
    CHECK(std::abs(cosine_integral(Cx(20, 5)) - ref_ci) < 3e-13);
    const Cx ref_si(0.76558242658202633, 3.5393536163848619);
    CHECK(std::abs(sine_integral(Cx(20, 5)) - ref_si) < 3e-13);
  }
}

TEST_CASE("shifted sine integral") {
  CHECK(sine_integral_small(Cx(0, 0)) == Cx(-kPi / 2, 0));
  CHECK(std::abs(sine_integral_small(Cx(1, 0)) - Cx(kSiSmall1, 0)) < 1e-14);
  // |si(x)| <= ~1/x for large real x
  CHECK(std::abs(sine_integral_small(Cx(1e4, 0))) <= 1.01e-4);

  SUBCASE("consistency with Si at machine precision") {
    for (double r : {0.1, 1.0, 5.0, 20.0, 45.0}) {
      const Cx z(r * 0.8, r * 0.6);
      const Cx si_val = sine_integral(z);
      const Cx d = sine_integral_small(z) + Cx(kPi / 2, 0) - si_val;
      CHECK(std::abs(d) <= 4e-16 * std::max(1.0, std::abs(si_val)));
    }
  }
}

TEST_CASE("exponential integral") {
  CHECK(exp_integral_ei(1.0) == doctest::Approx(kEi1).epsilon(1e-14));
  CHECK(exp_integral_ei(0.01) == doctest::Approx(kEi001).epsilon(1e-14));
  CHECK(std::abs(exp_integral_ei(kEiZero)) < 1e-12);

  CHECK_THROWS_AS(exp_integral_ei(0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_ei(-3.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_ei(710.5), std::range_error);

  SUBCASE("series and asymptotic branches agree at the seam") {
    for (double x : {39.5, 40.0, 40.5, 44.0}) {
      const double rel = std::abs(exp_integral_ei(x) - oracle::ei_asymptotic(x)) /
                         oracle::ei_asymptotic(x);
      CHECK(rel < 1e-13);
    }
  }

  SUBCASE("scaled variant never overflows") {
    CHECK(exp_integral_ei_scaled(1.0) ==
          doctest::Approx(std::exp(-1.0) * kEi1).epsilon(1e-14));
    const double v = exp_integral_ei_scaled(5000.0);
    CHECK(v > 0.0);
    CHECK(v == doctest::Approx(1.0 / 5000.0 * (1 + 1.0 / 5000)).epsilon(1e-6));
  }
}

TEST_CASE("auxiliary functions") {
  const AuxPair a1 = aux_fg(Cx(1, 0));
  CHECK(a1.f.real() == doctest::Approx(kF1).epsilon(1e-13));
  CHECK(a1.g.real() == doctest::Approx(kG1).epsilon(1e-13));
  CHECK(a1.f.imag() == 0.0);
  CHECK(a1.g.imag() == 0.0);

  SUBCASE("f tends to pi/2 at the origin") {
    CHECK(std::abs(aux_fg(Cx(1e-6, 0)).f.real() - kPi / 2) < 1e-4);
  }

  SUBCASE("leading asymptotic sizes at z = 10") {
    const AuxPair a = aux_fg(Cx(10, 0));
    CHECK(a.f.real() > 0.09);
    CHECK(a.f.real() < 0.1);
    CHECK(a.g.real() > 0.008);
    CHECK(a.g.real() < 0.011);
  }

  SUBCASE("real, positive and bounded on the positive axis") {
    for (double x = 1.0; x <= 50.0; x += 0.7) {
      const AuxPair a = aux_fg(Cx(x, 0));
      CHECK(std::abs(a.f.imag()) <= 1e-14);
      CHECK(std::abs(a.g.imag()) <= 1e-14);
      CHECK(a.f.real() > 0.0);
      CHECK(a.g.real() > 0.0);
      CHECK(a.f.real() <= 1.0 / x);
      CHECK(a.g.real() <= 1.0 / (x * x));
    }
  }

  SUBCASE("identity rebuild against Si and Ci") {
    for (double x = 0.5; x <= 40.0; x += 0.61) {
      const AuxPair a = aux_fg(Cx(x, 0));
      const double ci_built =
          a.f.real() * std::sin(x) - a.g.real() * std::cos(x);
      const double msi_built =
          a.f.real() * std::cos(x) + a.g.real() * std::sin(x);
      CHECK(std::abs(ci_built - cosine_integral(Cx(x, 0)).real()) < 1e-9);
      CHECK(std::abs(msi_built + sine_integral_small(Cx(x, 0)).real()) < 1e-9);
    }
  }

  SUBCASE("frozen complex values across all quadrants") {
    struct Case { Cx z, f, g; };
    const Case cases[] = {
        {{2, 3},
         {0.17951958760762445, -0.20685788979626418},
         {-0.0048063475972494468, -0.071069545227380906}},
        {{-4, 2},
         {-0.47146006121778226, 0.23708184791315841},
         {0.35152255718461381, 0.30842142331567943}},
        {{0, 0.5},
         {0.95273613236508997, -0.59920446551750037},
         {0.3237061669662301, -0.95273613236508997}},
        {{30, 40},
         {0.012014969264547642, -0.015994291249674283},
         {-0.00011118480929485554, -0.00038451091906328077}},
        {{0, 14},
         {1.3061622575923498e-6, -0.07221238483776632},
         {-0.0052798666543266912, -1.3061622575923498e-6}},
    };
    for (const auto& c : cases) {
      const AuxPair a = aux_fg(c.z);
      CHECK(std::abs(a.f - c.f) <= 1e-12 * std::max(1.0, std::abs(c.f)));
      CHECK(std::abs(a.g - c.g) <= 1e-12 * std::max(1.0, std::abs(c.g)));
      // conjugate symmetry
      const AuxPair b = aux_fg(std::conj(c.z));
      CHECK(std::abs(b.f - std::conj(c.f)) <=
            1e-12 * std::max(1.0, std::abs(c.f)));
    }
  }

  SUBCASE("domain error on the branch cut") {
    CHECK_THROWS_AS(aux_fg(Cx(0, 0)), std::domain_error);
    CHECK_THROWS_AS(aux_fg(Cx(-1, 0)), std::domain_error);
  }

  SUBCASE("still finite where Si and Ci overflow") {
    const AuxPair a = aux_fg(Cx(0, 800));
    CHECK(std::isfinite(a.f.real()));
    CHECK(std::abs(a.f) < 1.0);
  }
}

TEST_CASE("branch seam consistency at the switch radius") {
  // Evaluations at |z| = 12 +- 1% computed by both branches must agree.
  for (double r : {11.88, 12.12}) {
    for (double th : {0.05, 0.6, 1.3, 2.2, 2.9, -0.8, -2.0}) {
      const Cx z(r * std::cos(th), r * std::sin(th));
      const Cx series = vortexwave::specfun::detail::sine_integral_series(z);
      Cx via_aux;
      if (z.real() >= 0.0)
        via_aux = vortexwave::specfun::detail::sine_integral_from_aux(z);
      else
        via_aux = -vortexwave::specfun::detail::sine_integral_from_aux(-z);
      CHECK(std::abs(series - via_aux) <=
            1e-10 * std::max(1.0, std::abs(series)));
    }
  }
  // Frozen spot checks right at the seam.
  CHECK(std::abs(sine_integral(Cx(12.12, 0)).real() - 1.5001472958152305) <
        1e-13);
  CHECK(std::abs(cosine_integral(Cx(12.12, 0)).real() + 0.041084037807976033) <
        1e-13);
}
