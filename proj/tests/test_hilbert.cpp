#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vortexwave/hilbert.hpp"

using namespace vortexwave::hilbert;
constexpr double kPi = std::numbers::pi;

TEST_CASE("catalog closed forms") {
  CHECK(catalog_transform(Catalog::lorentzian, 1.0) == doctest::Approx(-0.5));
  CHECK(catalog_transform(Catalog::lorentzian, 0.0) == 0.0);
  CHECK(catalog_transform(Catalog::cosine, kPi / 2) ==
        doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(catalog_transform(Catalog::hf_prime_paper, 0.0) ==
        doctest::Approx(-1.0 / kPi).epsilon(1e-15));
  CHECK(catalog_transform(Catalog::sine, 0.3) ==
        doctest::Approx(std::cos(0.3)).epsilon(1e-15));

  // value/transform pairing used throughout the solution module
  CHECK(catalog_value(Catalog::f_paper, 0.0) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(catalog_value(Catalog::hf_paper, 2.0) ==
        doctest::Approx(catalog_transform(Catalog::f_paper, 2.0)));
  CHECK(catalog_value(Catalog::hf_prime_paper, 0.0) == 0.0);  // f'(0)
  // H(Hf) = -f
  CHECK(catalog_transform(Catalog::hf_paper, 0.7) ==
        doctest::Approx(-catalog_value(Catalog::f_paper, 0.7)));
}

TEST_CASE("numerical transform of the Lorentzian") {
  auto lorentz = [](double y) { return 1.0 / (1.0 + y * y); };
  const double h1 = hilbert_numeric(lorentz, 1.0, 1e4, std::nullopt);
  CHECK(std::abs(h1 - (-0.5)) < 1e-6);
  const double h0 = hilbert_numeric(lorentz, 0.0, 1e4, std::nullopt);
  CHECK(std::abs(h0) < 1e-9);

  SUBCASE("antisymmetry of the transform of an even function") {
    for (double x : {0.5, 1.0, 2.0}) {
      const double plus = hilbert_numeric(lorentz, x, 1e4, std::nullopt);
      const double minus = hilbert_numeric(lorentz, -x, 1e4, std::nullopt);
      CHECK(std::abs(plus + minus) <= 2e-6);
    }
  }

  SUBCASE("truncation convergence") {
    const double t1 = hilbert_numeric(lorentz, 1.0, 1e3, std::nullopt);
    const double t2 = hilbert_numeric(lorentz, 1.0, 2e3, std::nullopt);
    CHECK(std::abs(t2 - t1) <= 2e-3 / 1e3);
  }

  SUBCASE("domain error when the window is too small") {
    CHECK_THROWS_AS(hilbert_numeric(lorentz, 2.0, 2.5, std::nullopt),
                    std::domain_error);
  }
}

TEST_CASE("involution H^2 = -identity") {
  auto hlorentz = [](double y) {
    return catalog_transform(Catalog::lorentzian, y);
  };
  for (double x : {-2.0, 0.0, 1.0, 3.0}) {
    const double h2 = hilbert_numeric(hlorentz, x, 1e4, std::nullopt);
    CHECK(std::abs(h2 - (-1.0 / (x * x + 1.0))) < 1e-4);
  }
}

TEST_CASE("cosine with analytic tail correction on both sides") {
  const double trunc = 200.0 * kPi;
  TailModel tail;
  tail.amplitude = 1.0;
  tail.omega = 1.0;
  tail.phase = 0.0;
  tail.start = trunc;
  tail.symmetric = true;
  const double h =
      hilbert_numeric([](double y) { return std::cos(y); }, 0.7, trunc, tail);
  CHECK(std::abs(h - (-std::sin(0.7))) < 1e-4);
}

TEST_CASE("convolution identity residual") {
  CHECK(convolution_identity_residual(0.0) <= 1e-6);
  const double r2 = convolution_identity_residual(2.0);
  CHECK(r2 <= 1e-6);
  const double rm2 = convolution_identity_residual(-2.0);
  CHECK(std::abs(r2 - rm2) <= 1e-9);
}
