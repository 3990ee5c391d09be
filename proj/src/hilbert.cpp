#include "vortexwave/hilbert.hpp"

#include <cmath>
#include <numbers>

#include "vortexwave/specfun.hpp"

namespace vortexwave::hilbert {

namespace {

constexpr double kPi = std::numbers::pi;

// Downstream half: (1/pi) int_start^inf A cos(w t + ph)/(t - x) dt.
// Substituting t = start + s turns it into the two Fourier integrals
// int_0^inf trig(w s)/(s + a) ds with a = start - x, i.e. f(aw) and g(aw).
double tail_correction_downstream(const TailModel& tm, double x) {
  const double a = tm.start - x;
  const double psi = tm.omega * tm.start + tm.phase;
  const auto fg = specfun::aux_fg(specfun::Complex(a * tm.omega, 0.0));
  return tm.amplitude / kPi *
         (std::cos(psi) * fg.g.real() - std::sin(psi) * fg.f.real());
}

// Upstream half, t = -start - s.
double tail_correction_upstream(const TailModel& tm, double x) {
  const double a = tm.start + x;
  const double psi = tm.omega * tm.start - tm.phase;
  const auto fg = specfun::aux_fg(specfun::Complex(a * tm.omega, 0.0));
  return -tm.amplitude / kPi *
         (std::cos(psi) * fg.g.real() - std::sin(psi) * fg.f.real());
}

}  // namespace

double catalog_value(Catalog tag, double x) {
  switch (tag) {
    case Catalog::lorentzian:
      return 1.0 / (x * x + 1.0);
    case Catalog::f_paper:
      return 1.0 / (kPi * (x * x + 1.0));
    case Catalog::hf_paper:
      return -x / (kPi * (x * x + 1.0));
    case Catalog::hf_prime_paper: {
      const double d = x * x + 1.0;
      return -2.0 * x / (kPi * d * d);
    }
    case Catalog::cosine:
      return std::cos(x);
    case Catalog::sine:
      return std::sin(x);
  }
  throw std::domain_error("catalog_value: unknown tag");
}

double catalog_transform(Catalog tag, double x) {
  switch (tag) {
    case Catalog::lorentzian:
      return -x / (x * x + 1.0);
    case Catalog::f_paper:
      return -x / (kPi * (x * x + 1.0));
    case Catalog::hf_paper:  // H^2 = -identity
      return -1.0 / (kPi * (x * x + 1.0));
    case Catalog::hf_prime_paper: {
      const double d = x * x + 1.0;
      return (x * x - 1.0) / (kPi * d * d);
    }
    case Catalog::cosine:
      return -std::sin(x);
    case Catalog::sine:
      return std::cos(x);
  }
  throw std::domain_error("catalog_transform: unknown tag");
}

double hilbert_numeric(const std::function<double(double)>& g, double x,
                       double trunc, const std::optional<TailModel>& tail,
                       const quad::QuadratureSpec& spec) {
  spec.validate();
  if (!(trunc > std::abs(x) + 1.0))
    throw std::domain_error("hilbert_numeric: trunc must exceed |x| + 1");

  const double gx = g(x);
  auto quotient = [&](double y) { return (g(y) - gx) / (y - x); };

  quad::QuadratureSpec half = spec;
  half.abs_tol = 0.5 * spec.abs_tol;
  const quad::IntegralResult left =
      quad::integrate_finite(quotient, -trunc, x, half);
  const quad::IntegralResult right =
      quad::integrate_finite(quotient, x, trunc, half);
  // PV int 1/(y-x) over [-trunc, trunc] = log((trunc-x)/(trunc+x)).
  double result = (left.value + right.value +
                   gx * std::log((trunc - x) / (trunc + x))) /
                  kPi;

  if (tail) {
    const TailModel& tm = *tail;
    if (!(tm.omega > 0.0) || !(tm.start > 0.0))
      throw std::domain_error("hilbert_numeric: bad tail model");
    if (!(tm.start > std::abs(x)))
      throw std::domain_error("hilbert_numeric: tail start inside window");
    result += tail_correction_downstream(tm, x);
    if (tm.symmetric) result += tail_correction_upstream(tm, x);
  }
  return result;
}

double convolution_identity_residual(double x,
                                     const quad::QuadratureSpec& spec) {
  spec.validate();
  const double trunc = 1e4;
  auto p = [](double t) { return catalog_value(Catalog::lorentzian, t); };
  auto hp = [](double t) { return catalog_transform(Catalog::lorentzian, t); };

  const double lhs =
      quad::integrate_finite([&](double y) { return p(x - y) * hp(y); },
                             -trunc, trunc, spec)
          .value;
  const double rhs =
      quad::integrate_finite([&](double y) { return hp(x - y) * p(y); },
                             -trunc, trunc, spec)
          .value;
  return std::abs(lhs - rhs);
}

}  // namespace vortexwave::hilbert
