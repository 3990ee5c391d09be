#include "vortexwave/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace vortexwave::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Componentwise Kahan accumulation; the trigonometric-integral series pass
// through terms much larger than their sum, so the compensation matters.
struct CompensatedSum {
  Complex sum{0.0, 0.0};
  Complex carry{0.0, 0.0};

  void add(Complex term) {
    const Complex y = term - carry;
    const Complex t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Power series e^w (-gamma - log w - sum (-w)^k/(k k!)). Well conditioned
// for Re w <= 0 (the result grows with the terms); loses ~e^{|w|+Re w} of
// precision otherwise, so the dispatcher only sends it small or left-half
// arguments.
Complex expe1_series(Complex w) {
  CompensatedSum s;
  Complex t{1.0, 0.0};
  const double aw = std::abs(w);
  for (int k = 1; k <= 600; ++k) {
    t *= w / static_cast<double>(k);
    const Complex term = t / static_cast<double>(k);
    s.add((k & 1) ? term : -term);
    if (std::abs(t) / k < 1e-18 * std::abs(s.sum) && k > aw) break;
  }
  const Complex e1 = -euler_gamma - std::log(w) + s.sum;
  return std::exp(w) * e1;
}

// Modified Lentz evaluation of the even-contracted Stieltjes fraction
//   e^w E1(w) = 1/(w+1- 1/(w+3- 4/(w+5- 9/(w+7- ...))))
// (Numerical Recipes 6.3.5 form, complex argument).
Complex expe1_cf(Complex w, bool* ok) {
  constexpr double kTiny = 1e-290;
  Complex b = w + 1.0;
  Complex c{1.0 / kTiny, 0.0};
  Complex d = 1.0 / b;
  Complex h = d;
  *ok = false;
  for (int i = 1; i <= 20000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < kTiny) d = Complex(kTiny, 0.0);
    c = b + a / c;
    if (std::abs(c) < kTiny) c = Complex(kTiny, 0.0);
    d = 1.0 / d;
    const Complex delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) {
      *ok = true;
      break;
    }
  }
  return h;
}

// Poincare expansion e^w E1(w) ~ (1/w) sum (-1)^k k!/w^k, truncated at the
// smallest term. Below 5e-19 relative for |w| > 45, any argument; the cut
// discontinuity is O(e^-|w|) there and ignorable.
Complex expe1_asymptotic(Complex w) {
  Complex s{1.0, 0.0};
  Complex t{1.0, 0.0};
  for (int k = 1; k <= 100; ++k) {
    const Complex tn = t * (-static_cast<double>(k)) / w;
    if (std::abs(tn) >= std::abs(t)) break;
    t = tn;
    s += t;
    if (std::abs(t) < 1e-18 * std::abs(s)) break;
  }
  return s / w;
}

// First-quadrant core of aux_fg (Re z >= 0, Im z >= 0, z != 0), via
//   g(z) + i f(z) = e^{-iz} E1(-iz),   g(z) - i f(z) = e^{iz} E1(iz).
// For z on the positive imaginary axis the second argument falls on the
// E1 cut; the limit from Re z > 0 is the side with Im w = +0.
AuxPair aux_fg_quadrant1(Complex z) {
  const Complex w1(z.imag(), -z.real());  // -iz
  const Complex v1 = detail::expe1(w1);
  Complex v2;
  if (z.imag() == 0.0) {
    v2 = std::conj(v1);  // exact symmetry keeps f, g real on the real axis
  } else {
    Complex w2(-z.imag(), z.real());  // iz; Im w2 = +0.0 when Re z = 0
    v2 = detail::expe1(w2);
  }
  const Complex f = (v1 - v2) / Complex(0.0, 2.0);
  const Complex g = 0.5 * (v1 + v2);
  return {f, g};
}

bool on_closed_negative_axis(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0;
}

}  // namespace

namespace detail {

Complex expe1(Complex w) {
  const double aw = std::abs(w);
  if (aw == 0.0) throw std::domain_error("expe1: argument is zero");
  if (aw > 45.0) return expe1_asymptotic(w);
  if (w.imag() == 0.0 && w.real() < 0.0) return expe1_series(w);
  if (std::abs(std::arg(w)) > 2.9) return expe1_series(w);
  if (aw >= 3.0) {
    bool ok = false;
    const Complex v = expe1_cf(w, &ok);
    if (ok) return v;
    return expe1_series(w);
  }
  return expe1_series(w);
}

Complex sine_integral_series(Complex z) {
  CompensatedSum s;
  Complex t = z;
  const double az = std::abs(z);
  for (int k = 0; k <= 200; ++k) {
    const int n = 2 * k + 1;
    s.add(t / static_cast<double>(n));
    t *= -(z * z) / static_cast<double>((n + 1) * (n + 2));
    if (std::abs(t) / (n + 2) < 1e-17 * std::abs(s.sum) && n > az) break;
  }
  return s.sum;
}

Complex cosine_integral_series(Complex z) {
  CompensatedSum s;
  Complex t{1.0, 0.0};
  const double az = std::abs(z);
  for (int k = 1; k <= 200; ++k) {
    const int n = 2 * k;
    t *= -(z * z) / static_cast<double>((n - 1) * n);
    s.add(t / static_cast<double>(n));
    if (std::abs(t) / n < 1e-17 * std::abs(s.sum) && n > az) break;
  }
  return euler_gamma + std::log(z) + s.sum;
}

Complex sine_integral_from_aux(Complex z) {
  const AuxPair a = aux_fg(z);
  return kPi / 2 - a.f * std::cos(z) - a.g * std::sin(z);
}

Complex cosine_integral_from_aux(Complex z) {
  const AuxPair a = aux_fg(z);
  return a.f * std::sin(z) - a.g * std::cos(z);
}

}  // namespace detail

AuxPair aux_fg(Complex z) {
  if (on_closed_negative_axis(z))
    throw std::domain_error("aux_fg: argument on the branch cut");
  if (z.imag() < 0.0) {
    const AuxPair a = aux_fg(std::conj(z));
    return {std::conj(a.f), std::conj(a.g)};
  }
  if (z.real() < 0.0) {
    // Reflection into the right half plane. With zeta = -z (Im zeta <= 0
    // here) and sigma = sgn Im zeta:
    //   f(-zeta) = -f(zeta) + pi e^{i sigma zeta}
    //   g(-zeta) =  g(zeta) + i sigma pi e^{i sigma zeta}
    // The exponential has modulus e^{-|Im zeta|}; nothing grows.
    const Complex zeta = -z;
    const AuxPair a = aux_fg(zeta);
    const double sigma = zeta.imag() > 0.0 ? 1.0 : -1.0;
    const Complex e = std::exp(Complex(0.0, sigma) * zeta);
    return {-a.f + kPi * e, a.g + Complex(0.0, sigma) * kPi * e};
  }
  return aux_fg_quadrant1(z);
}

Complex sine_integral(Complex z) {
  if (std::abs(z) <= 12.0) return detail::sine_integral_series(z);
  if (z.real() < 0.0) return -sine_integral(-z);
  if (std::abs(z.imag()) > 700.0)
    throw std::range_error("sine_integral: e^|Im z| overflows");
  return detail::sine_integral_from_aux(z);
}

Complex cosine_integral(Complex z) {
  if (z == Complex(0.0, 0.0) || on_closed_negative_axis(z))
    throw std::domain_error("cosine_integral: argument on the branch cut");
  if (std::abs(z) <= 12.0) return detail::cosine_integral_series(z);
  if (z.real() < 0.0) {
    // A&S 5.2.20: Ci(z e^{+-i pi}) = Ci(z) +- i pi.
    const double sigma = z.imag() > 0.0 ? 1.0 : -1.0;
    return cosine_integral(-z) + Complex(0.0, sigma * kPi);
  }
  if (std::abs(z.imag()) > 700.0)
    throw std::range_error("cosine_integral: e^|Im z| overflows");
  return detail::cosine_integral_from_aux(z);
}

Complex sine_integral_small(Complex z) { return sine_integral(z) - kPi / 2; }

double exp_integral_ei(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_ei: requires x > 0");
  if (x > 709.78) throw std::range_error("exp_integral_ei: e^x overflows");
  if (x <= 40.0) {
    // gamma + ln x + sum x^k/(k k!); every term positive, no cancellation.
    double s = 0.0;
    double t = 1.0;
    for (int k = 1; k <= 200; ++k) {
      t *= x / k;
      const double term = t / k;
      s += term;
      if (term < 1e-17 * s && k > x) break;
    }
    return euler_gamma + std::log(x) + s;
  }
  return std::exp(x) * exp_integral_ei_scaled(x);
}

double exp_integral_ei_scaled(double x) {
  if (!(x > 0.0))
    throw std::domain_error("exp_integral_ei_scaled: requires x > 0");
  if (x <= 40.0) return std::exp(-x) * exp_integral_ei(x);
  // e^{-x} Ei(x) ~ (1/x) sum k!/x^k, truncated at the smallest term;
  // below 1e-16 relative for x > 40.
  double s = 1.0;
  double t = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double tn = t * k / x;
    if (tn >= t) break;
    t = tn;
    s += t;
    if (t < 1e-17 * s) break;
  }
  return s / x;
}

}  // namespace vortexwave::specfun
