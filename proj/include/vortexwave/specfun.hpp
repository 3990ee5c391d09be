#ifndef VORTEXWAVE_SPECFUN_HPP
#define VORTEXWAVE_SPECFUN_HPP

#include <complex>

#include "vortexwave/errors.hpp"

// Trigonometric and exponential integrals for real and complex arguments.
//
// Conventions follow Abramowitz & Stegun chapter 5:
//
//   Si(z) = int_0^z sin t / t dt                      (entire)
//   Ci(z) = gamma + log z + int_0^z (cos t - 1)/t dt  (cut along (-inf, 0])
//   si(z) = Si(z) - pi/2
//   Ei(x) = -PV int_{-x}^inf e^{-t}/t dt,  x > 0
//
// and the auxiliary pair (A&S 5.2.6-7)
//
//   f(z) = Ci(z) sin z - si(z) cos z
//   g(z) = -si(z) sin z - Ci(z) cos z
//
// which for x > 0 equal the Fourier integrals int_0^inf sin t/(t+x) dt and
// int_0^inf cos t/(t+x) dt. f and g stay O(1/z) and O(1/z^2) throughout the
// cut plane where Si and Ci themselves grow like e^|Im z|; large-argument
// callers should consume aux_fg, never Si/Ci directly.

namespace vortexwave::specfun {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286061;

struct AuxPair {
  Complex f;
  Complex g;
};

// Si(z). Entire; throws std::range_error once the trigonometric rebuild
// would overflow (|Im z| > 700).
Complex sine_integral(Complex z);

// Ci(z), principal branch. Throws std::domain_error for z = 0 and on the
// closed negative real axis; std::range_error as for sine_integral.
Complex cosine_integral(Complex z);

// si(z) = Si(z) - pi/2.
Complex sine_integral_small(Complex z);

// Ei(x) for x > 0. Throws std::domain_error for x <= 0 and
// std::range_error when e^x overflows (x > ~709.78).
double exp_integral_ei(double x);

// e^{-x} Ei(x) for x > 0; safe for arbitrarily large x.
double exp_integral_ei_scaled(double x);

// Overflow-safe f(z), g(z) for |arg z| < pi, z != 0.
AuxPair aux_fg(Complex z);

namespace detail {

// e^w E1(w) on the plane cut along (-inf, 0]. The sign of a zero imaginary
// part selects the side of the cut. Building block for aux_fg.
Complex expe1(Complex w);

// Maclaurin branches, valid (and used) for |z| <= 12.
Complex sine_integral_series(Complex z);
Complex cosine_integral_series(Complex z);

// Large-argument rebuilds Si = pi/2 - f cos - g sin, Ci = f sin - g cos,
// Re z >= 0. Exposed so the branch seam can be tested from both sides.
Complex sine_integral_from_aux(Complex z);
Complex cosine_integral_from_aux(Complex z);

}  // namespace detail

}  // namespace vortexwave::specfun

#endif  // VORTEXWAVE_SPECFUN_HPP
