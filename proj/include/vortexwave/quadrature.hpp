#ifndef VORTEXWAVE_QUADRATURE_HPP
#define VORTEXWAVE_QUADRATURE_HPP

#include <functional>

#include "vortexwave/errors.hpp"

namespace vortexwave::quad {

struct QuadratureSpec {
  double abs_tol = 1e-11;
  int max_subdivisions = 2000;
  int max_periods = 400;      // oscillatory partition cap
  int acceleration_depth = 10;  // extrapolation table depth

  void validate() const;  // throws std::domain_error on a bad field
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

enum class Trig { sin, cos };

// Adaptive Gauss(7)/Kronrod(15) bisection over [a, b], worst panel first.
// Throws accuracy_error (carrying the best estimate) if max_subdivisions
// panels cannot meet abs_tol. Nodes are strictly interior, so integrands
// with removable endpoint singularities are fine.
IntegralResult integrate_finite(const std::function<double(double)>& fn,
                                double a, double b,
                                const QuadratureSpec& spec = {});

// int_a^inf envelope(s) * trig(omega s + phase) ds for an eventually
// monotone, algebraically decaying envelope. Partitions at the zeros of
// the trigonometric factor and accelerates the alternating panel series
// by iterated averaging (Euler transform).
IntegralResult integrate_oscillatory_tail(
    const std::function<double(double)>& envelope, double omega, double phase,
    Trig kind, double a, const QuadratureSpec& spec = {});

namespace detail {

// Core adaptive engine; min_panels forces initial refinement so that a
// deceptively symmetric first estimate cannot converge prematurely.
IntegralResult adaptive_gk(const std::function<double(double)>& fn, double a,
                           double b, double abs_tol, int max_subdivisions,
                           int min_panels);

}  // namespace detail

}  // namespace vortexwave::quad

#endif  // VORTEXWAVE_QUADRATURE_HPP
