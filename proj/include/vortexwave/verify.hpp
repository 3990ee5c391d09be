#ifndef VORTEXWAVE_VERIFY_HPP
#define VORTEXWAVE_VERIFY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "vortexwave/solution.hpp"

// Numerical verification that the computed u satisfies the original
// integrodifferential equation, the derived ODE F^4 u'' + u = f - F^2 Hf',
// the upstream boundary condition and the downstream asymptote.

namespace vortexwave::verify {

struct VerificationReport {
  double ide_residual_max = 0.0;
  double ode_residual_max = 0.0;
  double boundary_value = 0.0;
  std::vector<double> asymptotic_ratios;  // R(160)/R(80), R(80)/R(40)
  std::map<std::string, double> tolerances;
  bool passed = false;
  std::string failure;  // name of the sub-check that raised an accuracy error
};

// max over xs of |u + F^2 (Hu')(x) - f(x)|, u' sampled by central
// differences of u_quadrature; Hu' by the numerical transform over
// [-trunc, trunc] with the asymptote-derived downstream tail model and a
// zero upstream tail. Requires trunc >= 200 and xs within [-trunc/4, trunc/4].
// tol_scale multiplies the internal quadrature tolerances (convergence
// checks tighten them by passing < 1).
double ide_residual(const solution::FroudeContext& ctx,
                    std::span<const double> xs, double trunc,
                    double tol_scale = 1.0);

// max over xs of |F^4 u'' + u - (f - F^2 Hf')| with u'' by central
// differences of u_quadrature at step 1e-3 F^2 and Hf' from the catalog.
double ode_residual(const solution::FroudeContext& ctx,
                    std::span<const double> xs);

// max over [x0, x0 + 2 pi F^2] of |u_quadrature - u_asymptotic|, sampled
// on a fixed 129-point grid.
double window_residual(const solution::FroudeContext& ctx, double x0);

// Aggregate report; requires 0.2 <= F <= 20.
VerificationReport full_report(const solution::FroudeContext& ctx);

// Flat key=value text block, one metric per line; deterministic.
std::string to_key_value(const VerificationReport& report);

}  // namespace vortexwave::verify

#endif  // VORTEXWAVE_VERIFY_HPP
