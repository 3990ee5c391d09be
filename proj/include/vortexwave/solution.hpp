#ifndef VORTEXWAVE_SOLUTION_HPP
#define VORTEXWAVE_SOLUTION_HPP

#include <span>
#include <string>
#include <vector>

#include "vortexwave/quadrature.hpp"

// Evaluators for the solution u(x) of
//
//   u(x) + F^2 H u'(x) = 1/(pi (x^2+1)),    u(-inf) = 0,
//
// by three independent routes, together with the downstream asymptote
// (2/F^2) e^{-1/F^2} sin(x/F^2) and the closed origin values.

namespace vortexwave::solution {

// Validated Froude number with its derived wavenumber k = 1/F^2 and decay
// factor e^{-1/F^2}.
struct FroudeContext {
  double froude;
  double wavenumber;
  double decay;

  explicit FroudeContext(double f);
};

enum class Method { closed_form, quadrature, vp_oracle, asymptotic };

std::string method_name(Method m);
Method parse_method(const std::string& name);  // throws std::domain_error

// Closed form assembled from the auxiliary functions at -(x -+ i)/F^2.
// Supported for F >= 0.2 (below that the wave amplitude underflows any
// meaningful scale); throws std::range_error outside.
double u_closed_form(double x, const FroudeContext& ctx);

// Direct evaluation of
//   u(x) = (1/(pi F^2)) int_0^inf [ sin(s/F^2)/((x-s)^2+1)
//                                 + cos(s/F^2)(x-s)/((x-s)^2+1) ] ds
// splitting at max(0,x)+10, oscillatory-tail engine beyond. Any F > 0.
double u_quadrature(double x, const FroudeContext& ctx,
                    const quad::QuadratureSpec& spec = {});

// Variation-of-parameters oracle
//   u(x) = (1/F^2) int_{-inf}^x sin((x-t)/F^2) [f(t) - F^2 Hf'(t)] dt
// with f and Hf' exact from the Hilbert catalog.
double u_vp_oracle(double x, const FroudeContext& ctx,
                   const quad::QuadratureSpec& spec = {});

// Downstream wave (2/F^2) e^{-1/F^2} sin(x/F^2).
double u_asymptotic(double x, const FroudeContext& ctx);

struct OriginValues {
  double u0;   // e^{-1/F^2} Ei(1/F^2) / (pi F^2)
  double du0;  // e^{-1/F^2} / F^4
};

// Throws std::range_error when Ei(1/F^2) would overflow (F < ~0.038).
OriginValues u_origin(const FroudeContext& ctx);

struct Sample {
  double x;
  double u;
  double s;  // surface elevation -epsilon F^2 u
};

struct ProfileSeries {
  double froude = 0.0;
  double epsilon = 1.0;
  Method method = Method::closed_form;
  std::vector<Sample> samples;
};

// Samples (x, u(x), S(x) = -epsilon F^2 u(x)) with the named evaluator.
// xs must be finite and strictly increasing.
ProfileSeries surface_profile(std::span<const double> xs,
                              const FroudeContext& ctx, double epsilon,
                              Method method);

}  // namespace vortexwave::solution

#endif  // VORTEXWAVE_SOLUTION_HPP
