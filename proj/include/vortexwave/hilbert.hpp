#ifndef VORTEXWAVE_HILBERT_HPP
#define VORTEXWAVE_HILBERT_HPP

#include <functional>
#include <optional>

#include "vortexwave/quadrature.hpp"

// Hilbert-transform services with the convention
//
//   Hg(x) = (1/pi) PV int_{-inf}^{inf} g(y)/(y - x) dy,
//
// under which H(1/(x^2+1)) = -x/(x^2+1), H cos = -sin, H sin = cos and
// H(Hg) = -g.

namespace vortexwave::hilbert {

// Functions whose transforms are known in closed form.
enum class Catalog {
  lorentzian,      // 1/(x^2+1)
  f_paper,         // 1/(pi (x^2+1))
  hf_paper,        // -x/(pi (x^2+1)) paired with its transform -f_paper
  hf_prime_paper,  // f' paired with Hf' = (x^2-1)/(pi (x^2+1)^2)
  cosine,
  sine,
};

double catalog_value(Catalog tag, double x);
double catalog_transform(Catalog tag, double x);

// Oscillatory model of a sampled function beyond the truncation window:
// amplitude * cos(omega t + phase) for t >= start; zero for t <= -start
// unless symmetric is set, in which case the same formula holds there too.
struct TailModel {
  double amplitude = 0.0;
  double omega = 1.0;
  double phase = 0.0;
  double start = 0.0;
  bool symmetric = false;
};

// Numerical principal-value transform: singularity-subtracted integral over
// [-trunc, trunc] plus the analytic tail correction (the tail integrals
// reduce to the auxiliary functions f, g). Requires trunc > |x| + 1 and,
// when a tail is given, start > |x|.
double hilbert_numeric(const std::function<double(double)>& g, double x,
                       double trunc, const std::optional<TailModel>& tail,
                       const quad::QuadratureSpec& spec = {});

// | int p(x-y) Hq(y) dy - int Hp(x-y) q(y) dy | with p = q = lorentzian,
// both transforms taken from the catalog.
double convolution_identity_residual(double x,
                                     const quad::QuadratureSpec& spec = {});

}  // namespace vortexwave::hilbert

#endif  // VORTEXWAVE_HILBERT_HPP
