#include "vortexwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <vector>

namespace vortexwave::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod extension of 7-point Gauss-Legendre (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEval {
  double value;
  double error;
};

PanelEval gk15(const std::function<double(double)>& fn, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = fn(c);
  double res_g = kWg[3] * fc;
  double res_k = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = fn(c - dx);
    const double f2 = fn(c + dx);
    res_k += kWgk[j] * (f1 + f2);
    if (j & 1) res_g += kWg[(j - 1) / 2] * (f1 + f2);
  }
  const double value = res_k * h;
  return {value, std::abs((res_k - res_g) * h)};
}

struct Panel {
  double a, b, value, error;
};

// Worst error first; ties broken by position so refinement order (and
// therefore the result, bit for bit) is deterministic.
struct PanelOrder {
  bool operator()(const Panel& p, const Panel& q) const {
    if (p.error != q.error) return p.error > q.error;
    if (p.a != q.a) return p.a < q.a;
    return p.b < q.b;
  }
};

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0))
    throw std::domain_error("QuadratureSpec: abs_tol must be positive");
  if (max_subdivisions < 10)
    throw std::domain_error("QuadratureSpec: max_subdivisions < 10");
  if (max_periods < 8)
    throw std::domain_error("QuadratureSpec: max_periods < 8");
  if (acceleration_depth < 4)
    throw std::domain_error("QuadratureSpec: acceleration_depth < 4");
}

namespace detail {

IntegralResult adaptive_gk(const std::function<double(double)>& fn, double a,
                           double b, double abs_tol, int max_subdivisions,
                           int min_panels) {
  long evaluations = 0;
  double total_err = 0.0, total_abs = 0.0;
  std::multiset<Panel, PanelOrder> panels;
  auto push = [&](double lo, double hi) {
    const PanelEval e = gk15(fn, lo, hi);
    evaluations += 15;
    panels.insert({lo, hi, e.value, e.error});
    total_err += e.error;
    total_abs += std::abs(e.value);
  };
  push(a, b);

  int subdivisions = 1;
  for (;;) {
    // Roundoff floor: once the summed panel errors reach the noise of the
    // panel values themselves, further splitting cannot help.
    const double floor_tol =
        std::max(abs_tol, 8.0 * std::numeric_limits<double>::epsilon() * total_abs);
    if (static_cast<int>(panels.size()) >= min_panels &&
        total_err <= floor_tol)
      break;
    if (subdivisions >= max_subdivisions) {
      double best = 0.0;
      std::vector<Panel> ordered(panels.begin(), panels.end());
      std::sort(ordered.begin(), ordered.end(),
                [](const Panel& p, const Panel& q) { return p.a < q.a; });
      for (const Panel& p : ordered) best += p.value;
      throw accuracy_error("integrate_finite: subdivision limit reached", best,
                           total_err);
    }
    const Panel worst = *panels.begin();
    panels.erase(panels.begin());
    total_err -= worst.error;
    total_abs -= std::abs(worst.value);
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Panel is at floating-point resolution; keep it with no error claim.
      Panel p = worst;
      p.error = 0.0;
      panels.insert(p);
      total_abs += std::abs(p.value);
      continue;
    }
    push(worst.a, mid);
    push(mid, worst.b);
    ++subdivisions;
  }

  // Deterministic left-to-right compensated sum.
  std::vector<Panel> ordered(panels.begin(), panels.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const Panel& p, const Panel& q) { return p.a < q.a; });
  double sum = 0.0, carry = 0.0, err = 0.0;
  for (const Panel& p : ordered) {
    const double y = p.value - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    err += p.error;
  }
  return {sum, err, evaluations};
}

}  // namespace detail

IntegralResult integrate_finite(const std::function<double(double)>& fn,
                                double a, double b,
                                const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < b)) throw std::domain_error("integrate_finite: requires a < b");
  return detail::adaptive_gk(fn, a, b, spec.abs_tol, spec.max_subdivisions, 32);
}

IntegralResult integrate_oscillatory_tail(
    const std::function<double(double)>& envelope, double omega, double phase,
    Trig kind, double a, const QuadratureSpec& spec) {
  spec.validate();
  if (!(omega > 0.0))
    throw std::domain_error("integrate_oscillatory_tail: omega must be > 0");
  if (!std::isfinite(a) || !std::isfinite(phase))
    throw std::domain_error("integrate_oscillatory_tail: bad bounds");

  auto integrand = [&](double s) {
    const double ph = omega * s + phase;
    return envelope(s) * (kind == Trig::sin ? std::sin(ph) : std::cos(ph));
  };
  const double shift = kind == Trig::cos ? 0.5 : 0.0;
  auto zero_at = [&](double m) { return ((m + shift) * kPi - phase) / omega; };

  // First trig zero strictly beyond a.
  double m = std::floor((omega * a + phase) / kPi - shift) + 1.0;
  while (zero_at(m) <= a) m += 1.0;

  std::vector<double> psums;
  psums.reserve(spec.max_periods + 1);
  double panel_err = 0.0;
  long evaluations = 0;
  double running = 0.0;

  // Accelerated limit of the partial-sum sequence: average the last
  // (depth+1) entries pairwise depth times.
  auto accelerated = [&]() {
    const int depth =
        std::min<int>(spec.acceleration_depth, static_cast<int>(psums.size()) - 1);
    std::vector<double> buf(psums.end() - (depth + 1), psums.end());
    for (int lev = 0; lev < depth; ++lev)
      for (std::size_t i = 0; i + 1 < buf.size() - lev; ++i)
        buf[i] = 0.5 * (buf[i] + buf[i + 1]);
    return buf[0];
  };

  double est = 0.0, prev_est = 0.0, delta = 0.0, prev_delta = 0.0;
  bool have_est = false;
  const double panel_tol = spec.abs_tol / 16.0;

  for (int j = 0; j < spec.max_periods; ++j) {
    const double lo = j == 0 ? a : zero_at(m + j - 1);
    const double hi = zero_at(m + j);
    if (hi > lo) {
      const IntegralResult r = detail::adaptive_gk(
          integrand, lo, hi, panel_tol, spec.max_subdivisions, 2);
      running += r.value;
      panel_err += r.error_estimate;
      evaluations += r.evaluations;
    }
    psums.push_back(running);

    if (static_cast<int>(psums.size()) >= spec.acceleration_depth + 2) {
      prev_est = est;
      est = accelerated();
      prev_delta = delta;
      delta = std::abs(est - prev_est);
      if (have_est && delta <= 0.25 * spec.abs_tol &&
          prev_delta <= 0.5 * spec.abs_tol) {
        return {est, delta + panel_err, evaluations};
      }
      have_est = true;
    }
  }
  const double best = psums.empty() ? 0.0 : (have_est ? est : psums.back());
  throw accuracy_error("integrate_oscillatory_tail: period limit reached", best,
                       std::max(delta, panel_err));
}

}  // namespace vortexwave::quad
