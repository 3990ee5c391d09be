// Command-line front end: evaluate u(x), emit surface-profile CSV/SVG,
// run the verification report, run the acceptance self-test.
//
// Exit codes: 0 success, 1 numerical/tolerance failure, 2 usage or domain
// error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vortexwave/acceptance.hpp"
#include "vortexwave/io.hpp"
#include "vortexwave/solution.hpp"
#include "vortexwave/verify.hpp"

namespace {

using vortexwave::solution::FroudeContext;
using vortexwave::solution::Method;

Method default_method(double froude) {
  return froude >= 0.2 ? Method::closed_form : Method::quadrature;
}

Method resolve_method(const std::string& name, double froude) {
  if (name.empty()) return default_method(froude);
  return vortexwave::solution::parse_method(name);
}

int cmd_eval(double froude, double x, const std::string& method) {
  const FroudeContext ctx(froude);
  const Method m = resolve_method(method, froude);
  double u = 0.0;
  switch (m) {
    case Method::closed_form: u = vortexwave::solution::u_closed_form(x, ctx); break;
    case Method::quadrature: u = vortexwave::solution::u_quadrature(x, ctx); break;
    case Method::vp_oracle: u = vortexwave::solution::u_vp_oracle(x, ctx); break;
    case Method::asymptotic: u = vortexwave::solution::u_asymptotic(x, ctx); break;
  }
  std::printf("%.15g\n", u);
  return 0;
}

int cmd_profile(double froude, double xmin, double xmax, int n, double epsilon,
                const std::string& out_csv, const std::string& out_svg,
                const std::string& method) {
  if (!(xmin < xmax)) throw std::domain_error("profile: requires xmin < xmax");
  if (n < 2) throw std::domain_error("profile: requires n >= 2");
  const FroudeContext ctx(froude);
  const Method m = resolve_method(method, froude);
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i)
    xs[i] = xmin + (xmax - xmin) * static_cast<double>(i) / (n - 1);
  const auto series = vortexwave::solution::surface_profile(xs, ctx, epsilon, m);
  vortexwave::io::write_profile_csv(out_csv, series);
  if (!out_svg.empty()) vortexwave::io::write_profile_svg(out_svg, series);
  return 0;
}

int cmd_verify(double froude) {
  const FroudeContext ctx(froude);
  const auto report = vortexwave::verify::full_report(ctx);
  std::cout << vortexwave::verify::to_key_value(report);
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear surface waves over a vortex: u + F^2 H u' = 1/(pi(x^2+1))"};
  app.require_subcommand(1);

  double froude = 1.0, x = 0.0, xmin = -10.0, xmax = 10.0, epsilon = 1.0;
  int n = 2001;
  std::string method, out_csv, out_svg;

  auto* eval = app.add_subcommand("eval", "evaluate u(x)");
  eval->add_option("--froude", froude, "Froude number (> 0)")->required();
  eval->add_option("--x", x, "position")->required();
  eval->add_option("--method", method,
                   "closed_form|quadrature|vp_oracle|asymptotic");

  auto* profile = app.add_subcommand("profile", "emit surface-profile CSV/SVG");
  profile->add_option("--froude", froude)->required();
  profile->add_option("--xmin", xmin, "left end (default -10)");
  profile->add_option("--xmax", xmax, "right end (default 10)");
  profile->add_option("--n", n, "sample count (default 2001)");
  profile->add_option("--epsilon", epsilon, "vortex strength (default 1)");
  profile->add_option("--out", out_csv, "output CSV path")->required();
  profile->add_option("--svg", out_svg, "optional SVG path");
  profile->add_option("--method", method,
                      "closed_form|quadrature|vp_oracle|asymptotic");

  auto* verify = app.add_subcommand("verify", "run the verification report");
  verify->add_option("--froude", froude)->required();

  app.add_subcommand("selftest", "run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("eval")) return cmd_eval(froude, x, method);
    if (app.got_subcommand("profile"))
      return cmd_profile(froude, xmin, xmax, n, epsilon, out_csv, out_svg,
                         method);
    if (app.got_subcommand("verify")) return cmd_verify(froude);
    if (app.got_subcommand("selftest"))
      return vortexwave::acceptance::run_all(std::cout) == 0 ? 0 : 1;
  } catch (const vortexwave::accuracy_error& e) {
    std::cerr << "accuracy failure: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::range_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
