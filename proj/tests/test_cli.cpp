#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "vortexwave/io.hpp"

// VORTEXWAVE_CLI_PATH is injected by the build with the location of the
// built binary.

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(VORTEXWAVE_CLI_PATH) + " " + args +
                          " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("vortexwave-cli-test-" + name);
}

}  // namespace

TEST_CASE("eval") {
  const RunResult r = run_cli("eval --froude 1 --x 0");
  CHECK(r.exit_code == 0);
  CHECK(std::stod(r.output) == doctest::Approx(0.22191765773275143).epsilon(1e-9));

  const RunResult asym = run_cli("eval --froude 1 --x 0 --method asymptotic");
  CHECK(asym.exit_code == 0);
  CHECK(std::stod(asym.output) == 0.0);

  CHECK(run_cli("eval --froude -1 --x 0").exit_code == 2);
  CHECK(run_cli("eval --x 0").exit_code == 2);           // missing flag
  CHECK(run_cli("eval --froude 1 --x 0 --method nope").exit_code == 2);
}

TEST_CASE("profile") {
  const fs::path csv = temp_file("p.csv");
  const fs::path svg = temp_file("p.svg");
  const std::string args = "profile --froude 1 --xmin -10 --xmax 10 --n 2001 "
                           "--out " + csv.string() + " --svg " + svg.string();
  const RunResult r = run_cli(args);
  REQUIRE(r.exit_code == 0);

  const auto series = vortexwave::io::read_profile_csv(csv);
  CHECK(series.samples.size() == 2001);
  CHECK(series.froude == 1.0);
  CHECK(series.epsilon == 1.0);

  SUBCASE("row at the origin") {
    const auto& mid = series.samples[1000];
    CHECK(mid.x == 0.0);
    CHECK(mid.u == doctest::Approx(0.22191765773275143).epsilon(1e-9));
    CHECK(mid.s == doctest::Approx(-0.22191765773275143).epsilon(1e-9));
  }

  SUBCASE("round-trip reproduces the s column bit-exactly") {
    const double scale = -series.epsilon * series.froude * series.froude;
    for (const auto& s : series.samples) CHECK(s.s == scale * s.u);
  }

  SUBCASE("byte-identical on a second run") {
    const fs::path csv2 = temp_file("p2.csv");
    REQUIRE(run_cli("profile --froude 1 --xmin -10 --xmax 10 --n 2001 --out " +
                    csv2.string())
                .exit_code == 0);
    std::ifstream a(csv, std::ios::binary), b(csv2, std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
    fs::remove(csv2);
  }

  SUBCASE("svg is a single fixed-viewport polyline") {
    std::ifstream f(svg);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    CHECK(text.find("width=\"800\" height=\"400\"") != std::string::npos);
    CHECK(text.find("<polyline") != std::string::npos);
    CHECK(text.rfind("<polyline") == text.find("<polyline"));  // exactly one
    CHECK(text.find("S(x)") != std::string::npos);
  }

  SUBCASE("reversed range exits 2") {
    CHECK(run_cli("profile --froude 1 --xmin 5 --xmax -5 --out " +
                  temp_file("bad.csv").string())
              .exit_code == 2);
  }

  fs::remove(csv);
  fs::remove(svg);
}

TEST_CASE("verify subcommand") {
  CHECK(run_cli("verify --froude 0.05").exit_code == 2);

  // Full verification chain; slow but the core external contract.
  const RunResult r = run_cli("verify --froude 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("ide_residual_max=") != std::string::npos);
  CHECK(r.output.find("passed=true") != std::string::npos);
}

TEST_CASE("unknown subcommand exits 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
}
