#include "vortexwave/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vortexwave::io {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

std::string profile_csv_text(const solution::ProfileSeries& series) {
  std::ostringstream out;
  out << "# froude=" << format_double(series.froude) << '\n'
      << "# epsilon=" << format_double(series.epsilon) << '\n'
      << "# method=" << solution::method_name(series.method) << '\n'
      << "x,u,s\n";
  for (const auto& s : series.samples)
    out << format_double(s.x) << ',' << format_double(s.u) << ','
        << format_double(s.s) << '\n';
  return out.str();
}

namespace {

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  try {
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw std::runtime_error("cannot open " + tmp.string());
      f.write(content.data(), static_cast<std::streamsize>(content.size()));
      if (!f) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string profile_svg_text(const solution::ProfileSeries& series) {
  constexpr double kW = 800.0, kH = 400.0;
  constexpr double kL = 62.0, kR = 14.0, kT = 14.0, kB = 42.0;
  if (series.samples.empty())
    throw std::domain_error("profile_svg_text: empty series");

  double xmin = series.samples.front().x, xmax = series.samples.back().x;
  double smin = series.samples.front().s, smax = smin;
  for (const auto& s : series.samples) {
    smin = std::min(smin, s.s);
    smax = std::max(smax, s.s);
  }
  if (xmax == xmin) { xmin -= 1.0; xmax += 1.0; }
  if (smax == smin) { smin -= 1.0; smax += 1.0; }
  const double pad = 0.05 * (smax - smin);
  smin -= pad;
  smax += pad;

  auto X = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kW - kL - kR); };
  auto Y = [&](double s) { return kH - kB - (s - smin) / (smax - smin) * (kH - kT - kB); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
         "viewBox=\"0 0 800 400\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n"
      << "<line x1=\"" << px(kL) << "\" y1=\"" << px(kH - kB) << "\" x2=\""
      << px(kW - kR) << "\" y2=\"" << px(kH - kB)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n"
      << "<line x1=\"" << px(kL) << "\" y1=\"" << px(kT) << "\" x2=\"" << px(kL)
      << "\" y2=\"" << px(kH - kB) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4.0;
    const double sv = smin + (smax - smin) * i / 4.0;
    char label[40];
    out << "<line x1=\"" << px(X(xv)) << "\" y1=\"" << px(kH - kB) << "\" x2=\""
        << px(X(xv)) << "\" y2=\"" << px(kH - kB + 5)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    std::snprintf(label, sizeof label, "%.6g", xv);
    out << "<text x=\"" << px(X(xv)) << "\" y=\"" << px(kH - kB + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << label << "</text>\n";
    out << "<line x1=\"" << px(kL - 5) << "\" y1=\"" << px(Y(sv)) << "\" x2=\""
        << px(kL) << "\" y2=\"" << px(Y(sv))
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    std::snprintf(label, sizeof label, "%.6g", sv);
    out << "<text x=\"" << px(kL - 8) << "\" y=\"" << px(Y(sv) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << label << "</text>\n";
  }
  out << "<text x=\"" << px((kL + kW - kR) / 2) << "\" y=\"" << px(kH - 6)
      << "\" font-size=\"13\" text-anchor=\"middle\">x</text>\n"
      << "<text x=\"14\" y=\"" << px((kT + kH - kB) / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << px((kT + kH - kB) / 2) << ")\">S(x)</text>\n"
      << "<text x=\"" << px(kW - kR) << "\" y=\"" << px(kT + 12)
      << "\" font-size=\"12\" text-anchor=\"end\">F="
      << format_double(series.froude) << "</text>\n";

  out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.2\" points=\"";
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    if (i) out << ' ';
    out << px(X(series.samples[i].x)) << ',' << px(Y(series.samples[i].s));
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

void write_profile_csv(const fs::path& path,
                       const solution::ProfileSeries& series) {
  write_atomic(path, profile_csv_text(series));
}

void write_profile_svg(const fs::path& path,
                       const solution::ProfileSeries& series) {
  write_atomic(path, profile_svg_text(series));
}

solution::ProfileSeries read_profile_csv(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  solution::ProfileSeries series;
  std::string line;
  bool have_header = false;
  auto parse_field = [](const std::string& s) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw std::runtime_error("bad CSV number: " + s);
    return v;
  };
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string val = line.substr(eq + 1);
      if (key == "froude") series.froude = parse_field(val);
      else if (key == "epsilon") series.epsilon = parse_field(val);
      else if (key == "method") series.method = solution::parse_method(val);
      continue;
    }
    if (!have_header) {
      if (line != "x,u,s") throw std::runtime_error("bad CSV header: " + line);
      have_header = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::runtime_error("bad CSV row: " + line);
    series.samples.push_back({parse_field(line.substr(0, c1)),
                              parse_field(line.substr(c1 + 1, c2 - c1 - 1)),
                              parse_field(line.substr(c2 + 1))});
  }
  return series;
}

}  // namespace vortexwave::io
