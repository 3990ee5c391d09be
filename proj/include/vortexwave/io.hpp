#ifndef VORTEXWAVE_IO_HPP
#define VORTEXWAVE_IO_HPP

#include <filesystem>
#include <string>

#include "vortexwave/solution.hpp"

namespace vortexwave::io {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// CSV with header `x,u,s`, one row per sample, preceded by comment lines
// `# froude=`, `# epsilon=`, `# method=`. Deterministic byte-for-byte.
std::string profile_csv_text(const solution::ProfileSeries& series);

// Fixed 800x400 single-polyline plot of S against x, linear axes.
std::string profile_svg_text(const solution::ProfileSeries& series);

// Atomic writes (temp file + rename); partial files are removed on failure.
void write_profile_csv(const std::filesystem::path& path,
                       const solution::ProfileSeries& series);
void write_profile_svg(const std::filesystem::path& path,
                       const solution::ProfileSeries& series);

solution::ProfileSeries read_profile_csv(const std::filesystem::path& path);

}  // namespace vortexwave::io

#endif  // VORTEXWAVE_IO_HPP
