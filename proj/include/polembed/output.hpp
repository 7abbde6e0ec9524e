#ifndef POLEMBED_OUTPUT_HPP
#define POLEMBED_OUTPUT_HPP

// CSV and SVG emission of scan results.

#include <filesystem>
#include <string>
#include <vector>

#include "polembed/scenario.hpp"

namespace polembed {

/// '#'-prefixed metadata lines, then "omega_ev,<quantities...>", then one row
/// per grid point in %.16e. Throws IoError naming the path.
void emit_csv(const ScanResult& r, const std::filesystem::path& path);

struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Line plot of every column against omega in eV. With log_y, non-positive
/// values are dropped from the curves.
void emit_plot(const ScanResult& r, const std::filesystem::path& path, bool log_y = false);

}  // namespace polembed

#endif  // POLEMBED_OUTPUT_HPP
