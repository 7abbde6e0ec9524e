#ifndef POLEMBED_SCENARIO_HPP
#define POLEMBED_SCENARIO_HPP

// Config-driven frequency scans over the dressing pipelines.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "polembed/embedding.hpp"

namespace polembed {

enum class CavityKind { single_mode, fabry_perot };

struct ScanSpec {
  double omega_min = 0.0;  // internal frequency units
  double omega_max = 0.0;
  int points = 0;
  bool log_spacing = false;
};

void validate(const ScanSpec& s);
std::vector<double> frequency_grid(const ScanSpec& s);

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Scenario {
  std::string name;
  CavityKind cavity = CavityKind::single_mode;
  DressingKind embedding = DressingKind::qerra;

  LorentzianMode mode;          // single_mode
  PlanarCavity planar;          // fabry_perot; fill replaced by the ensemble when fill_with_ensemble
  bool fill_with_ensemble = false;
  double r_c = 0.0;             // full_mqed

  EnsembleSpec ensemble;
  ScanSpec scan;
  QuadratureSettings quadrature;

  std::vector<std::string> quantities{"J"};
  bool log_y = false;
  std::filesystem::path csv_path;
  std::filesystem::path plot_path;

  Metadata metadata;  // resolved "section.key" = value, defaults included
};

/// Throws InvalidArgument on inconsistent settings (cavity/embedding pairing,
/// unknown quantities, scan bounds).
void validate(const Scenario& s);

/// Columns a scenario can request.
const std::vector<std::string>& known_quantities();

struct ScanResult {
  std::string name;
  std::vector<double> omega;  // internal units
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // values[column][point]
  Metadata metadata;
  int size_warnings = 0;  // grid points with R_C k > 0.3

  const std::vector<double>& column(const std::string& name) const;
  std::vector<double> omega_ev() const;
};

/// Deterministic for a given scenario regardless of `threads`. Failures are
/// rethrown as StageError naming the stage and frequency.
ScanResult run_scenario(const Scenario& s, int threads = 1);

/// Parse an INI scenario. Relative file paths resolve against base_dir. A list
/// in detuning_over_omega / omega_a_ev / gamma_a_ratio / gamma_a_ev yields one
/// scenario per entry.
std::vector<Scenario> parse_scenarios(const std::string& text, const std::string& name,
                                      const std::filesystem::path& base_dir);
std::vector<Scenario> load_scenarios(const std::filesystem::path& path);

}  // namespace polembed

#endif  // POLEMBED_SCENARIO_HPP
