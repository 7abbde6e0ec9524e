#ifndef POLEMBED_PRESETS_HPP
#define POLEMBED_PRESETS_HPP

// Named reference scenarios.

#include <filesystem>
#include <string>
#include <vector>

#include "polembed/scenario.hpp"

namespace polembed {

struct PresetInfo {
  std::string name;
  std::string description;
};

/// Directory holding the bundled roots tables (overridable with POLEMBED_DATA_DIR).
std::filesystem::path default_data_dir();

const std::vector<PresetInfo>& list_presets();

/// INI text of a preset. Throws InvalidArgument for unknown names.
const std::string& preset_text(const std::string& name);

/// Parsed preset; component tables resolve against data_dir.
std::vector<Scenario> load_preset(const std::string& name,
                                  const std::filesystem::path& data_dir = default_data_dir());

}  // namespace polembed

#endif  // POLEMBED_PRESETS_HPP
