#include "polembed/presets.hpp"

#include <cstdlib>
#include <map>

#include "polembed/errors.hpp"

#ifndef POLEMBED_DATA_DIR
#define POLEMBED_DATA_DIR "data"
#endif

namespace polembed {

namespace {

// Single-mode cavity shared by fig2b, fig2c and fig2e: 5.44 eV, Q = 25.8, f1 fixed
// by a 0.13 omega_c polariton splitting for 6e6 emitters of 2.25 D.
const char* const fig2b = R"([cavity]
kind = single_mode
omega_c_ev = 5.44
quality_factor = 25.8
splitting_over_omega = 0.13

[ensemble]
model = rwa
N = 6e6
dipole_debye = 2.25
detuning_over_omega = -0.05, 0, 0.05
gamma_a_ratio = 200

[embedding]
kind = qerra

[scan]
omega_min_ev = 4.352
omega_max_ev = 6.528
points = 2001

[output]
quantities = J, J_bare
)";

const char* const fig2c = R"([cavity]
kind = single_mode
omega_c_ev = 5.44
quality_factor = 25.8
splitting_over_omega = 0.13

[ensemble]
model = rwa
N = 6e6
dipole_debye = 2.25
detuning_over_omega = 0
gamma_a_ratio = 800, 400, 200, 100

[embedding]
kind = qerra

[scan]
omega_min_ev = 4.352
omega_max_ev = 6.528
points = 2001

[output]
quantities = J, J_bare
)";

const char* const fig2e = R"([cavity]
kind = single_mode
omega_c_ev = 5.44
quality_factor = 25.8
splitting_over_omega = 0.13
reference_N = 6e6
reference_dipole_debye = 2.25

[ensemble]
model = sos
N = 1e8
eta_hartree = 5e-3
components = sos:trans_azopyrrole.dat:0.15, sos:cis_azopyrrole.dat:0.05, sos:chloroform.dat:0.80

[embedding]
kind = qerra

[scan]
omega_min_ev = 5.0
omega_max_ev = 5.9
points = 901

[output]
quantities = J, J_bare, alpha_ave_im
)";

const char* const fig2g = R"([cavity]
kind = fabry_perot
length_nm = 388
mirror = drude_gold
fill = ensemble

[ensemble]
model = sos
density_per_nm3 = 3
eta_hartree = 5e-3
components = sos:trans_azopyrrole.dat:0.15, sos:cis_azopyrrole.dat:0.05, sos:chloroform.dat:0.80

[embedding]
kind = full_mqed
r_c_nm = 1

[scan]
omega_min_ev = 4.0
omega_max_ev = 7.0
points = 500

[output]
quantities = J, J_sc, J_0, alpha_ave_im
log_y = true
)";

const char* const fig2h = R"([cavity]
kind = fabry_perot
length_nm = 388
mirror = drude_gold
fill = ensemble

[ensemble]
model = sos
density_per_nm3 = 3
eta_hartree = 5e-3
components = sos:trans_azopyrrole.dat:0.15, sos:cis_azopyrrole.dat:0.05, sos:chloroform.dat:0.80

[embedding]
kind = full_mqed
r_c_nm = 1

[scan]
omega_min_ev = 4.75
omega_max_ev = 6.2
points = 300

[output]
quantities = J_sc, J_bare
)";

const std::map<std::string, std::string>& texts() {
  static const std::map<std::string, std::string> t{
      {"fig2b", fig2b}, {"fig2c", fig2c}, {"fig2e", fig2e}, {"fig2g", fig2g}, {"fig2h", fig2h}};
  return t;
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("POLEMBED_DATA_DIR")) return env;
  return POLEMBED_DATA_DIR;
}

const std::vector<PresetInfo>& list_presets() {
  static const std::vector<PresetInfo> p{
      {"fig2b", "single-mode cavity, two-level ensemble, detuning -0.05/0/+0.05 omega_c"},
      {"fig2c", "single-mode cavity, two-level ensemble, gamma_A = omega_A/800 ... omega_A/100"},
      {"fig2e", "single-mode cavity, azopyrrole/chloroform mixture, N = 1e8"},
      {"fig2g", "gold Fabry-Perot, L = 388 nm, filled with the mixture, full embedding"},
      {"fig2h", "as fig2g, zoom on the scattering part near 227.8 nm"},
  };
  return p;
}

const std::string& preset_text(const std::string& name) {
  const auto it = texts().find(name);
  if (it == texts().end()) throw InvalidArgument("unknown preset '" + name + "'");
  return it->second;
}

std::vector<Scenario> load_preset(const std::string& name, const std::filesystem::path& data_dir) {
  return parse_scenarios(preset_text(name), name, data_dir);
}

}  // namespace polembed
