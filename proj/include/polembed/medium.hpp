#ifndef POLEMBED_MEDIUM_HPP
#define POLEMBED_MEDIUM_HPP

// Effective-medium susceptibility of an emitter ensemble and material
// permittivities for mirrors and cavity fill.

#include <filesystem>
#include <functional>
#include <string>

#include "polembed/polarizability.hpp"

namespace polembed {

/// Where the ensemble susceptibility applies.
enum class Region { microcavity_volume, between_mirrors };

struct EnsembleSpec {
  double count = 0.0;   // N
  double volume = 1.0;  // V, internal length^3
  EmitterModel model = TwoLevelModel{};
  Region region = Region::microcavity_volume;

  double density() const { return count / volume; }
};

/// Throws InvalidArgument unless N >= 0 and V > 0.
void validate(const EnsembleSpec& s);

/// Spec with V = 1 and N = density (density in internal length^-3).
EnsembleSpec ensemble_from_density(double density, EmitterModel model,
                                   Region region = Region::between_mirrors);

/// Dilute-gas limit chi = N alpha(omega) / (V eps0).
Complex clausius_mossotti_dilute(const EnsembleSpec& s, Complex omega);

class Permittivity {
 public:
  using Rule = std::function<Complex(double)>;

  Permittivity(Rule rule, std::string description);

  Complex operator()(double omega) const { return rule_(omega); }
  const std::string& description() const { return description_; }

  static Permittivity vacuum();
  static Permittivity constant(Complex eps);
  /// Linear interpolation in a table with rows "energy_eV re_eps im_eps" after
  /// one header line. Evaluation outside the tabulated range throws.
  static Permittivity tabulated(const std::filesystem::path& path);

 private:
  Rule rule_;
  std::string description_;
};

Complex permittivity_from_chi(Complex chi);
/// eps(omega) = 1 + chi(omega).
Permittivity permittivity_from_chi(std::function<Complex(double)> chi, std::string description);
/// 1 + clausius_mossotti_dilute(s, omega).
Permittivity ensemble_permittivity(const EnsembleSpec& s);

/// 1 - omega_p^2 / (omega (omega + i gamma)).
Complex drude(double omega, double omega_p, double gamma);

namespace gold {
/// 2.067 * 2 pi PHz and 4.4491 * 2 pi THz in internal units.
double plasma_frequency();
double damping_rate();
}  // namespace gold

Complex drude_gold(double omega);
Permittivity drude_gold_permittivity();

}  // namespace polembed

#endif  // POLEMBED_MEDIUM_HPP
