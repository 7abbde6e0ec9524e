#ifndef POLEMBED_POLARIZABILITY_HPP
#define POLEMBED_POLARIZABILITY_HPP

// Emitter polarizability models for a single field polarization.
//
// All frequencies are angular frequencies in internal units and may be
// complex; the closed forms are analytic in omega, which the pole finders in
// embedding.hpp rely on.

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "polembed/units.hpp"

namespace polembed {

struct TwoLevelEmitter {
  double dipole = 0.0;   // |d|, internal dipole units
  double omega_a = 0.0;  // transition frequency
  double gamma_a = 0.0;  // half-width damping rate
};

/// Throws InvalidArgument unless d >= 0, omega_a > 0, gamma_a >= 0.
void validate(const TwoLevelEmitter& e);

/// d^2/hbar / (omega_A - omega - i gamma_A).
Complex alpha_rwa(const TwoLevelEmitter& e, Complex omega);

/// Lorentz form including the counter-rotating pole:
/// 2 d^2 omega_A / hbar / (omega_A^2 - omega^2 - 2 i omega gamma_A).
/// The factor 2 keeps gamma_A the half-width, so near resonance this is
/// alpha_rwa up to O(gamma_A/omega_A). Passive, with static limit 2 d^2/(hbar omega_A).
Complex alpha_full(const TwoLevelEmitter& e, Complex omega);

struct Transition {
  double omega = 0.0;  // omega_k0 (energy hbar omega_k0 in internal units)
  Eigen::Vector3d dipole = Eigen::Vector3d::Zero();
};

class SumOverStatesModel {
 public:
  SumOverStatesModel(std::vector<Transition> transitions, double eta);

  const std::vector<Transition>& transitions() const { return transitions_; }
  double eta() const { return eta_; }

 private:
  std::vector<Transition> transitions_;
  double eta_;
};

/// alpha_ij = sum_k 2 hbar omega_k0 d^i d^j / ((hbar omega_k0)^2 - (hbar omega + i eta)^2).
///
/// The denominator order makes each term passive and positive at omega = 0;
/// a single transition along x is exactly alpha_full of equivalent_two_level().
Eigen::Matrix3cd alpha_sos(const SumOverStatesModel& m, Complex omega);

/// trace / 3
Complex isotropic_average(const Eigen::Matrix3cd& alpha);

/// Two-level emitter whose alpha_full equals the xx element of a single SOS
/// term with broadening eta:
///   omega_A = sqrt(omega_k0^2 + (eta/hbar)^2), gamma_A = eta / hbar,
///   d^2 = d_x^2 omega_k0 / omega_A.
/// To leading order in eta this is omega_A = omega_k0, gamma_A = eta/hbar.
TwoLevelEmitter equivalent_two_level(const Transition& t, double eta);

enum class TwoLevelForm { rwa, full };

struct TwoLevelModel {
  TwoLevelEmitter emitter;
  TwoLevelForm form = TwoLevelForm::rwa;
};

struct MixtureComponent;

class MixtureModel {
 public:
  /// Fractions must lie in [0, 1] and sum to 1 within 1e-12.
  explicit MixtureModel(std::vector<MixtureComponent> components);

  const std::vector<MixtureComponent>& components() const { return components_; }

 private:
  std::vector<MixtureComponent> components_;
};

using EmitterModel = std::variant<TwoLevelModel, SumOverStatesModel, MixtureModel>;

struct MixtureComponent {
  EmitterModel model;
  double fraction = 0.0;
  std::string label;
};

/// Sum_c fraction_c alpha_c(omega).
Complex alpha_mixture(const MixtureModel& m, Complex omega);

/// Scalar polarizability of any model; SOS tensors enter via their isotropic average.
Complex alpha_scalar(const EmitterModel& m, Complex omega);

/// Rows "energy_eV dx_au dy_au dz_au" after one header line. eta in internal
/// energy units.
SumOverStatesModel load_tddft_roots(const std::filesystem::path& path, double eta);

}  // namespace polembed

#endif  // POLEMBED_POLARIZABILITY_HPP
