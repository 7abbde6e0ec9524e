#ifndef POLEMBED_QO_MODELS_HPP
#define POLEMBED_QO_MODELS_HPP

// Single-excitation Hamiltonians of the collective-coupling models and the
// explicit-ensemble oracle.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "polembed/greens.hpp"

namespace polembed {

/// Plus/minus follow the closed forms omega_pm = omega_c / (1 pm x), x = Omega_R/omega_c,
/// so omega_plus is the lower polariton. Frequency-ordered aliases are provided.
struct PolaritonParams {
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double g_plus = 0.0;
  double g_minus = 0.0;
  double rabi = 0.0;  // Omega_R = g sqrt(N)
  double g = 0.0;

  double omega_lower() const { return omega_plus; }
  double omega_upper() const { return omega_minus; }
  double g_lower() const { return g_plus; }
  double g_upper() const { return g_minus; }
};

/// g = f1 d omega_c / (sqrt(eps0 hbar) c).
double coupling_from_mode(const LorentzianMode& m, double dipole);

/// f1 giving g sqrt(N) = rabi for emitters of dipole d.
double mode_amplitude_for_rabi(double omega_c, double rabi, double count, double dipole);

/// Rabi frequency x omega_c whose dressed poles are split by s omega_c:
/// x = (sqrt(1 + s^2) - 1) / s.
double rabi_for_splitting(double omega_c, double splitting);

/// Throws InvalidArgument unless 0 <= Omega_R < omega_c.
PolaritonParams qerra_polariton_params(double omega_c, double rabi, double g);

struct SingleExcitationHamiltonian {
  Eigen::MatrixXcd matrix;
  std::vector<std::string> labels;

  /// Ascending eigenvalues (matrix must be Hermitian).
  Eigen::VectorXd eigenvalues() const;
  double hermiticity_defect() const;
};

/// Basis ((|1>+|B>)/sqrt2, (|1>-|B>)/sqrt2, |e_N>):
/// diag(omega_c + g sqrt N, omega_c - g sqrt N, omega_A), impurity coupling g/sqrt2.
SingleExcitationHamiltonian tc_single_excitation(double omega_c, double omega_a, double g,
                                                 double count);

/// Basis (upper polariton, lower polariton, |e_N>): diag(omega_-, omega_+, omega_A)
/// with couplings g_-, g_+.
SingleExcitationHamiltonian qerra_single_excitation(const PolaritonParams& p, double omega_a);

/// Bosonized collective model: photon a, bright boson b (coupling g sqrt N),
/// impurity sigma (coupling g) rotated into f_pm = (a pm b)/sqrt2.
SingleExcitationHamiltonian hp_single_excitation(double omega_c, double omega_a, double g,
                                                 double count);

/// Photon (index 0) coupled to each emitter j with couplings[j].
SingleExcitationHamiltonian explicit_ensemble_hamiltonian(double omega_c,
                                                          const std::vector<double>& emitter_freqs,
                                                          const std::vector<double>& couplings);

struct SuperradianceElements {
  double tc_ratio = 0.0;
  double qerra_element = 0.0;
};

/// <0,1|H_TC|+,0> / <0,1|H_TC|1_j,0> and the Qerra-side matrix element
/// sqrt(N/4N_E) (omega_upper - omega_lower) + sqrt(1/2N_E) (g_+ + g_-),
/// params built for N = N_E - 1 bath emitters.
SuperradianceElements superradiance_matrix_elements(double n_e, double g,
                                                    const PolaritonParams& params);

}  // namespace polembed

#endif  // POLEMBED_QO_MODELS_HPP
