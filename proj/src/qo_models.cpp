#include "polembed/qo_models.hpp"

#include <cmath>

#include "polembed/errors.hpp"

namespace polembed {

using constants::c;
using constants::eps0;
using constants::hbar;

double coupling_from_mode(const LorentzianMode& m, double dipole) {
  if (!(dipole >= 0.0)) throw InvalidArgument("coupling: dipole must be >= 0");
  return m.f1 * dipole * m.omega_c / (std::sqrt(eps0 * hbar) * c);
}

double mode_amplitude_for_rabi(double omega_c, double rabi, double count, double dipole) {
  if (!(count > 0.0 && dipole > 0.0 && omega_c > 0.0)) {
    throw InvalidArgument("mode amplitude: need N > 0, d > 0, omega_c > 0");
  }
  const double g = rabi / std::sqrt(count);
  return g * std::sqrt(eps0 * hbar) * c / (dipole * omega_c);
}

double rabi_for_splitting(double omega_c, double splitting) {
  if (!(splitting >= 0.0)) throw InvalidArgument("splitting must be >= 0");
  if (splitting == 0.0) return 0.0;
  return omega_c * (std::sqrt(1.0 + splitting * splitting) - 1.0) / splitting;
}

PolaritonParams qerra_polariton_params(double omega_c, double rabi, double g) {
  if (!(omega_c > 0.0)) throw InvalidArgument("polariton params: omega_c must be > 0");
  if (!(rabi >= 0.0)) throw InvalidArgument("polariton params: Omega_R must be >= 0");
  if (!(rabi < omega_c)) {
    throw InvalidArgument("polariton params: Omega_R >= omega_c puts omega_- at a pole");
  }
  const double x = rabi / omega_c;
  PolaritonParams p;
  p.omega_plus = omega_c / (1.0 + x);
  p.omega_minus = omega_c / (1.0 - x);
  p.g_plus = g / std::sqrt(2.0 * (1.0 + x));
  p.g_minus = g / std::sqrt(2.0 * (1.0 - x));
  p.rabi = rabi;
  p.g = g;
  return p;
}

Eigen::VectorXd SingleExcitationHamiltonian::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("eigenvalue solver failed");
  return solver.eigenvalues();
}

double SingleExcitationHamiltonian::hermiticity_defect() const {
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

SingleExcitationHamiltonian three_state(double e0, double e1, double e2, double c0, double c1,
                                        std::vector<std::string> labels) {
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  h(0, 0) = e0;
  h(1, 1) = e1;
  h(2, 2) = e2;
  h(0, 2) = h(2, 0) = c0;
  h(1, 2) = h(2, 1) = c1;
  return {h, std::move(labels)};
}

void check_count(double count) {
  if (!(count >= 1.0)) throw InvalidArgument("single-excitation model: N must be >= 1");
}

}  // namespace

SingleExcitationHamiltonian tc_single_excitation(double omega_c, double omega_a, double g,
                                                 double count) {
  check_count(count);
  const double rabi = g * std::sqrt(count);
  const double coupling = g / std::sqrt(2.0);
  return three_state(omega_c + rabi, omega_c - rabi, omega_a, coupling, coupling,
                     {"(|1>+|B>)/sqrt2", "(|1>-|B>)/sqrt2", "|e_N>"});
}

SingleExcitationHamiltonian qerra_single_excitation(const PolaritonParams& p, double omega_a) {
  return three_state(p.omega_upper(), p.omega_lower(), omega_a, p.g_upper(), p.g_lower(),
                     {"upper polariton", "lower polariton", "|e_N>"});
}

SingleExcitationHamiltonian hp_single_excitation(double omega_c, double omega_a, double g,
                                                 double count) {
  check_count(count);
  // Basis (a, b, sigma) after the low-excitation expansion of the collective spin.
  Eigen::Matrix3d h;
  const double bright = g * std::sqrt(count);
  h << omega_c, bright, g,
       bright, omega_c, 0.0,
       g, 0.0, omega_a;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d u;
  u << r, r, 0.0,
       r, -r, 0.0,
       0.0, 0.0, 1.0;
  const Eigen::Matrix3d rotated = u.transpose() * h * u;
  return {rotated.cast<Complex>(), {"f_+ = (a+b)/sqrt2", "f_- = (a-b)/sqrt2", "sigma"}};
}

SingleExcitationHamiltonian explicit_ensemble_hamiltonian(double omega_c,
                                                          const std::vector<double>& emitter_freqs,
                                                          const std::vector<double>& couplings) {
  if (emitter_freqs.empty() || emitter_freqs.size() != couplings.size()) {
    throw InvalidArgument("explicit ensemble: frequency and coupling lists must be non-empty "
                          "and of equal length");
  }
  const auto n = static_cast<Eigen::Index>(emitter_freqs.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  std::vector<std::string> labels{"photon"};
  h(0, 0) = omega_c;
  for (Eigen::Index j = 0; j < n; ++j) {
    h(j + 1, j + 1) = emitter_freqs[j];
    h(0, j + 1) = h(j + 1, 0) = couplings[j];
    labels.push_back("emitter " + std::to_string(j + 1));
  }
  return {h, std::move(labels)};
}

SuperradianceElements superradiance_matrix_elements(double n_e, double g,
                                                    const PolaritonParams& params) {
  if (!(n_e >= 1.0)) throw InvalidArgument("superradiance: N_E must be >= 1");
  if (g == 0.0) throw InvalidArgument("superradiance: g must be nonzero");

  // <0,1| H |+,0> = sum_j g / sqrt(N_E), summed with Kahan compensation.
  const auto terms = static_cast<long long>(std::llround(n_e));
  const double each = g / std::sqrt(n_e);
  double sum = 0.0, carry = 0.0;
  for (long long j = 0; j < terms; ++j) {
    const double y = each - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  const double n = n_e - 1.0;
  SuperradianceElements out;
  out.tc_ratio = sum / g;
  out.qerra_element = std::sqrt(n / (4.0 * n_e)) * (params.omega_upper() - params.omega_lower()) +
                      std::sqrt(1.0 / (2.0 * n_e)) * (params.g_plus + params.g_minus);
  return out;
}

}  // namespace polembed
