#include "polembed/polarizability.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "polembed/errors.hpp"

namespace polembed {

using constants::hbar;

void validate(const TwoLevelEmitter& e) {
  if (!(e.dipole >= 0.0)) throw InvalidArgument("two-level emitter: dipole must be >= 0");
  if (!(e.omega_a > 0.0)) throw InvalidArgument("two-level emitter: omega_A must be > 0");
  if (!(e.gamma_a >= 0.0)) throw InvalidArgument("two-level emitter: gamma_A must be >= 0");
}

Complex alpha_rwa(const TwoLevelEmitter& e, Complex omega) {
  const Complex denom = e.omega_a - omega - Complex(0.0, e.gamma_a);
  if (denom == 0.0) {
    throw ResonantLosslessError("resonant lossless evaluation: alpha_rwa at omega = omega_A "
                                "with gamma_A = 0");
  }
  return e.dipole * e.dipole / hbar / denom;
}

Complex alpha_full(const TwoLevelEmitter& e, Complex omega) {
  const Complex denom =
      e.omega_a * e.omega_a - omega * omega - Complex(0.0, 2.0 * e.gamma_a) * omega;
  if (denom == 0.0) {
    throw ResonantLosslessError("resonant lossless evaluation: alpha_full at |omega| = omega_A "
                                "with gamma_A = 0");
  }
  return 2.0 * e.dipole * e.dipole * e.omega_a / hbar / denom;
}

SumOverStatesModel::SumOverStatesModel(std::vector<Transition> transitions, double eta)
    : transitions_(std::move(transitions)), eta_(eta) {
  if (transitions_.empty()) throw InvalidArgument("sum-over-states model: empty transition list");
  if (!(eta_ > 0.0)) throw InvalidArgument("sum-over-states model: eta must be > 0");
  for (const auto& t : transitions_) {
    if (!(t.omega > 0.0)) {
      throw InvalidArgument("sum-over-states model: transition energies must be > 0");
    }
  }
}

Eigen::Matrix3cd alpha_sos(const SumOverStatesModel& m, Complex omega) {
  const Complex shifted = hbar * omega + Complex(0.0, m.eta());
  Eigen::Matrix3cd alpha = Eigen::Matrix3cd::Zero();
  for (const auto& t : m.transitions()) {
    const double e_k = hbar * t.omega;
    const Complex weight = 2.0 * e_k / (e_k * e_k - shifted * shifted);
    alpha += weight * (t.dipole * t.dipole.transpose()).cast<Complex>();
  }
  return alpha;
}

Complex isotropic_average(const Eigen::Matrix3cd& alpha) { return alpha.trace() / 3.0; }

TwoLevelEmitter equivalent_two_level(const Transition& t, double eta) {
  const double damping = eta / hbar;
  const double omega_a = std::sqrt(t.omega * t.omega + damping * damping);
  const double dx = t.dipole.x();
  return {std::sqrt(dx * dx * t.omega / omega_a), omega_a, damping};
}

MixtureModel::MixtureModel(std::vector<MixtureComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("mixture: no components");
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.fraction >= 0.0 && c.fraction <= 1.0)) {
      throw InvalidArgument("mixture: fraction outside [0, 1]");
    }
    total += c.fraction;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "mixture: fractions sum to " << total << ", expected 1";
    throw InvalidArgument(msg.str());
  }
}

Complex alpha_mixture(const MixtureModel& m, Complex omega) {
  Complex sum = 0.0;
  for (const auto& c : m.components()) sum += c.fraction * alpha_scalar(c.model, omega);
  return sum;
}

Complex alpha_scalar(const EmitterModel& m, Complex omega) {
  struct Visitor {
    Complex omega;
    Complex operator()(const TwoLevelModel& t) const {
      return t.form == TwoLevelForm::rwa ? alpha_rwa(t.emitter, omega)
                                         : alpha_full(t.emitter, omega);
    }
    Complex operator()(const SumOverStatesModel& s) const {
      return isotropic_average(alpha_sos(s, omega));
    }
    Complex operator()(const MixtureModel& mix) const { return alpha_mixture(mix, omega); }
  };
  return std::visit(Visitor{omega}, m);
}

SumOverStatesModel load_tddft_roots(const std::filesystem::path& path, double eta) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open roots file " + path.string());

  std::vector<Transition> transitions;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream row(line);
    double energy_ev = 0.0;
    Eigen::Vector3d d;
    std::string extra;
    if (!(row >> energy_ev >> d.x() >> d.y() >> d.z()) || (row >> extra)) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 4 columns (energy_eV dx_au dy_au dz_au)");
    }
    if (!(energy_ev > 0.0)) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": non-positive transition energy");
    }
    transitions.push_back({ev(energy_ev) / hbar, d});
  }
  if (transitions.empty()) throw ParseError(path.string() + ": no transitions");
  return SumOverStatesModel(std::move(transitions), eta);
}

}  // namespace polembed
