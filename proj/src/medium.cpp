#include "polembed/medium.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "polembed/errors.hpp"

namespace polembed {

using constants::eps0;

void validate(const EnsembleSpec& s) {
  if (!(s.count >= 0.0)) throw InvalidArgument("ensemble: N must be >= 0");
  if (!(s.volume > 0.0)) throw InvalidArgument("ensemble: V must be > 0");
}

EnsembleSpec ensemble_from_density(double density, EmitterModel model, Region region) {
  EnsembleSpec s{density, 1.0, std::move(model), region};
  validate(s);
  return s;
}

Complex clausius_mossotti_dilute(const EnsembleSpec& s, Complex omega) {
  if (s.count == 0.0) return 0.0;
  return s.count / (s.volume * eps0) * alpha_scalar(s.model, omega);
}

Permittivity::Permittivity(Rule rule, std::string description)
    : rule_(std::move(rule)), description_(std::move(description)) {}

Permittivity Permittivity::vacuum() {
  return {[](double) { return Complex(1.0); }, "vacuum"};
}

Permittivity Permittivity::constant(Complex eps) {
  std::ostringstream d;
  d.precision(17);
  d << "constant(" << eps.real() << "," << eps.imag() << ")";
  return {[eps](double) { return eps; }, d.str()};
}

Permittivity Permittivity::tabulated(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open permittivity table " + path.string());

  struct Row {
    double omega;
    Complex eps;
  };
  auto rows = std::make_shared<std::vector<Row>>();
  std::string line;
  std::size_t line_no = 0;
  std::getline(in, line);
  ++line_no;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    double e = 0.0, re = 0.0, im = 0.0;
    if (!(row >> e >> re >> im) || !(e > 0.0)) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'energy_eV re_eps im_eps' with positive energy");
    }
    rows->push_back({ev(e) / constants::hbar, {re, im}});
  }
  if (rows->size() < 2) throw ParseError(path.string() + ": need at least two rows");
  std::sort(rows->begin(), rows->end(), [](const Row& a, const Row& b) { return a.omega < b.omega; });

  auto rule = [rows, name = path.string()](double omega) {
    const auto& r = *rows;
    if (omega < r.front().omega || omega > r.back().omega) {
      throw InvalidArgument("permittivity table " + name + ": frequency outside tabulated range");
    }
    auto hi = std::lower_bound(r.begin(), r.end(), omega,
                               [](const Row& a, double w) { return a.omega < w; });
    if (hi == r.begin()) return hi->eps;
    auto lo = hi - 1;
    const double t = (omega - lo->omega) / (hi->omega - lo->omega);
    return lo->eps + t * (hi->eps - lo->eps);
  };
  return {rule, "tabulated(" + path.string() + ")"};
}

Complex permittivity_from_chi(Complex chi) { return 1.0 + chi; }

Permittivity permittivity_from_chi(std::function<Complex(double)> chi, std::string description) {
  return {[chi = std::move(chi)](double omega) { return 1.0 + chi(omega); },
          std::move(description)};
}

Permittivity ensemble_permittivity(const EnsembleSpec& s) {
  validate(s);
  return permittivity_from_chi([s](double omega) { return clausius_mossotti_dilute(s, omega); },
                               "1 + chi_ensemble");
}

Complex drude(double omega, double omega_p, double gamma) {
  if (!(omega > 0.0)) throw InvalidArgument("drude: omega must be > 0");
  return 1.0 - omega_p * omega_p / (omega * Complex(omega, gamma));
}

namespace gold {
double plasma_frequency() { return to_internal(2.067, Unit::two_pi_phz); }
double damping_rate() { return to_internal(4.4491, Unit::two_pi_thz); }
}  // namespace gold

Complex drude_gold(double omega) {
  return drude(omega, gold::plasma_frequency(), gold::damping_rate());
}

Permittivity drude_gold_permittivity() {
  return {[](double omega) { return drude_gold(omega); }, "drude_gold"};
}

}  // namespace polembed
