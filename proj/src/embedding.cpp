#include "polembed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "polembed/errors.hpp"
#include "polembed/roots.hpp"

namespace polembed {

using constants::c;
using constants::eps0;
using constants::pi;

Complex qerra_dress(Complex bare, Complex chi, double v_mic, Complex omega) {
  if (!(v_mic > 0.0)) throw InvalidArgument("qerra dressing: V_mic must be > 0");
  if (bare == 0.0) throw SingularError("qerra dressing: bare Green function vanishes");
  // exact identity for an empty environment (1/(1/G) is not exact in floating point)
  if (chi == 0.0) return bare;
  const Complex denom = 1.0 / bare - v_mic * (omega * omega / (c * c)) * chi;
  if (denom == 0.0) throw SingularError("qerra dressing: dressed response is singular");
  return 1.0 / denom;
}

Complex local_field_c_term(Complex eps, double r_c, double omega) {
  if (!(r_c > 0.0)) throw InvalidArgument("local field: R_C must be > 0");
  const Complex two_eps_1 = 2.0 * eps + 1.0;
  if (two_eps_1 == 0.0) throw SingularError("local field: 2 eps + 1 = 0");
  const double k = omega / c;
  const double kr = k * r_c;
  const Complex static_term = 3.0 * (eps - 1.0) / two_eps_1 / (kr * kr * kr);
  const Complex induction = 9.0 * (eps - 1.0) * (4.0 * eps + 1.0) / (5.0 * two_eps_1 * two_eps_1) / kr;
  const Complex radiative =
      Complex(0.0, 1.0) * (9.0 * std::pow(eps, 2.5) / (two_eps_1 * two_eps_1) - 1.0);
  return k / (6.0 * pi) * (static_term + induction + radiative);
}

LocalFieldPieces local_field_correct(Complex g1, Complex eps, double r_c, double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("local field: omega must be > 0");
  const Complex two_eps_1 = 2.0 * eps + 1.0;
  if (two_eps_1 == 0.0) throw SingularError("local field: 2 eps + 1 = 0");
  const Complex factor = 3.0 * eps / two_eps_1;

  LocalFieldPieces p;
  p.vac_term = Complex(0.0, free_space_im_green(omega));
  p.c_term = local_field_c_term(eps, r_c, omega);
  p.screened_g1 = factor * factor * g1;
  p.total = p.vac_term + p.c_term + p.screened_g1;
  p.size_warning = r_c * std::abs(std::sqrt(eps)) * omega / c > 0.3;
  return p;
}

LocalFieldPieces local_field_correct(Complex g1, const LocalFieldParams& lf, double omega) {
  return local_field_correct(g1, lf.eps_host(omega), lf.r_c, omega);
}

double spectral_density(double im_g, double omega) {
  return omega * omega / (pi * eps0 * c * c) * im_g;
}

SpectralSplit split_bulk_scattering(const LocalFieldPieces& p, double omega) {
  SpectralSplit s;
  s.j_total = spectral_density(p.total.imag(), omega);
  s.j_sc = spectral_density(p.screened_g1.imag(), omega);
  s.j_0 = s.j_total - s.j_sc;
  return s;
}

QerraCavity::QerraCavity(LorentzianMode mode, EmitterModel model, double count)
    : mode_(mode), model_(std::move(model)), count_(count) {
  validate(mode_);
  if (!(count_ >= 0.0)) throw InvalidArgument("qerra cavity: N must be >= 0");
}

Complex QerraCavity::susceptibility_volume(Complex omega) const {
  if (count_ == 0.0) return 0.0;
  return count_ * alpha_scalar(model_, omega) / eps0;
}

Complex QerraCavity::dressed(Complex omega) const {
  return qerra_dress(bare(omega), susceptibility_volume(omega), 1.0, omega);
}

Complex QerraCavity::inverse_dressed(Complex omega) const {
  return 1.0 / bare(omega) - (omega * omega / (c * c)) * susceptibility_volume(omega);
}

Complex dressed_pole(const QerraCavity& cav, Complex guess) {
  // start off the real axis so no iterate lands on a real emitter pole
  const Complex h(0.0, 1e-3 * std::abs(guess));
  return muller([&](Complex w) { return cav.inverse_dressed(w); }, guess - h, guess + h, guess);
}

Complex dressed_residue(const QerraCavity& cav, Complex pole) {
  // Ridders' extrapolation of the central difference of 1/G: the step shrinks
  // geometrically until the tableau stops improving.
  auto f = [&](Complex w) { return cav.inverse_dressed(w); };
  // steps along the imaginary axis keep clear of the real emitter poles
  const Complex i_unit(0.0, 1.0);
  auto central = [&](double h) {
    return (f(pole + i_unit * h) - f(pole - i_unit * h)) / (2.0 * i_unit * h);
  };
  constexpr int ntab = 24;
  constexpr double shrink = 1.4;
  constexpr double shrink2 = shrink * shrink;
  double h = 1e-3 * std::abs(pole);
  std::vector<std::vector<Complex>> a(ntab, std::vector<Complex>(ntab));
  a[0][0] = central(h);
  Complex best = a[0][0];
  double err = 1e300;
  for (int i = 1; i < ntab; ++i) {
    h /= shrink;
    a[0][i] = central(h);
    double fac = shrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= shrink2;
      const double e = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (e <= err) err = e, best = a[j][i];
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err && err < 1e-6 * std::abs(best)) break;
  }
  if (best == 0.0) throw SingularError("dressed residue: 1/G has zero slope at the pole");
  return 1.0 / best;
}

}  // namespace polembed
