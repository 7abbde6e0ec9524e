#ifndef POLEMBED_GREENS_HPP
#define POLEMBED_GREENS_HPP

// Bare Green functions for one field polarization at one point.

#include "polembed/medium.hpp"
#include "polembed/quadrature.hpp"

namespace polembed {

struct LorentzianMode {
  double omega_c = 0.0;
  double gamma_c = 0.0;  // half-width
  double f1 = 0.0;
};

void validate(const LorentzianMode& m);

/// gamma_c = omega_c / Q.
LorentzianMode mode_from_quality(double omega_c, double quality_factor, double f1);

/// f1^2 / (omega_c - omega - i gamma_c).
Complex single_mode_green(const LorentzianMode& m, Complex omega);

/// Im G_vac(r, r, omega) = omega / (6 pi c).
double free_space_im_green(double omega);

/// sqrt(eps omega^2/c^2 - k_par^2) on the branch Im >= 0.
Complex perpendicular_wavevector(Complex eps, double omega, Complex k_par);

struct FresnelPair {
  Complex te;
  Complex tm;
};

FresnelPair fresnel_coefficients(Complex k_par, double omega, Complex eps_fill, Complex eps_mirror);

struct PlanarCavity {
  double length = 0.0;
  Permittivity mirror = Permittivity::vacuum();
  Permittivity fill = Permittivity::vacuum();
};

/// Integrand of the cavity-centre xx scattering Green function in k_par, with
/// both permittivities already evaluated at omega:
///   (i/4pi) (k_par/k_perp) [ r_TE e/(1 - r_TE e) - (k_perp^2/k^2) r_TM e/(1 + r_TM e) ],
/// e = exp(i k_perp L). This is the two-mirror multiple-reflection series
/// summed and the in-plane angle integrated.
Complex fp_integrand(Complex k_par, double omega, double length, Complex eps_fill,
                     Complex eps_mirror);

struct ScatteringGreen {
  Complex value;
  double error = 0.0;       // quadrature error estimate
  double tail_bound = 0.0;  // |integrand| * decay length at the truncation point
  int evaluations = 0;
};

/// G^1_xx at the cavity centre. eps_fill gets +i q.fill_offset.
ScatteringGreen fp_scattering_green_detailed(const PlanarCavity& c, double omega,
                                             const QuadratureSettings& q = {});

Complex fp_scattering_green_xx(const PlanarCavity& c, double omega,
                               const QuadratureSettings& q = {});

}  // namespace polembed

#endif  // POLEMBED_GREENS_HPP
