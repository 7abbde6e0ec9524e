#include "polembed/greens.hpp"

#include <cmath>

#include "polembed/errors.hpp"

namespace polembed {

using constants::c;
using constants::pi;

void validate(const LorentzianMode& m) {
  if (!(m.omega_c > 0.0)) throw InvalidArgument("lorentzian mode: omega_c must be > 0");
  if (!(m.gamma_c >= 0.0)) throw InvalidArgument("lorentzian mode: gamma_c must be >= 0");
}

LorentzianMode mode_from_quality(double omega_c, double quality_factor, double f1) {
  if (!(quality_factor > 0.0)) throw InvalidArgument("lorentzian mode: quality factor must be > 0");
  LorentzianMode m{omega_c, omega_c / quality_factor, f1};
  validate(m);
  return m;
}

Complex single_mode_green(const LorentzianMode& m, Complex omega) {
  const Complex denom = m.omega_c - omega - Complex(0.0, m.gamma_c);
  if (denom == 0.0) {
    throw ResonantLosslessError("resonant lossless evaluation: single-mode Green function at "
                                "omega = omega_c with gamma_c = 0");
  }
  return m.f1 * m.f1 / denom;
}

double free_space_im_green(double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("free-space Green function: omega must be > 0");
  return omega / (6.0 * pi * c);
}

Complex perpendicular_wavevector(Complex eps, double omega, Complex k_par) {
  const double k0 = omega / c;
  Complex kz = std::sqrt(eps * k0 * k0 - k_par * k_par);
  if (kz.imag() < 0.0) kz = -kz;
  return kz;
}

FresnelPair fresnel_coefficients(Complex k_par, double omega, Complex eps_fill, Complex eps_mirror) {
  if (!(omega > 0.0)) throw InvalidArgument("fresnel coefficients: omega must be > 0");
  const Complex kz = perpendicular_wavevector(eps_fill, omega, k_par);
  const Complex kzm = perpendicular_wavevector(eps_mirror, omega, k_par);
  return {(kz - kzm) / (kz + kzm), (eps_mirror * kz - eps_fill * kzm) / (eps_mirror * kz + eps_fill * kzm)};
}

Complex fp_integrand(Complex k_par, double omega, double length, Complex eps_fill,
                     Complex eps_mirror) {
  const Complex kz = perpendicular_wavevector(eps_fill, omega, k_par);
  const Complex kzm = perpendicular_wavevector(eps_mirror, omega, k_par);
  const Complex r_te = (kz - kzm) / (kz + kzm);
  const Complex r_tm = (eps_mirror * kz - eps_fill * kzm) / (eps_mirror * kz + eps_fill * kzm);
  const Complex k_sq = eps_fill * (omega / c) * (omega / c);
  const Complex e = std::exp(Complex(0.0, 1.0) * kz * length);
  const Complex te = r_te * e / (1.0 - r_te * e);
  const Complex tm = (kz * kz / k_sq) * r_tm * e / (1.0 + r_tm * e);
  return Complex(0.0, 1.0 / (4.0 * pi)) * (k_par / kz) * (te - tm);
}

namespace {

// Local minima of the two multiple-reflection denominators on a coarse grid in
// the substitution variable; these mark near-poles of the integrand.
std::vector<double> denominator_minima(const std::function<double(double)>& depth, double t0,
                                       double t1, int samples) {
  std::vector<double> out;
  const double h = (t1 - t0) / samples;
  double prev2 = depth(t0), prev1 = depth(t0 + h);
  for (int i = 2; i <= samples; ++i) {
    const double cur = depth(t0 + i * h);
    if (prev1 < prev2 && prev1 <= cur) out.push_back(t0 + (i - 1) * h);
    prev2 = prev1;
    prev1 = cur;
  }
  return out;
}

}  // namespace

ScatteringGreen fp_scattering_green_detailed(const PlanarCavity& cav, double omega,
                                             const QuadratureSettings& q) {
  validate(q);
  if (!(cav.length > 0.0)) throw InvalidArgument("planar cavity: L must be > 0");
  if (!(omega > 0.0)) throw InvalidArgument("planar cavity: omega must be > 0");

  const Complex eps_fill = cav.fill(omega) + Complex(0.0, q.fill_offset);
  const Complex eps_mirror = cav.mirror(omega);
  const double length = cav.length;
  const double kr = (std::sqrt(eps_fill) * omega / c).real();

  // t < 0: propagating part, k_par = kr - t^2; t > 0: evanescent part, k_par = kr + t^2.
  // The Jacobian 2|t| cancels the 1/k_perp branch-point singularity at k_par = kr.
  auto k_par_of = [kr](double t) { return t < 0.0 ? kr - t * t : kr + t * t; };
  auto g = [&](double t) {
    return fp_integrand(k_par_of(t), omega, length, eps_fill, eps_mirror) * (2.0 * std::abs(t));
  };
  auto depth = [&](double t) {
    const Complex kp = k_par_of(t);
    const auto r = fresnel_coefficients(kp, omega, eps_fill, eps_mirror);
    const Complex e = std::exp(Complex(0.0, 1.0) * perpendicular_wavevector(eps_fill, omega, kp) * length);
    return std::min(std::abs(1.0 - r.te * e), std::abs(1.0 + r.tm * e));
  };

  const double abs_tol = 1e-3 * q.rel_tol * free_space_im_green(omega);
  const double t_min = -std::sqrt(kr);
  double decay_l = 2.0 * std::log(1.0 / q.rel_tol) + 40.0;  // kappa_max * L

  ScatteringGreen out;
  for (int attempt = 0; attempt < 4; ++attempt, decay_l += 20.0) {
    const double t_max = std::sqrt(decay_l / length);
    std::vector<double> points{t_min};
    for (double t : denominator_minima(depth, t_min, 0.0, 256)) points.push_back(t);
    points.push_back(0.0);
    for (double t : denominator_minima(depth, 0.0, t_max, 256)) points.push_back(t);
    points.push_back(t_max);

    const auto res = integrate_adaptive(g, points, q.rel_tol, abs_tol, q.max_subdivisions);
    out.value = res.value;
    out.error = res.error;
    out.evaluations += res.evaluations;
    out.tail_bound = std::abs(g(t_max)) / (2.0 * t_max * length);
    if (out.tail_bound <= std::max(abs_tol, q.rel_tol * std::abs(out.value))) return out;
  }
  throw QuadratureError("planar cavity: evanescent tail did not decay below tolerance",
                        out.value.real(), out.value.imag(), out.tail_bound);
}

Complex fp_scattering_green_xx(const PlanarCavity& cav, double omega, const QuadratureSettings& q) {
  return fp_scattering_green_detailed(cav, omega, q).value;
}

}  // namespace polembed
