#ifndef POLEMBED_EMBEDDING_HPP
#define POLEMBED_EMBEDDING_HPP

// Dressing of bare Green functions by the ensemble response, real-cavity
// local-field correction and spectral densities.

#include <functional>

#include "polembed/greens.hpp"

namespace polembed {

enum class DressingKind { qerra, full_mqed };

/// G = 1 / (1/G_bare - V_mic (omega^2/c^2) chi). V_mic chi = N alpha / eps0
/// for the dilute ensemble, so only the product matters.
/// Throws SingularError if G_bare = 0 or the dressed denominator vanishes.
Complex qerra_dress(Complex bare, Complex chi, double v_mic, Complex omega);

struct LocalFieldParams {
  double r_c = 0.0;
  Permittivity eps_host = Permittivity::vacuum();
};

struct LocalFieldPieces {
  Complex total;         // G_vac + C + factor^2 G1
  Complex c_term;        // C(eps, R_C, omega)
  Complex vac_term;      // i omega / (6 pi c); the divergent real part is dropped
  Complex screened_g1;   // (3 eps / (2 eps + 1))^2 G1
  bool size_warning = false;  // R_C |sqrt(eps)| omega / c > 0.3
};

/// Real-cavity correction term
///   C = k/(6pi) { 3(eps-1)/(2eps+1) (k R_C)^-3 + 9(eps-1)(4eps+1)/(5(2eps+1)^2) (k R_C)^-1
///                 + i [9 eps^(5/2)/(2eps+1)^2 - 1] },  k = omega/c.
Complex local_field_c_term(Complex eps, double r_c, double omega);

/// Throws SingularError when 2 eps + 1 = 0.
LocalFieldPieces local_field_correct(Complex g1, Complex eps, double r_c, double omega);
LocalFieldPieces local_field_correct(Complex g1, const LocalFieldParams& lf, double omega);

/// J = omega^2 / (pi eps0 c^2) Im G.
double spectral_density(double im_g, double omega);

struct SpectralSplit {
  double j_total = 0.0;
  double j_sc = 0.0;
  double j_0 = 0.0;
};

/// J_sc from the screened scattering part, J_0 = J - J_sc.
SpectralSplit split_bulk_scattering(const LocalFieldPieces& p, double omega);

/// Single-mode cavity dressed by N emitters of the given model.
class QerraCavity {
 public:
  QerraCavity(LorentzianMode mode, EmitterModel model, double count);

  Complex bare(Complex omega) const { return single_mode_green(mode_, omega); }
  /// N alpha(omega) / eps0
  Complex susceptibility_volume(Complex omega) const;
  Complex dressed(Complex omega) const;
  /// 1 / G_dressed, analytic in omega away from the emitter poles.
  Complex inverse_dressed(Complex omega) const;

  const LorentzianMode& mode() const { return mode_; }
  const EmitterModel& model() const { return model_; }
  double count() const { return count_; }

 private:
  LorentzianMode mode_;
  EmitterModel model_;
  double count_;
};

/// Zero of 1/G_dressed near `guess` (Muller's method).
Complex dressed_pole(const QerraCavity& cav, Complex guess);

/// Residue of G_dressed at a simple pole: 1 / (d/domega (1/G)) by Ridders extrapolation.
Complex dressed_residue(const QerraCavity& cav, Complex pole);

}  // namespace polembed

#endif  // POLEMBED_EMBEDDING_HPP
