#ifndef POLEMBED_QUADRATURE_HPP
#define POLEMBED_QUADRATURE_HPP

// Globally adaptive Gauss-Kronrod (7/15) quadrature for complex integrands
// on a finite interval split at given breakpoints.

#include <functional>
#include <vector>

#include "polembed/units.hpp"

namespace polembed {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  int max_subdivisions = 4000;
  double fill_offset = 1e-6;  // added to Im eps_fill (guided-mode pole avoidance)
};

/// Throws InvalidArgument unless rel_tol in (0, 1e-3], max_subdivisions >= 1, fill_offset >= 0.
void validate(const QuadratureSettings& q);

struct IntegrationResult {
  Complex value;
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

/// Integrate f over [points.front(), points.back()], with every interior entry
/// of `points` (sorted ascending) used as an initial subdivision. Stops when
/// the summed error estimate is below max(abs_tol, rel_tol |value|). Throws
/// QuadratureError carrying the estimate when the interval budget runs out.
IntegrationResult integrate_adaptive(const std::function<Complex(double)>& f,
                                     const std::vector<double>& points, double rel_tol,
                                     double abs_tol, int max_intervals);

}  // namespace polembed

#endif  // POLEMBED_QUADRATURE_HPP
