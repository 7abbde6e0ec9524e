#ifndef POLEMBED_ROOTS_HPP
#define POLEMBED_ROOTS_HPP

#include <functional>

#include "polembed/units.hpp"

namespace polembed {

/// Muller's method for a zero of an analytic function from three starting
/// points. Throws ConvergenceError after max_iter steps.
Complex muller(const std::function<Complex(Complex)>& f, Complex x0, Complex x1, Complex x2,
               double tol = 1e-14, int max_iter = 200);

}  // namespace polembed

#endif  // POLEMBED_ROOTS_HPP
