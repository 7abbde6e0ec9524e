#include "polembed/roots.hpp"

#include <cmath>

#include "polembed/errors.hpp"

namespace polembed {

Complex muller(const std::function<Complex(Complex)>& f, Complex x0, Complex x1, Complex x2,
               double tol, int max_iter) {
  Complex f0 = f(x0), f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter; ++it) {
    if (f2 == 0.0) return x2;
    const Complex h1 = x1 - x0, h2 = x2 - x1;
    const Complex d1 = (f1 - f0) / h1, d2 = (f2 - f1) / h2;
    const Complex a = (d2 - d1) / (h2 + h1);
    const Complex b = a * h2 + d2;
    const Complex disc = std::sqrt(b * b - 4.0 * f2 * a);
    const Complex den = std::abs(b + disc) > std::abs(b - disc) ? b + disc : b - disc;
    const Complex step = den == 0.0 ? Complex(1e-3 * (1.0 + std::abs(x2))) : -2.0 * f2 / den;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    x2 += step;
    f2 = f(x2);
    if (std::abs(step) <= tol * std::max(1.0, std::abs(x2))) return x2;
  }
  throw ConvergenceError("muller: no convergence after " + std::to_string(max_iter) + " steps");
}

}  // namespace polembed
