#ifndef POLEMBED_UNITS_HPP
#define POLEMBED_UNITS_HPP

// Physical constants and unit conversions.
//
// The numerical core works in Hartree atomic units. hbar, eps0 and c are
// nevertheless kept as named constants so that formulas can be written with
// every factor in place, e.g. J = omega^2 / (pi eps0 c^2) Im G.
//
// Constant values are CODATA 2018.

#include <complex>
#include <numbers>
#include <string>
#include <string_view>

namespace polembed {

using Complex = std::complex<double>;

namespace constants {

inline constexpr double pi = std::numbers::pi;

// Internal (atomic) units.
inline constexpr double hbar = 1.0;
inline constexpr double eps0 = 1.0 / (4.0 * pi);
inline constexpr double c = 137.035999084;  // 1 / fine-structure constant

// SI reference values, exact or to full published precision.
inline constexpr double hartree_ev = 27.211386245988;
inline constexpr double bohr_m = 5.29177210903e-11;
inline constexpr double bohr_nm = 5.29177210903e-2;
inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double speed_of_light_si = 299792458.0;
inline constexpr double atomic_time_s = 2.4188843265857e-17;  // hbar / E_h
inline constexpr double hbar_ev_s = 6.582119569e-16;

// 1 D = 1e-21 / c  C m; atomic dipole unit is e a0.
inline constexpr double debye_au =
    1.0e-21 / speed_of_light_si / (elementary_charge_c * bohr_m);

}  // namespace constants

enum class Dimension { energy, length, dipole, frequency };

enum class Unit {
  electron_volt,
  hartree,
  internal_energy,
  nanometer,
  bohr,
  internal_length,
  debye,
  atomic_dipole,
  rad_per_second,
  two_pi_thz,  // value f means omega = 2 pi f 1e12 rad/s
  two_pi_phz,  // value f means omega = 2 pi f 1e15 rad/s
  internal_frequency,
};

struct Quantity {
  double value = 0.0;
  Unit unit = Unit::internal_energy;
};

Dimension dimension_of(Unit u);
std::string_view unit_name(Unit u);

/// Express q in the target unit. Throws DimensionError if the units measure
/// different things.
Quantity convert(const Quantity& q, Unit target);

/// Shorthand for convert(...).value.
double to_internal(double value, Unit from);
double from_internal(double value, Unit to);

inline double ev(double value) { return to_internal(value, Unit::electron_volt); }
inline double nm(double value) { return to_internal(value, Unit::nanometer); }
inline double debye(double value) { return to_internal(value, Unit::debye); }

/// Vacuum photon wavelength lambda = 2 pi hbar c / E, both in internal units.
double photon_wavelength(double energy);
/// Inverse of photon_wavelength.
double photon_energy(double wavelength);

/// Number density given per nm^3, returned per bohr^3.
double density_per_nm3(double value);
double volume_nm3(double value);

}  // namespace polembed

#endif  // POLEMBED_UNITS_HPP
