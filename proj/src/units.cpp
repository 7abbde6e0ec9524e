#include "polembed/units.hpp"

#include <string>

#include "polembed/errors.hpp"

namespace polembed {

namespace {

using namespace constants;

// Scale factor s such that internal = s * value.
double scale_to_internal(Unit u) {
  switch (u) {
    case Unit::electron_volt: return 1.0 / hartree_ev;
    case Unit::hartree: return 1.0;
    case Unit::internal_energy: return 1.0;
    case Unit::nanometer: return 1.0 / bohr_nm;
    case Unit::bohr: return 1.0;
    case Unit::internal_length: return 1.0;
    case Unit::debye: return debye_au;
    case Unit::atomic_dipole: return 1.0;
    case Unit::rad_per_second: return atomic_time_s;
    case Unit::two_pi_thz: return 2.0 * pi * 1.0e12 * atomic_time_s;
    case Unit::two_pi_phz: return 2.0 * pi * 1.0e15 * atomic_time_s;
    case Unit::internal_frequency: return 1.0;
  }
  throw InvalidArgument("unknown unit tag");
}

}  // namespace

Dimension dimension_of(Unit u) {
  switch (u) {
    case Unit::electron_volt:
    case Unit::hartree:
    case Unit::internal_energy:
      return Dimension::energy;
    case Unit::nanometer:
    case Unit::bohr:
    case Unit::internal_length:
      return Dimension::length;
    case Unit::debye:
    case Unit::atomic_dipole:
      return Dimension::dipole;
    case Unit::rad_per_second:
    case Unit::two_pi_thz:
    case Unit::two_pi_phz:
    case Unit::internal_frequency:
      return Dimension::frequency;
  }
  throw InvalidArgument("unknown unit tag");
}

std::string_view unit_name(Unit u) {
  switch (u) {
    case Unit::electron_volt: return "eV";
    case Unit::hartree: return "Hartree";
    case Unit::internal_energy: return "internal energy";
    case Unit::nanometer: return "nm";
    case Unit::bohr: return "Bohr";
    case Unit::internal_length: return "internal length";
    case Unit::debye: return "Debye";
    case Unit::atomic_dipole: return "e*a0";
    case Unit::rad_per_second: return "rad/s";
    case Unit::two_pi_thz: return "2pi*THz";
    case Unit::two_pi_phz: return "2pi*PHz";
    case Unit::internal_frequency: return "internal frequency";
  }
  return "?";
}

Quantity convert(const Quantity& q, Unit target) {
  if (q.unit == target) return q;
  if (dimension_of(q.unit) != dimension_of(target)) {
    throw DimensionError("cannot convert " + std::string(unit_name(q.unit)) + " to " +
                         std::string(unit_name(target)));
  }
  return {q.value * scale_to_internal(q.unit) / scale_to_internal(target), target};
}

double to_internal(double value, Unit from) { return value * scale_to_internal(from); }

double from_internal(double value, Unit to) { return value / scale_to_internal(to); }

double photon_wavelength(double energy) {
  if (!(energy > 0.0)) throw InvalidArgument("photon energy must be positive");
  return 2.0 * pi * hbar * c / energy;
}

double photon_energy(double wavelength) {
  if (!(wavelength > 0.0)) throw InvalidArgument("wavelength must be positive");
  return 2.0 * pi * hbar * c / wavelength;
}

double density_per_nm3(double value) { return value * bohr_nm * bohr_nm * bohr_nm; }

double volume_nm3(double value) { return value / (bohr_nm * bohr_nm * bohr_nm); }

}  // namespace polembed
