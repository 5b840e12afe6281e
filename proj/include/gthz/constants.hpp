#ifndef GTHZ_CONSTANTS_HPP
#define GTHZ_CONSTANTS_HPP

#include <numbers>

namespace gthz {

// SI values (CODATA 2018). mu0 and eta0 are derived from eps0 and c0 so the
// three stay mutually consistent to rounding.
struct PhysicalConstants {
  static constexpr double electron_charge = 1.602176634e-19;        // C
  static constexpr double planck = 6.62607015e-34;                  // J s
  static constexpr double reduced_planck = planck / (2.0 * std::numbers::pi);
  static constexpr double boltzmann = 1.380649e-23;                 // J/K
  static constexpr double vacuum_permittivity = 8.8541878128e-12;   // F/m
  static constexpr double light_speed = 299792458.0;                // m/s
  static constexpr double vacuum_permeability =
      1.0 / (vacuum_permittivity * light_speed * light_speed);      // H/m
  static constexpr double free_space_impedance =
      1.0 / (vacuum_permittivity * light_speed);                    // Ohm
};

inline constexpr double kElectronVolt = PhysicalConstants::electron_charge;  // J per eV
inline constexpr double kDefaultTemperature = 300.0;                         // K

constexpr double angular_frequency(double frequency_hz) {
  return 2.0 * std::numbers::pi * frequency_hz;
}

constexpr double free_space_wavenumber(double omega) {
  return omega / PhysicalConstants::light_speed;
}

}  // namespace gthz

#endif  // GTHZ_CONSTANTS_HPP
