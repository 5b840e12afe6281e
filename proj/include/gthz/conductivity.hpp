#ifndef GTHZ_CONDUCTIVITY_HPP
#define GTHZ_CONDUCTIVITY_HPP

#include <complex>

#include "gthz/constants.hpp"

namespace gthz {

using Complex = std::complex<double>;

/// Electronic state of a graphene monolayer.
///
/// The chemical potential is given in eV and the relaxation time in seconds.
/// The constructor rejects T <= 0, E_F < 0 and tau <= 0.
class GrapheneSheet {
 public:
  GrapheneSheet(double chemical_potential_ev, double relaxation_time_s,
                double temperature_k = kDefaultTemperature);

  double chemical_potential_ev() const { return chemical_potential_ev_; }
  double chemical_potential_joule() const { return chemical_potential_ev_ * kElectronVolt; }
  double relaxation_time() const { return relaxation_time_s_; }
  double temperature() const { return temperature_k_; }

  GrapheneSheet with_chemical_potential(double ev) const {
    return {ev, relaxation_time_s_, temperature_k_};
  }
  GrapheneSheet with_relaxation_time(double seconds) const {
    return {chemical_potential_ev_, seconds, temperature_k_};
  }

  friend bool operator==(const GrapheneSheet&, const GrapheneSheet&) = default;

 private:
  double chemical_potential_ev_;
  double relaxation_time_s_;
  double temperature_k_;
};

/// Drude weight A (S rad/s) of the intraband term, so that
/// sigma(omega) = A i / (omega + i / tau).
double drude_weight(const GrapheneSheet& sheet);

/// Intraband sheet conductivity in siemens, exp(-i omega t) convention:
/// Im sigma > 0 for omega > 0 (inductive). omega = 0 gives the DC value A tau.
Complex intraband_conductivity(const GrapheneSheet& sheet, double omega);

/// Sheet impedance Z = 1 / sigma in ohm per square. Throws SolverError
/// (kDegenerateConductivity) when |sigma| < 1e-30 S.
Complex surface_impedance(const GrapheneSheet& sheet, double omega);

/// Shift of the chemical potential, k sqrt(|dV|), in eV. k is in eV/sqrt(V)
/// and has no default: it depends on the gate stack.
double chemical_potential_from_bias(double delta_voltage, double proportionality);

}  // namespace gthz

#endif  // GTHZ_CONDUCTIVITY_HPP
