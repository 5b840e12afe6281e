#include "gthz/conductivity.hpp"

#include <cmath>
#include <numbers>

#include "gthz/error.hpp"

namespace gthz {

using C = PhysicalConstants;

GrapheneSheet::GrapheneSheet(double chemical_potential_ev, double relaxation_time_s,
                             double temperature_k)
    : chemical_potential_ev_(chemical_potential_ev),
      relaxation_time_s_(relaxation_time_s),
      temperature_k_(temperature_k) {
  require(temperature_k > 0.0 && std::isfinite(temperature_k), "temperature must be > 0");
  require(chemical_potential_ev >= 0.0 && std::isfinite(chemical_potential_ev),
          "chemical potential must be >= 0");
  require(relaxation_time_s > 0.0 && std::isfinite(relaxation_time_s),
          "relaxation time must be > 0");
}

namespace {

// ln(2 cosh x) without overflow: x + ln(1 + exp(-2x)) for x >= 0.
double log_two_cosh(double x) {
  x = std::abs(x);
  return x + std::log1p(std::exp(-2.0 * x));
}

}  // namespace

double drude_weight(const GrapheneSheet& sheet) {
  const double kt = C::boltzmann * sheet.temperature();
  const double prefactor = 2.0 * C::electron_charge * C::electron_charge /
                           (std::numbers::pi * C::reduced_planck) * (kt / C::reduced_planck);
  return prefactor * log_two_cosh(sheet.chemical_potential_joule() / (2.0 * kt));
}

Complex intraband_conductivity(const GrapheneSheet& sheet, double omega) {
  require(omega >= 0.0, "angular frequency must be >= 0");
  const double a = drude_weight(sheet);
  const double gamma = 1.0 / sheet.relaxation_time();
  const double denom = omega * omega + gamma * gamma;
  return {a * gamma / denom, a * omega / denom};
}

Complex surface_impedance(const GrapheneSheet& sheet, double omega) {
  const Complex sigma = intraband_conductivity(sheet, omega);
  if (std::abs(sigma) < 1e-30) {
    throw SolverError(SolverErrorKind::kDegenerateConductivity,
                      "sheet conductivity below 1e-30 S");
  }
  return 1.0 / sigma;
}

double chemical_potential_from_bias(double delta_voltage, double proportionality) {
  require(proportionality > 0.0, "bias proportionality must be > 0");
  return proportionality * std::sqrt(std::abs(delta_voltage));
}

}  // namespace gthz
