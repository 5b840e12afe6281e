#ifndef GTHZ_ANTENNA_HPP
#define GTHZ_ANTENNA_HPP

#include "gthz/conductivity.hpp"
#include "gthz/mode_solver.hpp"
#include "gthz/stack.hpp"

namespace gthz {

/// Planar graphene dipole: two arms of total length L (gap included in L but
/// not in the resonance condition), width W, on a semi-infinite substrate.
struct DipoleGeometry {
  double width = 8e-6;         // m
  double length = 20e-6;       // m, total
  double gap = 3e-6;           // m
  double substrate_permittivity = 3.8;
  double end_correction = 1.0;  // alpha in Re q * alpha L = pi

  void validate() const;
};

struct ResonancePrediction {
  double resonance_frequency = 0.0;  // Hz
  ModeSolution mode;                 // plasmon at resonance
  double metal_reference = 0.0;      // Hz
  double miniaturization = 0.0;      // metal_reference / resonance_frequency
  double efficiency_proxy = 0.0;
  bool lower_band_edge_bound = true;
};

struct ResonanceSearchBand {
  double lower = 0.1e12;  // Hz
  double upper = 10e12;   // Hz
  int samples = 200;
};

/// Half plasmon wavelength pi / Re q at frequency f.
double resonant_length(const LayeredStack& stack, double frequency_hz,
                       const SolverOptions& options = {});

/// Smallest frequency in the band with Re q(f) alpha L = pi for the sheet on
/// the dipole substrate (vacuum above). The band is sampled on a log grid and
/// the first upward sign change is refined by TOMS 748.
///
/// Throws SolverError(kNoResonanceInBand) when no bracket exists.
ResonancePrediction resonance_frequency(const DipoleGeometry& dipole, const GrapheneSheet& sheet,
                                        const SolverOptions& options = {},
                                        const ResonanceSearchBand& band = {});

/// c0 / (2 L sqrt(eps_eff)), eps_eff = (eps_r + 1) / 2.
double metal_dipole_resonance(double length, double substrate_permittivity);

double miniaturization_factor(const ResonancePrediction& prediction);

/// FOM / (FOM + 1) with FOM = L_p / lambda_spp. Only meaningful for ordering
/// designs; it is not a radiation efficiency.
double efficiency_proxy(const ModeSolution& mode);

}  // namespace gthz

#endif  // GTHZ_ANTENNA_HPP
