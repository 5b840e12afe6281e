#include "gthz/antenna.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "gthz/error.hpp"

namespace gthz {

void DipoleGeometry::validate() const {
  require(width > 0.0, "dipole width must be > 0");
  require(gap > 0.0 && gap < length, "dipole gap must satisfy 0 < G < L");
  require(substrate_permittivity >= 1.0, "substrate permittivity must be >= 1");
  require(end_correction >= 0.5 && end_correction <= 1.5, "end correction must be in [0.5, 1.5]");
}

double resonant_length(const LayeredStack& stack, double frequency_hz,
                       const SolverOptions& options) {
  require(frequency_hz > 0.0, "frequency must be > 0");
  return find_mode(stack, angular_frequency(frequency_hz), std::nullopt, options).resonant_length();
}

ResonancePrediction resonance_frequency(const DipoleGeometry& dipole, const GrapheneSheet& sheet,
                                        const SolverOptions& options,
                                        const ResonanceSearchBand& band) {
  dipole.validate();
  require(band.lower > 0.0 && band.upper > band.lower && band.samples >= 2,
          "invalid resonance search band");

  const auto stack = LayeredStack::preset(StackPreset::kG, sheet,
                                          {.lim_permittivity = dipole.substrate_permittivity});
  const double electrical_length = dipole.end_correction * dipole.length;

  auto mode_at = [&](double f) -> std::optional<ModeSolution> {
    try {
      return find_mode(stack, angular_frequency(f), std::nullopt, options);
    } catch (const SolverError&) {
      return std::nullopt;
    }
  };
  auto mismatch = [&](const ModeSolution& m) {
    return m.q.real() * electrical_length - std::numbers::pi;
  };

  std::optional<double> bracket_lo, bracket_hi;
  std::optional<ModeSolution> previous;
  double previous_f = 0.0;
  bool lower_edge_bound = true;
  for (int i = 0; i < band.samples; ++i) {
    const double f =
        band.lower * std::pow(band.upper / band.lower, double(i) / (band.samples - 1));
    const auto mode = mode_at(f);
    if (!mode) {
      if (i == 0) lower_edge_bound = false;
      previous.reset();
      continue;
    }
    if (previous && mismatch(*previous) < 0.0 && mismatch(*mode) >= 0.0) {
      bracket_lo = previous_f;
      bracket_hi = f;
      break;
    }
    previous = mode;
    previous_f = f;
  }
  if (!bracket_lo) {
    throw SolverError(SolverErrorKind::kNoResonanceInBand,
                      lower_edge_bound ? "no half-wavelength resonance in band"
                                       : "no resonance in band (lower band edge not bound)");
  }

  auto g = [&](double f) {
    const auto mode = mode_at(f);
    if (!mode) throw SolverError(SolverErrorKind::kNoConvergence, "mode lost inside bracket");
    return mismatch(*mode);
  };
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      g, *bracket_lo, *bracket_hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  const double f_lo = lo, f_hi = hi;
  const double f_res = std::abs(g(f_lo)) <= std::abs(g(f_hi)) ? f_lo : f_hi;

  ResonancePrediction out;
  out.resonance_frequency = f_res;
  out.mode = *mode_at(f_res);
  out.metal_reference = metal_dipole_resonance(dipole.length, dipole.substrate_permittivity);
  out.miniaturization = out.metal_reference / f_res;
  out.efficiency_proxy = efficiency_proxy(out.mode);
  out.lower_band_edge_bound = lower_edge_bound;
  return out;
}

double metal_dipole_resonance(double length, double substrate_permittivity) {
  require(length > 0.0, "dipole length must be > 0");
  require(substrate_permittivity >= 1.0, "substrate permittivity must be >= 1");
  const double eps_eff = 0.5 * (substrate_permittivity + 1.0);
  return PhysicalConstants::light_speed / (2.0 * length * std::sqrt(eps_eff));
}

double miniaturization_factor(const ResonancePrediction& prediction) {
  require(prediction.resonance_frequency > 0.0, "resonance frequency must be > 0");
  return prediction.metal_reference / prediction.resonance_frequency;
}

double efficiency_proxy(const ModeSolution& mode) {
  const double fom = mode.normalized_propagation_length();
  return fom / (fom + 1.0);
}

}  // namespace gthz
