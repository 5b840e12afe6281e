#ifndef GTHZ_MODE_SOLVER_HPP
#define GTHZ_MODE_SOLVER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gthz/conductivity.hpp"
#include "gthz/stack.hpp"

namespace gthz {

// L_p reported for modes whose attenuation is below double resolution.
inline constexpr double kPropagationLengthCap = 1e6;  // m

struct SolverOptions {
  double tolerance = 1e-12;  // relative step |dq|/|q|
  int max_iterations = 100;
};

/// TM bound-mode condition D(q, omega), normalised so that for a sheet
/// between two half-spaces
///   D = eps1/kappa1 + eps2/kappa2 + i sigma / (omega eps0),
/// kappa_i = sqrt(q^2 - eps_i k0^2) with Re kappa_i >= 0.
struct DispersionResidual {
  Complex value;
  double scale = 0.0;  // largest term magnitude entering the sum
  bool near_branch_cut = false;
};

/// Multilayer residual: the downward-looking TM admittance is carried from
/// the bottom cladding up through each film in tanh form, and each sheet adds
/// its current jump. The condition is closed at the topmost interface.
DispersionResidual dispersion_residual(const LayeredStack& stack, Complex q, double omega);

/// Direct two-half-space expression. Kept separate from the layer recursion so
/// the two can be checked against each other.
Complex two_half_space_residual(double eps_top, double eps_bottom, Complex sigma, Complex q,
                                double omega);

/// Exact root for a sheet with identical half-spaces on both sides:
/// kappa = 2 i eps omega eps0 / sigma, q = sqrt(kappa^2 + eps k0^2).
Complex symmetric_sheet_wavevector(double eps, Complex sigma, double omega);

/// Quasi-static estimate q0 = i (eps_above + eps_below) omega eps0 / sigma,
/// using the first sheet of the stack and its neighbouring layers.
Complex quasi_static_seed(const LayeredStack& stack, double omega);

struct ModeSolution {
  double omega = 0.0;
  Complex q;
  double residual = 0.0;  // |D| / scale

  double frequency() const;
  double free_space_wavenumber() const;
  double effective_index() const;
  double plasmon_wavelength() const;
  double propagation_length() const;
  /// L_p / lambda_spp.
  double normalized_propagation_length() const;
  /// Half plasmon wavelength, pi / Re q.
  double resonant_length() const;
};

/// Converges on a guided TM mode at `omega`.
///
/// With a guess, Muller iteration starts there. Without one, it starts from
/// the quasi-static seed; for stacks with inner films the real axis is
/// additionally scanned for lower modes and the bound mode with the smallest
/// Re q is returned. Throws SolverError on non-convergence or when the root is
/// not bound (Re q <= k0 n_clad or growing).
ModeSolution find_mode(const LayeredStack& stack, double omega,
                       std::optional<Complex> initial_guess = std::nullopt,
                       const SolverOptions& options = {});

struct TracePoint {
  double frequency = 0.0;  // Hz
  std::optional<ModeSolution> mode;
  std::string status = "ok";

  bool ok() const { return mode.has_value(); }
};

/// Frequency continuation: each point is seeded with the last converged root.
/// Failures are recorded per point and do not stop the trace.
std::vector<TracePoint> trace_dispersion(const LayeredStack& stack,
                                         std::span<const double> frequencies_hz,
                                         const SolverOptions& options = {});

struct StackMetricsRow {
  double chemical_potential_ev = 0.0;
  std::optional<ModeSolution> mode;
  std::string status = "ok";

  bool ok() const { return mode.has_value(); }
};

/// n_eff, L_p / lambda_spp and L_res of the fundamental mode at a fixed
/// frequency, with every sheet of the stack set to each chemical potential.
std::vector<StackMetricsRow> stack_metrics_sweep(const LayeredStack& stack, double frequency_hz,
                                                 std::span<const double> chemical_potentials_ev,
                                                 const SolverOptions& options = {});

}  // namespace gthz

#endif  // GTHZ_MODE_SOLVER_HPP
