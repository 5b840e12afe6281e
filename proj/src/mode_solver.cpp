#include "gthz/mode_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gthz/error.hpp"
#include "gthz/root_finding.hpp"

namespace gthz {

namespace {

using C = PhysicalConstants;
constexpr Complex kI{0.0, 1.0};

Complex sheet_term(const GrapheneSheet& sheet, double omega) {
  return kI * intraband_conductivity(sheet, omega) / (omega * C::vacuum_permittivity);
}

// Principal square root: Re kappa >= 0, i.e. decay away from the stack.
Complex decay_constant(Complex q, double eps, double k0) { return std::sqrt(q * q - eps * k0 * k0); }

// Admittance after crossing a film of thickness d upward, given the value y
// below it: (y + (eps/kappa) t) / (1 + y (kappa/eps) t) with t = tanh(kappa d).
// Even in kappa, so the branch of an inner layer does not matter.
Complex through_film(Complex y, double eps, Complex kappa, double d) {
  const Complex z = kappa * d;
  Complex t_over_kappa;
  Complex kappa_t;
  if (std::abs(z) < 1e-4) {
    t_over_kappa = d * (1.0 - z * z / 3.0);
    kappa_t = kappa * kappa * t_over_kappa;
  } else {
    const Complex e = std::exp(-2.0 * z);
    const Complex t = (1.0 - e) / (1.0 + e);
    t_over_kappa = t / kappa;
    kappa_t = kappa * t;
  }
  return (y + eps * t_over_kappa) / (1.0 + y * kappa_t / eps);
}

double residual_ratio(const DispersionResidual& r) {
  return r.scale > 0.0 ? std::abs(r.value) / r.scale : std::abs(r.value);
}

ModeSolution solve_from(const LayeredStack& stack, double omega, Complex seed,
                        const SolverOptions& options) {
  auto f = [&](Complex q) { return dispersion_residual(stack, q, omega).value; };
  const RootResult root =
      muller(f, seed, {.relative_tolerance = options.tolerance,
                       .max_iterations = options.max_iterations,
                       .residual_floor = 0.0});
  if (!root.converged) {
    throw SolverError(SolverErrorKind::kNoConvergence,
                      "mode search did not converge in " + std::to_string(root.iterations) +
                          " iterations");
  }
  const auto residual = dispersion_residual(stack, root.root, omega);
  if (residual.near_branch_cut) {
    throw SolverError(SolverErrorKind::kBranchCut, "root lies on a cladding branch point");
  }
  const double ratio = residual_ratio(residual);
  if (!(ratio < 1e-10)) {
    throw SolverError(SolverErrorKind::kNoConvergence, "residual above 1e-10 of term scale");
  }
  const double k0 = free_space_wavenumber(omega);
  const Complex q = root.root;
  if (!(q.real() > k0 * stack.max_cladding_index()) || q.imag() < -1e-12 * std::abs(q)) {
    throw SolverError(SolverErrorKind::kNonBoundMode, "root is not a bound mode (leaky/invalid)");
  }
  return {omega, q, ratio};
}

// Candidate seeds for modes close to the light lines: local minima of |D|
// along the real q axis between the cladding light line and well beyond the
// quasi-static plasmon.
std::vector<Complex> real_axis_seeds(const LayeredStack& stack, double omega, Complex plasmon) {
  constexpr int kSamples = 2000;
  const double k0 = free_space_wavenumber(omega);
  const double n_lo = stack.max_cladding_index();
  const double n_hi =
      std::max({1.5 * plasmon.real() / k0, 2.0 * stack.max_layer_index(), 1.01 * n_lo});
  const double u_min = 1e-6 * n_lo;
  const double u_max = n_hi - n_lo;

  std::vector<double> n(kSamples);
  std::vector<double> magnitude(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    n[i] = n_lo + u_min * std::pow(u_max / u_min, double(i) / (kSamples - 1));
    magnitude[i] = std::abs(dispersion_residual(stack, Complex(n[i] * k0, 0.0), omega).value);
  }
  std::vector<Complex> seeds;
  for (int i = 1; i + 1 < kSamples; ++i) {
    if (magnitude[i] < magnitude[i - 1] && magnitude[i] < magnitude[i + 1]) {
      seeds.emplace_back(n[i] * k0, 0.0);
    }
  }
  return seeds;
}

}  // namespace

DispersionResidual dispersion_residual(const LayeredStack& stack, Complex q, double omega) {
  require(omega > 0.0, "angular frequency must be > 0");
  const double k0 = free_space_wavenumber(omega);
  const auto& layers = stack.layers();
  const auto& sheets = stack.sheets();

  DispersionResidual out;
  auto cladding = [&](double eps) {
    const Complex arg = q * q - eps * k0 * k0;
    if (std::abs(arg) < 1e-12 * k0 * k0) out.near_branch_cut = true;
    return eps / std::sqrt(arg);
  };

  Complex y = cladding(layers.back().relative_permittivity);
  out.scale = std::abs(y);
  for (std::size_t j = layers.size() - 1; j-- > 0;) {
    if (auto it = sheets.find(j); it != sheets.end()) {
      const Complex term = sheet_term(it->second, omega);
      out.scale = std::max(out.scale, std::abs(term));
      y += term;
    }
    if (j == 0) break;
    const auto& layer = layers[j];
    const double eps = layer.relative_permittivity;
    y = through_film(y, eps, decay_constant(q, eps, k0), *layer.thickness);
    out.scale = std::max(out.scale, std::abs(y));
  }
  const Complex top = cladding(layers.front().relative_permittivity);
  out.scale = std::max(out.scale, std::abs(top));
  out.value = y + top;
  return out;
}

Complex two_half_space_residual(double eps_top, double eps_bottom, Complex sigma, Complex q,
                                double omega) {
  const double k0 = free_space_wavenumber(omega);
  return eps_top / std::sqrt(q * q - eps_top * k0 * k0) +
         eps_bottom / std::sqrt(q * q - eps_bottom * k0 * k0) +
         kI * sigma / (omega * C::vacuum_permittivity);
}

Complex symmetric_sheet_wavevector(double eps, Complex sigma, double omega) {
  const double k0 = free_space_wavenumber(omega);
  const Complex kappa = 2.0 * kI * eps * omega * C::vacuum_permittivity / sigma;
  return std::sqrt(kappa * kappa + eps * k0 * k0);
}

Complex quasi_static_seed(const LayeredStack& stack, double omega) {
  const auto& [index, sheet] = *stack.sheets().begin();
  const double eps_sum = stack.layers()[index].relative_permittivity +
                         stack.layers()[index + 1].relative_permittivity;
  return kI * eps_sum * omega * C::vacuum_permittivity / intraband_conductivity(sheet, omega);
}

double ModeSolution::frequency() const { return omega / (2.0 * std::numbers::pi); }
double ModeSolution::free_space_wavenumber() const { return gthz::free_space_wavenumber(omega); }
double ModeSolution::effective_index() const { return q.real() / free_space_wavenumber(); }
double ModeSolution::plasmon_wavelength() const { return 2.0 * std::numbers::pi / q.real(); }

double ModeSolution::propagation_length() const {
  if (q.imag() <= 0.0) return kPropagationLengthCap;
  return std::min(1.0 / (2.0 * q.imag()), kPropagationLengthCap);
}

double ModeSolution::normalized_propagation_length() const {
  return propagation_length() / plasmon_wavelength();
}

double ModeSolution::resonant_length() const { return std::numbers::pi / q.real(); }

ModeSolution find_mode(const LayeredStack& stack, double omega, std::optional<Complex> initial_guess,
                       const SolverOptions& options) {
  require(omega > 0.0, "angular frequency must be > 0");
  if (initial_guess) return solve_from(stack, omega, *initial_guess, options);

  const Complex seed = quasi_static_seed(stack, omega);
  if (stack.layers().size() == 2) {
    // A single interface carries one TM plasmon; the light-line scan is only
    // needed when the quasi-static estimate is too crude to converge.
    try {
      return solve_from(stack, omega, seed, options);
    } catch (const SolverError& e) {
      if (e.kind() != SolverErrorKind::kNoConvergence &&
          e.kind() != SolverErrorKind::kNonBoundMode) {
        throw;
      }
      for (const Complex s : real_axis_seeds(stack, omega, seed)) {
        try {
          return solve_from(stack, omega, s, options);
        } catch (const SolverError&) {
        }
      }
      // Embedding the sheet symmetrically in the denser cladding gives an
      // upper estimate of Re q; below that light line nothing can be bound.
      const double eps_max = std::max(stack.top_permittivity(), stack.bottom_permittivity());
      const auto& sheet = stack.sheets().begin()->second;
      const Complex dense = symmetric_sheet_wavevector(
          eps_max, intraband_conductivity(sheet, omega), omega);
      if (dense.real() <= free_space_wavenumber(omega) * stack.max_cladding_index()) {
        throw SolverError(SolverErrorKind::kNonBoundMode,
                          "plasmon lies below the cladding light line");
      }
      throw;
    }
  }

  std::vector<ModeSolution> found;
  std::optional<SolverError> first_error;
  auto attempt = [&](Complex start) {
    try {
      found.push_back(solve_from(stack, omega, start, options));
    } catch (const SolverError& e) {
      if (!first_error) first_error = e;
    }
  };
  attempt(seed);
  for (const Complex s : real_axis_seeds(stack, omega, seed)) attempt(s);
  if (found.empty()) {
    throw first_error.value_or(
        SolverError(SolverErrorKind::kNoConvergence, "no bound mode found"));
  }
  return *std::min_element(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.q.real() < b.q.real();
  });
}

std::vector<TracePoint> trace_dispersion(const LayeredStack& stack,
                                         std::span<const double> frequencies_hz,
                                         const SolverOptions& options) {
  require(!frequencies_hz.empty(), "frequency grid is empty");
  for (std::size_t i = 0; i < frequencies_hz.size(); ++i) {
    require(frequencies_hz[i] > 0.0, "frequencies must be > 0");
    if (i > 0) require(frequencies_hz[i] > frequencies_hz[i - 1], "frequency grid must increase");
  }

  std::vector<TracePoint> trace;
  trace.reserve(frequencies_hz.size());
  std::optional<Complex> previous;
  for (const double f : frequencies_hz) {
    TracePoint point;
    point.frequency = f;
    try {
      point.mode = find_mode(stack, angular_frequency(f), previous, options);
      previous = point.mode->q;
    } catch (const SolverError& e) {
      point.status = std::string("failed:") + std::string(to_string(e.kind()));
    }
    trace.push_back(std::move(point));
  }
  return trace;
}

std::vector<StackMetricsRow> stack_metrics_sweep(const LayeredStack& stack, double frequency_hz,
                                                 std::span<const double> chemical_potentials_ev,
                                                 const SolverOptions& options) {
  require(frequency_hz > 0.0, "frequency must be > 0");
  std::vector<StackMetricsRow> rows;
  rows.reserve(chemical_potentials_ev.size());
  for (const double ev : chemical_potentials_ev) {
    StackMetricsRow row;
    row.chemical_potential_ev = ev;
    try {
      row.mode = find_mode(stack.with_chemical_potential(ev), angular_frequency(frequency_hz),
                           std::nullopt, options);
    } catch (const SolverError& e) {
      row.status = std::string("failed:") + std::string(to_string(e.kind()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gthz
