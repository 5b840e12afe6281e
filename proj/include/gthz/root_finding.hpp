#ifndef GTHZ_ROOT_FINDING_HPP
#define GTHZ_ROOT_FINDING_HPP

#include <cmath>
#include <complex>

namespace gthz {

struct RootOptions {
  double relative_tolerance = 1e-12;
  int max_iterations = 100;
  // Absolute |f| below which an iterate is accepted outright.
  double residual_floor = 0.0;
};

struct RootResult {
  std::complex<double> root;
  std::complex<double> value;
  int iterations = 0;
  bool converged = false;
};

namespace detail {

template <class F>
std::complex<double> newton_polish(F& f, std::complex<double> x, std::complex<double>& fx) {
  for (int k = 0; k < 3; ++k) {
    const double h = 1e-7 * std::abs(x);
    if (h == 0.0) break;
    const auto slope = (f(x + h) - f(x - h)) / (2.0 * h);
    if (slope == 0.0) break;
    const auto candidate = x - fx / slope;
    const auto fc = f(candidate);
    if (!(std::abs(fc) < std::abs(fx))) break;
    x = candidate;
    fx = fc;
  }
  return x;
}

}  // namespace detail

/// Muller iteration for a root of an analytic function, started from three
/// points clustered around `seed`, followed by a central-difference Newton
/// polish that only accepts steps lowering |f|.
template <class F>
RootResult muller(F&& f, std::complex<double> seed, const RootOptions& options = {}) {
  using Cx = std::complex<double>;
  Cx x0 = seed * Cx(1.0 - 1e-3, 0.0);
  Cx x1 = seed * Cx(1.0, 1e-3);
  Cx x2 = seed;
  Cx f0 = f(x0), f1 = f(x1), f2 = f(x2);

  RootResult result;
  for (int it = 1; it <= options.max_iterations; ++it) {
    result.iterations = it;
    if (!std::isfinite(std::abs(f2))) break;
    if (std::abs(f2) <= options.residual_floor) {
      result.converged = true;
      break;
    }
    const Cx h1 = x1 - x0;
    const Cx h2 = x2 - x1;
    if (h1 == 0.0 || h2 == 0.0 || h1 + h2 == 0.0) break;
    const Cx d1 = (f1 - f0) / h1;
    const Cx d2 = (f2 - f1) / h2;
    const Cx a = (d2 - d1) / (h2 + h1);
    const Cx b = a * h2 + d2;
    const Cx disc = std::sqrt(b * b - 4.0 * a * f2);
    const Cx den = std::abs(b + disc) >= std::abs(b - disc) ? b + disc : b - disc;
    if (den == 0.0) break;
    const Cx dx = -2.0 * f2 / den;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    x2 = x2 + dx;
    f2 = f(x2);
    if (std::abs(dx) < options.relative_tolerance * std::abs(x2)) {
      result.converged = std::isfinite(std::abs(f2));
      break;
    }
  }
  if (result.converged) x2 = detail::newton_polish(f, x2, f2);
  result.root = x2;
  result.value = f2;
  return result;
}

}  // namespace gthz

#endif  // GTHZ_ROOT_FINDING_HPP
