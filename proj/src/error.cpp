#include "gthz/error.hpp"

namespace gthz {

std::string_view to_string(SolverErrorKind kind) {
  switch (kind) {
    case SolverErrorKind::kNoConvergence: return "no-convergence";
    case SolverErrorKind::kNonBoundMode: return "non-bound-mode";
    case SolverErrorKind::kBranchCut: return "branch-cut";
    case SolverErrorKind::kNoResonanceInBand: return "no-resonance-in-band";
    case SolverErrorKind::kDegenerateConductivity: return "degenerate-conductivity";
  }
  return "unknown";
}

}  // namespace gthz
