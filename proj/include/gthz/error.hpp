#ifndef GTHZ_ERROR_HPP
#define GTHZ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gthz {

enum class SolverErrorKind {
  kNoConvergence,
  kNonBoundMode,
  kBranchCut,
  kNoResonanceInBand,
  kDegenerateConductivity,
};

std::string_view to_string(SolverErrorKind kind);

// Numerical failure of a solve. Sweeps catch these and record them per row;
// precondition violations use std::invalid_argument instead.
class SolverError : public std::runtime_error {
 public:
  SolverError(SolverErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  SolverErrorKind kind() const noexcept { return kind_; }

 private:
  SolverErrorKind kind_;
};

inline void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace gthz

#endif  // GTHZ_ERROR_HPP
