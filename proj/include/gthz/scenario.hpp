#ifndef GTHZ_SCENARIO_HPP
#define GTHZ_SCENARIO_HPP

#include <array>
#include <string>
#include <string_view>

namespace gthz {

enum class ScenarioName { kWNSN, kSDM, kWNoC };

std::string_view to_string(ScenarioName name);

struct ValueRange {
  double min = 0.0;
  double max = 0.0;
};

// All ranges in SI: m^2, m, bit/s.
struct ScenarioRequirements {
  ScenarioName name;
  ValueRange node_size;
  ValueRange tx_range;
  ValueRange data_rate;
};

struct FeasibilityReport {
  ScenarioName scenario;
  double footprint = 0.0;  // m^2
  bool fits = false;
  double margin = 0.0;  // linear: sqrt(allowed area / footprint)
  std::string notes;
};

/// Wireless nanosensor networks, software-defined metamaterials and wireless
/// networks-on-chip.
const std::array<ScenarioRequirements, 3>& builtin_scenarios();

/// Bounding-rectangle check of a single radiating element against the node
/// size ceiling, of which `budget_fraction` (0, 1] is available to the antenna.
FeasibilityReport fits_footprint(double resonant_length, double width,
                                 const ScenarioRequirements& scenario,
                                 double budget_fraction = 1.0);

/// Metamaterial unit-cell scale, one tenth of the free-space wavelength.
double sdm_cell_size(double frequency_hz);

/// Scenario table as CSV in the same format as sweep output.
std::string scenarios_csv();

}  // namespace gthz

#endif  // GTHZ_SCENARIO_HPP
