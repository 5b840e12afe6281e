#include "gthz/scenario.hpp"

#include <cmath>
#include <sstream>

#include "gthz/cli/result_table.hpp"
#include "gthz/constants.hpp"
#include "gthz/error.hpp"

namespace gthz {

std::string_view to_string(ScenarioName name) {
  switch (name) {
    case ScenarioName::kWNSN: return "WNSN";
    case ScenarioName::kSDM: return "SDM";
    case ScenarioName::kWNoC: return "WNoC";
  }
  return "unknown";
}

const std::array<ScenarioRequirements, 3>& builtin_scenarios() {
  // 1 um^2 = 1e-12 m^2, 1 mm^2 = 1e-6 m^2, 1 cm = 1e-2 m, 1 Gbps = 1e9 bit/s.
  static const std::array<ScenarioRequirements, 3> table{{
      {ScenarioName::kWNSN, {1e-12, 1e-10}, {1e-3, 1.0}, {1e6, 1e8}},
      {ScenarioName::kSDM, {1e-8, 1e-4}, {1e-3, 1.0}, {1e7, 1e9}},
      {ScenarioName::kWNoC, {1e-8, 1e-6}, {1e-3, 1e-1}, {1e10, 1e11}},
  }};
  return table;
}

FeasibilityReport fits_footprint(double resonant_length, double width,
                                 const ScenarioRequirements& scenario, double budget_fraction) {
  require(resonant_length > 0.0 && width > 0.0, "antenna dimensions must be > 0");
  require(budget_fraction > 0.0 && budget_fraction <= 1.0, "budget fraction must be in (0, 1]");

  FeasibilityReport report;
  report.scenario = scenario.name;
  report.footprint = resonant_length * width;
  const double allowed = budget_fraction * scenario.node_size.max;
  report.fits = report.footprint <= allowed;
  report.margin = std::sqrt(allowed / report.footprint);

  std::ostringstream notes;
  notes << "tx range " << scenario.tx_range.min << "-" << scenario.tx_range.max
        << " m; data rate " << scenario.data_rate.min << "-" << scenario.data_rate.max
        << " bit/s (not evaluated)";
  report.notes = notes.str();
  return report;
}

double sdm_cell_size(double frequency_hz) {
  require(frequency_hz > 0.0, "frequency must be > 0");
  return PhysicalConstants::light_speed / frequency_hz / 10.0;
}

std::string scenarios_csv() {
  cli::ResultTable table({
      {"scenario", "text", cli::CellKind::kText},
      {"node_size_min", "m^2"},
      {"node_size_max", "m^2"},
      {"tx_range_min", "m"},
      {"tx_range_max", "m"},
      {"data_rate_min", "bit/s"},
      {"data_rate_max", "bit/s"},
  });
  for (const auto& s : builtin_scenarios()) {
    table.add_row({std::string(to_string(s.name)), s.node_size.min, s.node_size.max,
                   s.tx_range.min, s.tx_range.max, s.data_rate.min, s.data_rate.max});
  }
  return cli::to_csv(table);
}

}  // namespace gthz
