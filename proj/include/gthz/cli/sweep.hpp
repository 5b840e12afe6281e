#ifndef GTHZ_CLI_SWEEP_HPP
#define GTHZ_CLI_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "gthz/cli/result_table.hpp"
#include "gthz/cli/sweep_spec.hpp"

namespace gthz::cli {

/// Runs every grid point (times every series value) in order. Solver and
/// input-combination failures become "failed:<reason>" rows; the table always
/// has grid size x series size rows.
ResultTable run_sweep(const SweepSpec& spec);

/// Column name of a parameter key, e.g. "frequency_hz" -> "frequency".
std::string column_for_parameter(std::string_view key);

/// x column, y columns and series column used for plot output.
struct PlotSelection {
  std::string x;
  std::vector<std::string> y;
  std::optional<std::string> series;
};
PlotSelection plot_selection(const SweepSpec& spec);

}  // namespace gthz::cli

#endif  // GTHZ_CLI_SWEEP_HPP
