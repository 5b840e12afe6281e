#include "gthz/cli/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gthz/antenna.hpp"
#include "gthz/conductivity.hpp"
#include "gthz/error.hpp"
#include "gthz/mode_solver.hpp"
#include "gthz/scenario.hpp"

namespace gthz::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Params = std::map<std::string, double>;

std::vector<Column> output_columns(SweepTarget target) {
  switch (target) {
    case SweepTarget::kConductivity:
      return {{"re_sigma", "S"},          {"im_sigma", "S"},          {"neg_im_sigma", "S"},
              {"abs_sigma", "S"},         {"re_impedance", "Ohm"},    {"im_impedance", "Ohm"}};
    case SweepTarget::kDispersion:
      return {{"re_q", "1/m"},
              {"im_q", "1/m"},
              {"effective_index", "1"},
              {"plasmon_wavelength", "m"},
              {"propagation_length", "m"},
              {"normalized_propagation_length", "1"},
              {"resonant_length", "m"},
              {"residual", "1"}};
    case SweepTarget::kStack:
      return {{"effective_index", "1"},
              {"normalized_propagation_length", "1"},
              {"resonant_length", "m"},
              {"re_q", "1/m"},
              {"im_q", "1/m"}};
    case SweepTarget::kAntenna:
      return {{"resonance_frequency", "Hz"},
              {"metal_resonance_frequency", "Hz"},
              {"miniaturization_factor", "1"},
              {"efficiency_proxy", "1"},
              {"effective_index", "1"},
              {"normalized_propagation_length", "1"}};
    case SweepTarget::kScenario: {
      std::vector<Column> cols{{"resonant_length", "m"},
                               {"footprint", "m^2"},
                               {"sdm_cell_size", "m"},
                               {"fits_sdm_cell", "1"}};
      for (const auto& s : builtin_scenarios()) {
        const std::string name(to_string(s.name));
        cols.push_back({"fits_" + name, "1"});
        cols.push_back({"margin_" + name, "1"});
      }
      return cols;
    }
  }
  return {};
}

GrapheneSheet sheet_from(const Params& p) {
  return {p.at("chemical_potential_ev"), p.at("relaxation_time_s"), p.at("temperature_k")};
}

LayeredStack stack_from(const Params& p, const std::string& preset_name) {
  StackPresetConfig cfg{.cover_permittivity = p.at("cover_permittivity"),
                        .lim_permittivity = p.at("substrate_permittivity"),
                        .him_permittivity = p.at("film_permittivity"),
                        .h1g_film_thickness = p.at("h1g_film_thickness_m"),
                        .h2g_film_thickness = p.at("h2g_film_thickness_m")};
  return LayeredStack::preset(*parse_stack_preset(preset_name), sheet_from(p), cfg);
}

std::vector<double> mode_outputs(SweepTarget target, const ModeSolution& m) {
  if (target == SweepTarget::kStack) {
    return {m.effective_index(), m.normalized_propagation_length(), m.resonant_length(),
            m.q.real(), m.q.imag()};
  }
  return {m.q.real(),
          m.q.imag(),
          m.effective_index(),
          m.plasmon_wavelength(),
          m.propagation_length(),
          m.normalized_propagation_length(),
          m.resonant_length(),
          m.residual};
}

std::vector<double> compute_point(const SweepSpec& spec, const Params& p,
                                  const std::optional<ModeSolution>& traced) {
  switch (spec.target) {
    case SweepTarget::kConductivity: {
      const auto sheet = sheet_from(p);
      const double omega = angular_frequency(p.at("frequency_hz"));
      const Complex sigma = intraband_conductivity(sheet, omega);
      const Complex z = surface_impedance(sheet, omega);
      return {sigma.real(), sigma.imag(), -sigma.imag(), std::abs(sigma), z.real(), z.imag()};
    }
    case SweepTarget::kDispersion:
    case SweepTarget::kStack: {
      if (traced) return mode_outputs(spec.target, *traced);
      const auto stack = stack_from(p, spec.text.at("stack"));
      return mode_outputs(spec.target,
                          find_mode(stack, angular_frequency(p.at("frequency_hz")), std::nullopt,
                                    spec.solver));
    }
    case SweepTarget::kAntenna: {
      const DipoleGeometry dipole{.width = p.at("width_m"),
                                  .length = p.at("length_m"),
                                  .gap = p.at("gap_m"),
                                  .substrate_permittivity = p.at("substrate_permittivity"),
                                  .end_correction = p.at("end_correction")};
      const auto r = resonance_frequency(dipole, sheet_from(p), spec.solver);
      return {r.resonance_frequency, r.metal_reference, miniaturization_factor(r),
              r.efficiency_proxy,    r.mode.effective_index(),
              r.mode.normalized_propagation_length()};
    }
    case SweepTarget::kScenario: {
      const double f = p.at("frequency_hz");
      const auto stack = stack_from(p, spec.text.at("stack"));
      const double l_res = resonant_length(stack, f, spec.solver);
      const double width = p.at("width_m");
      const double cell = sdm_cell_size(f);
      std::vector<double> out{l_res, l_res * width, cell, l_res <= cell ? 1.0 : 0.0};
      for (const auto& s : builtin_scenarios()) {
        const auto report = fits_footprint(l_res, width, s, p.at("budget_fraction"));
        out.push_back(report.fits ? 1.0 : 0.0);
        out.push_back(report.margin);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string column_for_parameter(std::string_view key) {
  for (auto t : {SweepTarget::kConductivity, SweepTarget::kDispersion, SweepTarget::kStack,
                 SweepTarget::kAntenna, SweepTarget::kScenario}) {
    for (const auto& info : target_parameters(t)) {
      if (info.key == key) return std::string(info.column);
    }
  }
  throw std::invalid_argument("unknown parameter '" + std::string(key) + "'");
}

ResultTable run_sweep(const SweepSpec& spec) {
  const auto inputs = target_parameters(spec.target);
  std::vector<Column> columns;
  for (const auto& info : inputs) {
    columns.push_back({std::string(info.column), std::string(info.unit),
                       info.unit == "text" ? CellKind::kText : CellKind::kNumber});
  }
  const auto outputs = output_columns(spec.target);
  columns.insert(columns.end(), outputs.begin(), outputs.end());
  ResultTable table(std::move(columns));

  const std::vector<double> series_values =
      spec.series ? spec.series->values : std::vector<double>{kNaN};
  const bool continuation =
      spec.target == SweepTarget::kDispersion && spec.variable.name == "frequency_hz";

  for (const double s : series_values) {
    Params base = spec.fixed;
    if (spec.series) base[spec.series->name] = s;

    std::vector<TracePoint> trace;
    std::optional<std::string> trace_error;
    if (continuation) {
      try {
        trace = trace_dispersion(stack_from(base, spec.text.at("stack")),
                                 spec.variable.values, spec.solver);
      } catch (const std::invalid_argument&) {
        trace_error = "failed:invalid-input";
      }
    }

    for (std::size_t i = 0; i < spec.variable.values.size(); ++i) {
      Params p = base;
      p[spec.variable.name] = spec.variable.values[i];

      std::vector<Cell> cells;
      for (const auto& info : inputs) {
        if (info.unit == "text") {
          cells.emplace_back(spec.text.at(std::string(info.key)));
        } else {
          cells.emplace_back(p.at(std::string(info.key)));
        }
      }
      std::string status = "ok";
      std::vector<double> values(outputs.size(), kNaN);
      try {
        if (trace_error) {
          status = *trace_error;
        } else if (continuation) {
          if (trace[i].ok()) {
            values = compute_point(spec, p, trace[i].mode);
          } else {
            status = trace[i].status;
          }
        } else {
          values = compute_point(spec, p, std::nullopt);
        }
      } catch (const SolverError& e) {
        status = "failed:" + std::string(to_string(e.kind()));
      } catch (const std::invalid_argument&) {
        status = "failed:invalid-input";
      }
      for (double v : values) cells.emplace_back(v);
      table.add_row(std::move(cells), std::move(status));
    }
  }
  return table;
}

PlotSelection plot_selection(const SweepSpec& spec) {
  PlotSelection sel;
  sel.x = column_for_parameter(spec.variable.name);
  if (spec.series) sel.series = column_for_parameter(spec.series->name);
  if (!spec.plot_y.empty()) {
    sel.y = spec.plot_y;
    return sel;
  }
  switch (spec.target) {
    case SweepTarget::kConductivity: sel.y = {"re_sigma", "neg_im_sigma"}; break;
    case SweepTarget::kDispersion: sel.y = {"effective_index", "normalized_propagation_length"}; break;
    case SweepTarget::kStack:
      sel.y = {"effective_index", "normalized_propagation_length", "resonant_length"};
      break;
    case SweepTarget::kAntenna:
      sel.y = {"resonance_frequency", "metal_resonance_frequency", "efficiency_proxy"};
      break;
    case SweepTarget::kScenario: sel.y = {"resonant_length", "sdm_cell_size", "margin_WNoC"}; break;
  }
  return sel;
}

}  // namespace gthz::cli
