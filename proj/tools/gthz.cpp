// Batch front-end: config-driven sweeps over conductivity, plasmon dispersion,
// stack metrics, dipole resonance and application footprints.
//
// Exit codes: 0 all rows ok, 2 some rows failed, 1 usage/config/I-O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gthz/cli/result_table.hpp"
#include "gthz/cli/sweep.hpp"
#include "gthz/cli/sweep_spec.hpp"
#include "gthz/scenario.hpp"
#include "gthz/stack.hpp"

namespace {

using namespace gthz;
using namespace gthz::cli;

struct Options {
  std::string config;
  std::string out;
  std::string format = "csv";
  std::optional<double> tolerance;
  std::optional<int> max_iter;
  bool quiet = false;
  std::vector<std::string> set;
  std::string vary;
  std::string series;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::string, std::string> split_assignment(const std::string& text, const char* flag) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError(std::string(flag) + " expects key=value, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

void write_output(const std::string& content, const std::optional<std::filesystem::path>& path) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path->string() + "' for writing");
  out << content;
  if (!out.flush()) throw std::runtime_error("write to '" + path->string() + "' failed");
}

int run_target(const Options& opt, std::optional<SweepTarget> forced) {
  auto doc = opt.config.empty() ? boost::property_tree::ptree{}
                                : read_config_document(read_file(opt.config));
  if (forced) {
    const auto declared = doc.get_optional<std::string>("sweep.target");
    if (declared && *declared != to_string(*forced)) {
      throw ConfigError("config target '" + *declared + "' does not match subcommand '" +
                        std::string(to_string(*forced)) + "'");
    }
    doc.put("sweep.target", std::string(to_string(*forced)));
  }
  for (const auto& assignment : opt.set) {
    const auto [key, value] = split_assignment(assignment, "--set");
    doc.put(boost::property_tree::ptree::path_type("parameters/" + key, '/'), value);
  }
  if (!opt.vary.empty()) {
    const auto [key, grid] = split_assignment(opt.vary, "--vary");
    doc.put("sweep.variable", key);
    doc.put("sweep.grid", grid);
  }
  if (!opt.series.empty()) {
    const auto [key, values] = split_assignment(opt.series, "--series");
    doc.put("sweep.series", key);
    doc.put("sweep.series_values", values);
  }
  if (opt.tolerance) doc.put("solver.tolerance", format_number(*opt.tolerance));
  if (opt.max_iter) doc.put("solver.max_iter", std::to_string(*opt.max_iter));

  SweepSpec spec = build_spec(doc);
  if (!opt.out.empty()) spec.output = opt.out;

  const ResultTable table = run_sweep(spec);
  if (opt.format == "plot") {
    const auto sel = plot_selection(spec);
    std::optional<std::string_view> series;
    if (sel.series) series = *sel.series;
    write_output(to_plotdata(table, sel.x, sel.y, series), spec.output);
  } else {
    write_output(to_csv(table), spec.output);
  }

  std::size_t failed = 0;
  for (const auto& row : table.rows()) failed += row.ok() ? 0 : 1;
  if (!opt.quiet) {
    std::cerr << to_string(spec.target) << ": " << table.rows().size() << " rows, " << failed
              << " failed" << (spec.output ? ", written to " + spec.output->string() : "") << "\n";
  }
  return failed == 0 ? 0 : 2;
}

std::string presets_csv() {
  const GrapheneSheet placeholder(0.2, 1e-12);
  ResultTable table({{"preset", "text", CellKind::kText},
                     {"layer", "1"},
                     {"relative_permittivity", "1"},
                     {"thickness", "m"},
                     {"sheet_on_bottom_interface", "1"}});
  for (auto preset : {StackPreset::kG, StackPreset::kH1G, StackPreset::kH2G}) {
    const auto stack = LayeredStack::preset(preset, placeholder);
    const auto& layers = stack.layers();
    for (std::size_t i = 0; i < layers.size(); ++i) {
      const double thickness = layers[i].thickness.value_or(std::numeric_limits<double>::infinity());
      const bool sheet = stack.sheets().contains(i);
      table.add_row({std::string(to_string(preset)), double(i), layers[i].relative_permittivity,
                     thickness, sheet ? 1.0 : 0.0});
    }
  }
  return to_csv(table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphene plasmonic terahertz antenna toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "Configuration file (INI)");
    sub->add_option("--out", opt.out, "Output path (default: stdout)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "plot"}));
    sub->add_option("--tolerance", opt.tolerance, "Root-finder relative tolerance");
    sub->add_option("--max-iter", opt.max_iter, "Root-finder iteration limit");
    sub->add_flag("--quiet", opt.quiet, "No summary on stderr");
  };

  std::vector<std::pair<CLI::App*, SweepTarget>> targets;
  for (auto [name, target, help] :
       {std::tuple{"conductivity", SweepTarget::kConductivity, "Sheet conductivity and impedance"},
        std::tuple{"dispersion", SweepTarget::kDispersion, "Plasmon mode versus a parameter"},
        std::tuple{"stack", SweepTarget::kStack, "n_eff, L_p/lambda and L_res of a stack"},
        std::tuple{"antenna", SweepTarget::kAntenna, "Dipole resonance and miniaturization"},
        std::tuple{"scenario", SweepTarget::kScenario, "Footprint checks against applications"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("--set", opt.set, "Fixed parameter key=value (repeatable)");
    sub->add_option("--vary", opt.vary, "Swept parameter key=grid");
    sub->add_option("--series", opt.series, "Curve family key=v1,v2,...");
    targets.emplace_back(sub, target);
  }
  auto* sweep = app.add_subcommand("sweep", "Run the sweep described by --config");
  add_common(sweep);
  sweep->get_option("--config")->required();
  auto* presets = app.add_subcommand("presets", "Print stack presets and application table");
  presets->add_option("--out", opt.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (presets->parsed()) {
      std::optional<std::filesystem::path> out;
      if (!opt.out.empty()) out = opt.out;
      write_output(presets_csv() + "\n" + scenarios_csv(), out);
      return 0;
    }
    if (sweep->parsed()) return run_target(opt, std::nullopt);
    for (const auto& [sub, target] : targets) {
      if (sub->parsed()) return run_target(opt, target);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
