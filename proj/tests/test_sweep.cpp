#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gthz/cli/result_table.hpp"
#include "gthz/cli/sweep.hpp"
#include "gthz/cli/sweep_spec.hpp"

using namespace gthz::cli;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path config_dir() { return GTHZ_CONFIG_DIR; }

double number(const ResultTable& t, std::size_t row, std::string_view column) {
  return std::get<double>(t.rows()[row].cells[*t.column_index(column)]);
}

constexpr const char* kMinimal = R"(
[sweep]
target = conductivity
variable = chemical_potential_ev
grid = 0.2, 0.4, 0.6

[parameters]
relaxation_time_s = 1e-12
frequency_hz = 1e12
)";

}  // namespace

TEST_CASE("grid syntax") {
  CHECK(parse_grid("1, 2, 3") == std::vector<double>{1, 2, 3});
  const auto range = parse_grid("0:1:5");
  REQUIRE(range.size() == 5);
  CHECK(range[2] == 0.5);
  CHECK(range.back() == 1.0);
  CHECK(parse_grid("").empty());
  CHECK_THROWS_AS(parse_grid("0:1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("0:1:1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("0:1:2.5"), ConfigError);
  CHECK_THROWS_AS(parse_grid("1, x"), ConfigError);
}

TEST_CASE("parse_config defaults and validation") {
  SUBCASE("minimal conductivity spec") {
    const auto spec = parse_config(kMinimal);
    CHECK(spec.target == SweepTarget::kConductivity);
    CHECK(spec.variable.name == "chemical_potential_ev");
    CHECK(spec.variable.values.size() == 3);
    CHECK(spec.fixed.at("temperature_k") == 300.0);
    CHECK(spec.solver.tolerance == 1e-12);
    CHECK(spec.solver.max_iterations == 100);
    CHECK_FALSE(spec.fixed.contains("chemical_potential_ev"));
  }
  SUBCASE("antenna defaults") {
    const auto spec = parse_config(
        "[sweep]\ntarget=antenna\nvariable=length_m\ngrid=10e-6,20e-6\n"
        "[parameters]\nchemical_potential_ev=0.2\nrelaxation_time_s=1e-12\n");
    CHECK(spec.fixed.at("end_correction") == 1.0);
    CHECK(spec.fixed.at("width_m") == 8e-6);
    CHECK(spec.fixed.at("substrate_permittivity") == 3.8);
  }
  SUBCASE("stack preset data is overridable") {
    const auto spec = parse_config(
        "[sweep]\ntarget=stack\nvariable=chemical_potential_ev\ngrid=0.2,0.4\n"
        "[parameters]\nstack=H1G\nfrequency_hz=5e12\nrelaxation_time_s=0.6e-12\n"
        "h1g_film_thickness_m=12e-6\n");
    CHECK(spec.text.at("stack") == "H1G");
    CHECK(spec.fixed.at("h1g_film_thickness_m") == 12e-6);
    CHECK(spec.fixed.at("film_permittivity") == 11.9);
  }

  auto error_key = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.key();
    }
    return std::string("<no error>");
  };
  SUBCASE("swept and fixed at once") {
    CHECK(error_key(std::string(kMinimal) + "chemical_potential_ev = 0.6\n") ==
          "parameters.chemical_potential_ev");
  }
  SUBCASE("unknown keys are errors") {
    CHECK(error_key(std::string(kMinimal) + "colour = 3\n") == "parameters.colour");
    CHECK(error_key(std::string(kMinimal) + "[solver]\nmethod = newton\n") == "solver.method");
    CHECK(error_key(std::string(kMinimal) + "[extra]\na = 1\n") == "extra");
  }
  SUBCASE("parameter of another target") {
    CHECK(error_key(std::string(kMinimal) + "length_m = 1e-5\n") == "parameters.length_m");
  }
  SUBCASE("missing required parameter") {
    CHECK(error_key("[sweep]\ntarget=conductivity\nvariable=frequency_hz\ngrid=1e12\n"
                    "[parameters]\nrelaxation_time_s=1e-12\n") ==
          "parameters.chemical_potential_ev");
  }
  SUBCASE("empty grid is rejected before any run") {
    CHECK(error_key("[sweep]\ntarget=conductivity\nvariable=frequency_hz\ngrid=\n"
                    "[parameters]\nrelaxation_time_s=1e-12\nchemical_potential_ev=0.2\n") ==
          "sweep.grid");
  }
  SUBCASE("non-monotone grid") {
    CHECK(error_key("[sweep]\ntarget=conductivity\nvariable=frequency_hz\ngrid=1e12,3e12,2e12\n"
                    "[parameters]\nrelaxation_time_s=1e-12\nchemical_potential_ev=0.2\n") ==
          "sweep.grid");
  }
  SUBCASE("out-of-range value") {
    CHECK(error_key(std::string(kMinimal) + "temperature_k = -3\n") == "parameters.temperature_k");
    CHECK(error_key("[sweep]\ntarget=conductivity\nvariable=chemical_potential_ev\ngrid=-1,0\n"
                    "[parameters]\nrelaxation_time_s=1e-12\nfrequency_hz=1e12\n") == "sweep.grid");
  }
  SUBCASE("syntax errors carry the line") {
    try {
      parse_config("[sweep]\ntarget = conductivity\nthis line has no equals\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      REQUIRE(e.line().has_value());
      CHECK(*e.line() == 3);
    }
  }
}

TEST_CASE("conductivity curve-family configurations") {
  const auto a = parse_config(read(config_dir() / "conductivity_vs_fermi.ini"));
  CHECK(a.variable.name == "frequency_hz");
  CHECK(a.variable.values.front() == 0.1e12);
  CHECK(a.variable.values.back() == 5e12);
  REQUIRE(a.series.has_value());
  CHECK(a.series->name == "chemical_potential_ev");
  CHECK(a.series->values == std::vector<double>{0.2, 0.4, 0.6, 0.8, 1.0});
  CHECK(a.fixed.at("relaxation_time_s") == 1e-12);

  const auto b = parse_config(read(config_dir() / "conductivity_vs_tau.ini"));
  REQUIRE(b.series.has_value());
  CHECK(b.series->name == "relaxation_time_s");
  CHECK(b.series->values.size() == 5);
  CHECK(b.series->values.back() == 1e-12);
  CHECK(b.fixed.at("chemical_potential_ev") == 0.6);

  SUBCASE("one plot block per curve with Re and -Im series") {
    const auto table = run_sweep(a);
    CHECK(table.rows().size() == 50 * 5);
    const auto sel = plot_selection(a);
    CHECK(sel.y == std::vector<std::string>{"re_sigma", "neg_im_sigma"});
    const std::string plot = to_plotdata(table, sel.x, sel.y, *sel.series);
    std::size_t blocks = 0;
    for (std::size_t pos = 0; (pos = plot.find("\n# ", pos)) != std::string::npos; ++pos) ++blocks;
    CHECK(blocks + 1 == 10);
  }
}

TEST_CASE("run_sweep") {
  SUBCASE("conductivity rises with chemical potential") {
    const auto table = run_sweep(parse_config(kMinimal));
    REQUIRE(table.rows().size() == 3);
    CHECK(table.all_ok());
    CHECK(number(table, 1, "abs_sigma") > number(table, 0, "abs_sigma"));
    CHECK(number(table, 2, "abs_sigma") > number(table, 1, "abs_sigma"));
    CHECK(number(table, 0, "neg_im_sigma") == -number(table, 0, "im_sigma"));
  }
  SUBCASE("deterministic output") {
    const auto spec = parse_config(read(config_dir() / "dispersion_g.ini"));
    CHECK(to_csv(run_sweep(spec)) == to_csv(run_sweep(spec)));
  }
  SUBCASE("stack sweeps for the three presets") {
    auto spec = parse_config(read(config_dir() / "stacks_tau06.ini"));
    for (const char* preset : {"G", "H1G", "H2G"}) {
      spec.text["stack"] = preset;
      const auto table = run_sweep(spec);
      CHECK(table.rows().size() == 9);
      CHECK(table.all_ok());
      CHECK(std::get<std::string>(table.rows()[0].cells[*table.column_index("stack")]) == preset);
    }
  }
  SUBCASE("failed rows are kept") {
    auto spec = parse_config(read(config_dir() / "dispersion_g.ini"));
    spec.solver.max_iterations = 1;
    const auto table = run_sweep(spec);
    CHECK(table.rows().size() == spec.variable.values.size());
    CHECK_FALSE(table.all_ok());
    CHECK(table.rows()[0].status.rfind("failed:", 0) == 0);
    CHECK(std::isnan(number(table, 0, "re_q")));
  }
  SUBCASE("invalid input combination fails the row only") {
    const auto spec = parse_config(
        "[sweep]\ntarget=antenna\nvariable=length_m\ngrid=2e-6,20e-6\n"
        "[parameters]\nchemical_potential_ev=0.2\nrelaxation_time_s=1e-12\n");
    const auto table = run_sweep(spec);
    REQUIRE(table.rows().size() == 2);
    CHECK(table.rows()[0].status == "failed:invalid-input");
    CHECK(table.rows()[1].ok());
  }
  SUBCASE("scenario table") {
    const auto table = run_sweep(parse_config(read(config_dir() / "scenario_g.ini")));
    CHECK(table.rows().size() == 10);
    CHECK(table.all_ok());
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
      CHECK(number(table, i, "fits_WNoC") == 1.0);
      CHECK(number(table, i, "fits_SDM") == 1.0);
    }
  }
  SUBCASE("every header has units") {
    for (const char* name : {"conductivity_vs_fermi.ini", "dispersion_g.ini",
                              "stacks_tau06.ini", "dipole_fermi.ini", "scenario_g.ini"}) {
      const auto table = run_sweep(parse_config(read(config_dir() / name)));
      for (const auto& c : table.columns()) CHECK_FALSE(c.unit.empty());
      const std::string csv = to_csv(table);
      const std::string header = csv.substr(0, csv.find('\n'));
      std::istringstream in(header);
      std::string field;
      while (std::getline(in, field, ',')) CHECK(field.back() == ')');
    }
  }
}
