#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "gthz/cli/result_table.hpp"

using namespace gthz::cli;

namespace {

ResultTable sample() {
  ResultTable t({{"frequency", "Hz"}, {"label", "text", CellKind::kText}, {"value", "S"}});
  t.add_row({1e12, std::string("a"), 0.5});
  t.add_row({2e12, std::string("b,c"), std::numeric_limits<double>::quiet_NaN()},
            "failed:no-convergence");
  t.add_row({3e12, std::string("say \"hi\""), -1.25e-300});
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("table shape is enforced") {
  ResultTable t(std::vector<Column>{{"x", "m"}});
  CHECK_THROWS_AS(t.add_row({1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(t.add_row({std::string("text")}), std::invalid_argument);
  CHECK_THROWS_AS(ResultTable(std::vector<Column>{{"x", ""}}), std::invalid_argument);
}

TEST_CASE("csv format") {
  const std::string csv = to_csv(sample());
  CHECK(csv.rfind("frequency(Hz),label(text),value(S),status(text)\n", 0) == 0);
  CHECK(csv.find("\r") == std::string::npos);
  CHECK(csv.find("1e+12,a,5e-01,ok\n") != std::string::npos);
  CHECK(csv.find("\"b,c\",nan,failed:no-convergence\n") != std::string::npos);
  CHECK(csv.back() == '\n');

  const auto parsed = parse_csv(csv);
  REQUIRE(parsed.rows().size() == 3);
  CHECK(parsed.rows()[1].status == "failed:no-convergence");
  CHECK(std::get<std::string>(parsed.rows()[2].cells[1]) == "say \"hi\"");
  CHECK(std::isnan(std::get<double>(parsed.rows()[1].cells[2])));
  CHECK(std::get<double>(parsed.rows()[2].cells[2]) == -1.25e-300);
}

TEST_CASE("every header carries a unit") {
  const std::string csv = to_csv(sample());
  const std::string header = csv.substr(0, csv.find('\n'));
  std::istringstream in(header);
  std::string field;
  while (std::getline(in, field, ',')) {
    CHECK(field.find('(') != std::string::npos);
    CHECK(field.back() == ')');
  }
  CHECK_THROWS(parse_csv("frequency,status(text)\n"));
}

TEST_CASE("round trip is bit-exact for random doubles") {
  std::mt19937_64 rng(42);
  ResultTable t({{"a", "1"}, {"b", "m"}});
  for (int i = 0; i < 2000; ++i) {
    double x;
    do {
      x = std::bit_cast<double>(rng());
    } while (!std::isfinite(x));
    t.add_row({x, -0.0});
  }
  const auto back = parse_csv(to_csv(t));
  REQUIRE(back.rows().size() == t.rows().size());
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(std::bit_cast<std::uint64_t>(std::get<double>(back.rows()[i].cells[j])) ==
            std::bit_cast<std::uint64_t>(std::get<double>(t.rows()[i].cells[j])));
    }
  }
}

TEST_CASE("emit to disk is deterministic") {
  const auto dir = std::filesystem::temp_directory_path() / "gthz_result_table_test";
  std::filesystem::create_directories(dir);
  emit_csv(sample(), dir / "a.csv");
  emit_csv(sample(), dir / "b.csv");
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(slurp(dir / "a.csv") == to_csv(sample()));
  CHECK_THROWS_AS(emit_csv(sample(), dir / "missing" / "x.csv"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("plot data") {
  const std::vector<std::string> two{"value", "frequency"};
  const std::string plot = to_plotdata(sample(), "frequency", two);
  std::size_t blocks = 0;
  for (std::size_t pos = 0; (pos = plot.find("# value(S) vs", pos)) != std::string::npos; ++pos) ++blocks;
  CHECK(blocks == 1);
  CHECK(plot.find("# frequency(Hz) vs frequency(Hz)") != std::string::npos);
  CHECK(plot.find("\n\n\n#") != std::string::npos);
  CHECK(plot.find("# skipped row 1: failed:no-convergence") != std::string::npos);
  CHECK(plot.find("1e+12 5e-01\n") != std::string::npos);

  const std::vector<std::string> unknown{"nope"};
  CHECK_THROWS_AS(to_plotdata(sample(), "frequency", unknown), std::invalid_argument);
  const std::vector<std::string> text{"label"};
  CHECK_THROWS_AS(to_plotdata(sample(), "frequency", text), std::invalid_argument);

  SUBCASE("all rows failed leaves only comments") {
    ResultTable t({{"x", "1"}, {"y", "1"}});
    t.add_row({1.0, 2.0}, "failed:no-convergence");
    t.add_row({2.0, 3.0}, "failed:branch-cut");
    const std::vector<std::string> y{"y"};
    std::istringstream lines(to_plotdata(t, "x", y));
    std::string line;
    while (std::getline(lines, line)) {
      CHECK((line.empty() || line[0] == '#'));
    }
  }
  SUBCASE("series split into blocks") {
    ResultTable t({{"f", "Hz"}, {"ef", "eV"}, {"y", "S"}});
    for (double ef : {0.2, 0.4}) {
      for (double f : {1.0, 2.0, 3.0}) t.add_row({f, ef, f * ef});
    }
    const std::vector<std::string> y{"y"};
    const std::string p = to_plotdata(t, "f", y, "ef");
    CHECK(p.find("[ef(eV)=2e-01]") != std::string::npos);
    CHECK(p.find("[ef(eV)=4e-01]") != std::string::npos);
  }
}
