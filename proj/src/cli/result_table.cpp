#include "gthz/cli/result_table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace gthz::cli {

ResultTable::ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("result table needs at least one column");
  for (const auto& c : columns_) {
    if (c.name.empty() || c.unit.empty()) {
      throw std::invalid_argument("every column needs a name and a unit");
    }
  }
}

void ResultTable::add_row(std::vector<Cell> cells, std::string status) {
  if (cells.size() != columns_.size()) throw std::invalid_argument("row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const bool is_number = std::holds_alternative<double>(cells[i]);
    if (is_number != (columns_[i].kind == CellKind::kNumber)) {
      throw std::invalid_argument("cell kind does not match column '" + columns_[i].name + "'");
    }
  }
  rows_.push_back({std::move(cells), std::move(status)});
}

std::optional<std::size_t> ResultTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

bool ResultTable::all_ok() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.ok(); });
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return {buf, end};
}

namespace {

std::string quote_if_needed(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell) {
  if (const double* v = std::get_if<double>(&cell)) return format_number(*v);
  return quote_if_needed(std::get<std::string>(cell));
}

// Splits one CSV record starting at `pos`; advances past the terminating LF.
std::vector<std::string> read_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  while (pos < text.size()) {
    const char ch = text[pos++];
    if (quoted) {
      if (ch == '"') {
        if (pos < text.size() && text[pos] == '"') {
          fields.back() += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch == '\n') {
      return fields;
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted CSV field");
  return fields;
}

double parse_number(const std::string& text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::runtime_error("malformed numeric CSV cell '" + text + "'");
  }
  return value;
}

Column parse_header(const std::string& field) {
  const auto open = field.rfind('(');
  if (open == std::string::npos || open == 0 || field.size() < open + 3 || field.back() != ')') {
    throw std::runtime_error("CSV header '" + field + "' lacks a unit annotation");
  }
  Column c{field.substr(0, open), field.substr(open + 1, field.size() - open - 2)};
  c.kind = c.unit == "text" ? CellKind::kText : CellKind::kNumber;
  return c;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (const auto& c : table.columns()) out += c.header() + ",";
  out += "status(text)\n";
  for (const auto& row : table.rows()) {
    for (const auto& cell : row.cells) out += cell_text(cell) + ",";
    out += quote_if_needed(row.status) + "\n";
  }
  return out;
}

ResultTable parse_csv(std::string_view text) {
  std::size_t pos = 0;
  if (text.empty()) throw std::runtime_error("empty CSV document");
  auto header = read_record(text, pos);
  if (header.size() < 2 || header.back() != "status(text)") {
    throw std::runtime_error("CSV header must end with status(text)");
  }
  header.pop_back();
  std::vector<Column> columns;
  for (const auto& field : header) columns.push_back(parse_header(field));
  ResultTable table(columns);

  while (pos < text.size()) {
    auto fields = read_record(text, pos);
    if (fields.size() != columns.size() + 1) {
      throw std::runtime_error("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(columns.size() + 1));
    }
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i].kind == CellKind::kNumber) {
        cells.emplace_back(parse_number(fields[i]));
      } else {
        cells.emplace_back(std::move(fields[i]));
      }
    }
    table.add_row(std::move(cells), std::move(fields.back()));
  }
  return table;
}

void emit_csv(const ResultTable& table, const std::filesystem::path& path) {
  write_file(path, to_csv(table));
}

std::string to_plotdata(const ResultTable& table, std::string_view x,
                        std::span<const std::string> y, std::optional<std::string_view> series) {
  auto numeric_column = [&](std::string_view name) {
    const auto index = table.column_index(name);
    if (!index) throw std::invalid_argument("unknown column '" + std::string(name) + "'");
    if (table.columns()[*index].kind != CellKind::kNumber) {
      throw std::invalid_argument("column '" + std::string(name) + "' is not numeric");
    }
    return *index;
  };
  const std::size_t xi = numeric_column(x);
  std::vector<std::size_t> yi;
  for (const auto& name : y) yi.push_back(numeric_column(name));

  // Series groups in order of first appearance.
  std::optional<std::size_t> si;
  if (series) {
    si = table.column_index(*series);
    if (!si) throw std::invalid_argument("unknown column '" + std::string(*series) + "'");
  }
  std::vector<std::string> groups;
  std::vector<std::size_t> group_of_row;
  for (const auto& row : table.rows()) {
    const std::string key = si ? cell_text(row.cells[*si]) : std::string();
    auto it = std::find(groups.begin(), groups.end(), key);
    if (it == groups.end()) it = groups.insert(groups.end(), key);
    group_of_row.push_back(static_cast<std::size_t>(it - groups.begin()));
  }
  if (groups.empty()) groups.emplace_back();

  const auto& cols = table.columns();
  std::string out;
  bool first = true;
  for (const std::size_t yc : yi) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!first) out += "\n\n";
      first = false;
      out += "# " + cols[yc].header() + " vs " + cols[xi].header();
      if (si) out += " [" + cols[*si].header() + "=" + groups[g] + "]";
      out += "\n";
      for (std::size_t r = 0; r < table.rows().size(); ++r) {
        if (group_of_row[r] != g) continue;
        const auto& row = table.rows()[r];
        if (!row.ok()) {
          out += "# skipped row " + std::to_string(r) + ": " + row.status + "\n";
          continue;
        }
        out += format_number(std::get<double>(row.cells[xi])) + " " +
               format_number(std::get<double>(row.cells[yc])) + "\n";
      }
    }
  }
  return out;
}

void emit_plotdata(const ResultTable& table, std::string_view x, std::span<const std::string> y,
                   const std::filesystem::path& path, std::optional<std::string_view> series) {
  write_file(path, to_plotdata(table, x, y, series));
}

}  // namespace gthz::cli
