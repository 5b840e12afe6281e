#ifndef GTHZ_CLI_RESULT_TABLE_HPP
#define GTHZ_CLI_RESULT_TABLE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gthz::cli {

enum class CellKind { kNumber, kText };

// Text columns carry the unit annotation "text".
struct Column {
  std::string name;
  std::string unit;
  CellKind kind = CellKind::kNumber;

  std::string header() const { return name + "(" + unit + ")"; }
};

using Cell = std::variant<double, std::string>;

struct Row {
  std::vector<Cell> cells;
  std::string status = "ok";  // "ok" or "failed:<reason>"

  bool ok() const { return status == "ok"; }
};

/// Rectangular table with one status per row.
class ResultTable {
 public:
  explicit ResultTable(std::vector<Column> columns);

  void add_row(std::vector<Cell> cells, std::string status = "ok");

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::optional<std::size_t> column_index(std::string_view name) const;
  bool all_ok() const;

  friend bool operator==(const ResultTable&, const ResultTable&) = default;

 private:
  std::vector<Column> columns_;
  std::vector<Row> rows_;
};

/// Shortest scientific representation that parses back to the same double.
std::string format_number(double value);

/// Header "name(unit),...,status(text)", LF line endings, status last.
std::string to_csv(const ResultTable& table);
ResultTable parse_csv(std::string_view text);
void emit_csv(const ResultTable& table, const std::filesystem::path& path);

/// Whitespace-separated "x y" blocks, one per y column (and per value of the
/// optional series column), separated by two blank lines. Failed rows are
/// replaced by a comment line.
std::string to_plotdata(const ResultTable& table, std::string_view x,
                        std::span<const std::string> y,
                        std::optional<std::string_view> series = std::nullopt);
void emit_plotdata(const ResultTable& table, std::string_view x, std::span<const std::string> y,
                   const std::filesystem::path& path,
                   std::optional<std::string_view> series = std::nullopt);

}  // namespace gthz::cli

#endif  // GTHZ_CLI_RESULT_TABLE_HPP
