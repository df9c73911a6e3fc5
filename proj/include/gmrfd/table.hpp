#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gmrfd {

/// Empty cells are written as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// Flat records with a fixed column order, emitted as CSV or as a JSON array
/// of objects keyed by the same column names.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  /// Throws std::invalid_argument when the row width does not match.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Shortest decimal text that round-trips to the same double; locale
/// independent. Non-finite values are written as "nan", "inf", "-inf".
std::string format_double(double value);

inline Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{};
}

}  // namespace gmrfd
