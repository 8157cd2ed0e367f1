#pragma once

// Tabular command output and its CSV/JSON encodings. Rationals travel as
// "num/den" strings, lists of coefficients as arrays (JSON) or as a
// bracketed, space-separated field (CSV).

#include <string>
#include <utility>
#include <vector>

namespace dkap {

class Cell {
 public:
  enum class Kind { text, integer, list, null };

  static Cell text(std::string value) { return Cell(Kind::text, std::move(value), {}); }
  static Cell integer(long value) { return Cell(Kind::integer, std::to_string(value), {}); }
  static Cell list(std::vector<std::string> items) { return Cell(Kind::list, {}, std::move(items)); }
  static Cell null() { return Cell(Kind::null, {}, {}); }

  Kind kind() const { return kind_; }
  /// Scalar payload (text or integer digits).
  const std::string& value() const { return value_; }
  const std::vector<std::string>& items() const { return items_; }

  friend bool operator==(const Cell&, const Cell&) = default;

 private:
  Cell(Kind kind, std::string value, std::vector<std::string> items)
      : kind_(kind), value_(std::move(value)), items_(std::move(items)) {}

  Kind kind_;
  std::string value_;
  std::vector<std::string> items_;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Scalar results reported alongside the rows (e.g. sample statistics).
  std::vector<std::pair<std::string, Cell>> summary;

  void add_row(std::vector<Cell> row);
};

/// Header row, then data rows. A non-empty summary follows after a blank line
/// as a "metric,value" block.
std::string to_csv(const Table& table);
/// {"columns": [...], "rows": [{column: value}], "summary": {...}}
std::string to_json(const Table& table);

/// Inverse of to_csv. Integers come back as text cells; empty fields as null.
Table table_from_csv(const std::string& text);
Table table_from_json(const std::string& text);

}  // namespace dkap
