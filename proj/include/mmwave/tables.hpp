#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmwave/reference_tables.hpp"

namespace mmwave {

enum class TableId { I, II, III };

std::string_view to_string(TableId id) noexcept;
/// Accepts "I", "II", "III" (also "1".."3"). Throws Usage otherwise.
TableId parse_table_id(std::string_view text);

struct TableCell {
  std::optional<double> value;  // absent: empty cell
  int decimals = 3;             // emission precision
  std::optional<PrintedValue> printed;
  bool derived = false;
  /// Derived cell whose value, rounded to the printed precision, differs
  /// from the printed number.
  bool flagged = false;
  /// |round(value, 3) - printed| in thousandths, for derived cells.
  long mismatch_thousandths = 0;
};

struct TableRow {
  std::string label;
  std::vector<TableCell> cells;
};

struct ReferenceTable {
  TableId id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;

  std::size_t flag_count() const;
  const TableRow& row(std::string_view label) const;
};

/// Recomputes alpha values as exponent ratios, BC-CI exponent rows from the
/// published (n_single, A), and the sigma delta row.
ReferenceTable export_table(TableId id);

std::string render_table_csv(const ReferenceTable& table);
std::string render_table_text(const ReferenceTable& table);

}  // namespace mmwave
