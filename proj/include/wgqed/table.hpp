#pragma once

// Tabular command output with CSV and JSON writers.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wgqed {

struct Table {
  struct Row {
    std::vector<std::optional<double>> values;  ///< nullopt where a cell was skipped
    std::string skip_reason;                    ///< empty for a complete row
  };

  std::vector<std::string> columns;  ///< names carry units, e.g. x_mm, t_ns
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> notes;  ///< summary values

  void add(std::vector<std::optional<double>> values, std::string skip_reason = {});
  std::size_t skipped() const;
};

/// Notes become leading `# key = value` lines; a trailing skip_reason column
/// is always present. Numbers use 17 significant digits.
std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// 17 significant digits in scientific notation.
std::string format_number(double v);

}  // namespace wgqed
