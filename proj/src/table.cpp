#include "wgqed/table.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace wgqed {

void Table::add(std::vector<std::optional<double>> values, std::string skip_reason) {
  rows.push_back({std::move(values), std::move(skip_reason)});
}

std::size_t Table::skipped() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.skip_reason.empty() ? 0 : 1;
  return n;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  for (const auto& [key, value] : table.notes) os << "# " << key << " = " << value << '\n';
  for (const auto& c : table.columns) os << c << ',';
  os << "skip_reason\n";
  for (const auto& row : table.rows) {
    for (const auto& v : row.values) {
      if (v) os << format_number(*v);
      os << ',';
    }
    os << row.skip_reason << '\n';
  }
  return os.str();
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.notes) notes[key] = value;
  doc["notes"] = notes;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size() && i < row.values.size(); ++i) {
      r[table.columns[i]] = row.values[i] ? nlohmann::ordered_json(*row.values[i]) : nullptr;
    }
    if (!row.skip_reason.empty()) r["skip_reason"] = row.skip_reason;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace wgqed
