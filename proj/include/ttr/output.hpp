#pragma once

// Tabular command output rendered as CSV or JSON.
//
// CSV layout: optional leading "# key=value" metadata lines, one header row,
// data rows, then optional trailing "# key=value" summary lines. LF endings,
// no quoting. JSON carries the same fields as flat string maps.

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttr/exact.hpp"

namespace ttr {

enum class Format { csv, json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv or json)");
}

/// Shortest round-trip rendition of a double (17 significant digits).
inline std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_float(const Rational& q) { return format_float(to_double(q)); }

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct OutputRecord {
  std::string command;
  KeyValues params;
  KeyValues metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  KeyValues summary;

  void add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
    rows.push_back(std::move(row));
  }
};

inline void write_csv(std::ostream& os, const OutputRecord& rec) {
  for (const auto& [k, v] : rec.metadata) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < rec.columns.size(); ++i) os << (i ? "," : "") << rec.columns[i];
  os << '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  for (const auto& [k, v] : rec.summary) os << "# " << k << '=' << v << '\n';
}

inline nlohmann::ordered_json to_json(const OutputRecord& rec) {
  using nlohmann::ordered_json;
  auto kv = [](const KeyValues& items) {
    ordered_json o = ordered_json::object();
    for (const auto& [k, v] : items) o[k] = v;
    return o;
  };
  ordered_json rows = ordered_json::array();
  for (const auto& row : rec.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[rec.columns[i]] = row[i];
    rows.push_back(std::move(r));
  }
  ordered_json out;
  out["command"] = rec.command;
  out["params"] = kv(rec.params);
  out["metadata"] = kv(rec.metadata);
  out["columns"] = rec.columns;
  out["rows"] = std::move(rows);
  out["summary"] = kv(rec.summary);
  return out;
}

inline void write_record(std::ostream& os, const OutputRecord& rec, Format fmt) {
  if (fmt == Format::csv)
    write_csv(os, rec);
  else
    os << to_json(rec).dump(2) << '\n';
}

inline std::string render(const OutputRecord& rec, Format fmt) {
  std::ostringstream os;
  write_record(os, rec, fmt);
  return os.str();
}

}  // namespace ttr
