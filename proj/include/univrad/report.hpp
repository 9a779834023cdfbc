#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace univrad {

/// One table entry; doubles are rendered with 15 significant digits in the
/// text formats and kept bit-exact in JSON.
using Cell = std::variant<std::string, double, int64_t, bool>;

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // ordered
  std::vector<std::string> columns;
  std::vector<std::string> csv_columns;  // subset used by to_csv; empty = all
  std::vector<std::vector<Cell>> rows;
  int schema_version = 1;

  bool operator==(const Report&) const = default;
};

std::string format_double(double x);  // %.15g

/// Plain fixed-width table with the command and inputs up front.
std::string to_table(const Report& r);

/// RFC-4180 quoting, \n line ends, header row from csv_columns (all
/// columns when the subset is empty).
std::string to_csv(const Report& r);

/// Deterministic field order, schema_version first; doubles round-trip.
std::string to_json_text(const Report& r);

/// Inverse of to_json_text; throws std::runtime_error on malformed input.
Report report_from_json(const std::string& text);

}  // namespace univrad
