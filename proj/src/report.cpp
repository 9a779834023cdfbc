#include "univrad/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace univrad {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<int64_t>(&c)) return std::to_string(*i);
  return std::get<bool>(c) ? "true" : "false";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string to_table(const Report& r) {
  std::string out = "command: " + r.command + "\n";
  for (const auto& [key, value] : r.inputs) {
    out += "  " + key + ": " + value + "\n";
  }

  const size_t ncols = r.columns.size();
  std::vector<size_t> width(ncols);
  std::vector<std::vector<std::string>> cells;
  cells.reserve(r.rows.size());
  for (size_t j = 0; j < ncols; ++j) width[j] = r.columns[j].size();
  for (const auto& row : r.rows) {
    std::vector<std::string> line(ncols);
    for (size_t j = 0; j < ncols && j < row.size(); ++j) {
      line[j] = cell_text(row[j]);
      width[j] = std::max(width[j], line[j].size());
    }
    cells.push_back(std::move(line));
  }

  auto emit = [&](const std::vector<std::string>& line) {
    for (size_t j = 0; j < ncols; ++j) {
      out += line[j];
      if (j + 1 < ncols) out.append(width[j] - line[j].size() + 2, ' ');
    }
    out += '\n';
  };
  emit(r.columns);
  for (const auto& line : cells) emit(line);
  return out;
}

std::string to_csv(const Report& r) {
  const auto& names = r.csv_columns.empty() ? r.columns : r.csv_columns;
  std::vector<size_t> pick;
  for (const auto& name : names) {
    const auto it = std::find(r.columns.begin(), r.columns.end(), name);
    if (it == r.columns.end()) {
      throw std::runtime_error("csv column not in report: " + name);
    }
    pick.push_back(static_cast<size_t>(it - r.columns.begin()));
  }

  std::string out;
  for (size_t j = 0; j < names.size(); ++j) {
    if (j) out += ',';
    out += csv_quote(names[j]);
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (size_t j = 0; j < pick.size(); ++j) {
      if (j) out += ',';
      if (pick[j] < row.size()) out += csv_quote(cell_text(row[pick[j]]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const Report& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  ordered_json inputs = ordered_json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  j["inputs"] = std::move(inputs);
  j["columns"] = r.columns;
  j["csv_columns"] = r.csv_columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json line = ordered_json::array();
    for (const auto& cell : row) {
      std::visit([&line](const auto& v) { line.push_back(v); }, cell);
    }
    rows.push_back(std::move(line));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("bad report json: ") + e.what());
  }
  Report r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("inputs").items()) {
      r.inputs.emplace_back(key, value.get<std::string>());
    }
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.csv_columns = j.at("csv_columns").get<std::vector<std::string>>();
    for (const auto& line : j.at("rows")) {
      std::vector<Cell> row;
      for (const auto& cell : line) {
        if (cell.is_string()) {
          row.emplace_back(cell.get<std::string>());
        } else if (cell.is_boolean()) {
          row.emplace_back(cell.get<bool>());
        } else if (cell.is_number_float()) {
          row.emplace_back(cell.get<double>());
        } else if (cell.is_number()) {
          row.emplace_back(cell.get<int64_t>());
        } else {
          throw std::runtime_error("unsupported cell type in report json");
        }
      }
      r.rows.push_back(std::move(row));
    }
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error(std::string("bad report json: ") + e.what());
  }
  return r;
}

}  // namespace univrad
