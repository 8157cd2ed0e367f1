#include "dkap/table.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "dkap/errors.hpp"

namespace dkap {
namespace {

std::string csv_field(const Cell& cell) {
  switch (cell.kind()) {
    case Cell::Kind::null:
      return "";
    case Cell::Kind::list: {
      std::string out = "[";
      for (std::size_t i = 0; i < cell.items().size(); ++i) {
        if (i > 0) out += ' ';
        out += cell.items()[i];
      }
      return out + "]";
    }
    default:
      break;
  }
  const std::string& v = cell.value();
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string quoted = "\"";
  for (char c : v) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

Cell cell_from_field(const std::string& field) {
  if (field.empty()) return Cell::null();
  if (field.front() == '[' && field.back() == ']') {
    std::vector<std::string> items;
    std::istringstream in(field.substr(1, field.size() - 2));
    for (std::string item; in >> item;) items.push_back(item);
    return Cell::list(std::move(items));
  }
  return Cell::text(field);
}

nlohmann::json cell_to_json(const Cell& cell) {
  switch (cell.kind()) {
    case Cell::Kind::null: return nullptr;
    case Cell::Kind::integer: return std::stol(cell.value());
    case Cell::Kind::list: return cell.items();
    case Cell::Kind::text: break;
  }
  return cell.value();
}

Cell cell_from_json(const nlohmann::json& value) {
  if (value.is_null()) return Cell::null();
  if (value.is_number_integer()) return Cell::integer(value.get<long>());
  if (value.is_array()) return Cell::list(value.get<std::vector<std::string>>());
  if (value.is_string()) return Cell::text(value.get<std::string>());
  throw std::invalid_argument("table: unsupported JSON value " + value.dump());
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  require(row.size() == columns.size(), "Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    for (const Cell& c : row) fields.push_back(csv_field(c));
    line(fields);
  }
  if (!table.summary.empty()) {
    out += '\n';
    line({"metric", "value"});
    for (const auto& [name, cell] : table.summary) line({name, csv_field(cell)});
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_to_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  if (!table.summary.empty()) {
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [name, cell] : table.summary) summary[name] = cell_to_json(cell);
    doc["summary"] = std::move(summary);
  }
  return doc.dump(2) + "\n";
}

Table table_from_csv(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("table: empty CSV");
  table.columns = split_csv_line(line);
  bool in_summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) {
      in_summary = true;
      std::getline(in, line);  // metric,value header
      continue;
    }
    const auto fields = split_csv_line(line);
    if (in_summary) {
      if (fields.size() != 2) throw std::invalid_argument("table: malformed summary line");
      table.summary.emplace_back(fields[0], cell_from_field(fields[1]));
      continue;
    }
    if (fields.size() != table.columns.size()) throw std::invalid_argument("table: ragged CSV row");
    std::vector<Cell> row;
    for (const auto& f : fields) row.push_back(cell_from_field(f));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table table_from_json(const std::string& text) {
  const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
  Table table;
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : doc.at("rows")) {
    std::vector<Cell> row;
    for (const auto& col : table.columns) row.push_back(cell_from_json(obj.at(col)));
    table.rows.push_back(std::move(row));
  }
  if (doc.contains("summary")) {
    for (const auto& [name, value] : doc.at("summary").items()) table.summary.emplace_back(name, cell_from_json(value));
  }
  return table;
}

}  // namespace dkap
