#include "poim/multirelation.hpp"

#include <algorithm>
#include <stdexcept>

namespace poim {

Multirelation::Multirelation(std::vector<std::string> header,
                             std::vector<Row> rows)
    : header_(std::move(header)), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != header_.size()) {
      throw std::invalid_argument("row arity does not match the header");
    }
  }
  std::sort(rows_.begin(), rows_.end());
}

std::size_t Multirelation::count(const Row& row) const {
  auto [first, last] = std::equal_range(rows_.begin(), rows_.end(), row);
  return static_cast<std::size_t>(last - first);
}

namespace {

std::string csvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Literals by value, IRIs without brackets, blanks as `_:label`.
std::string csvCell(const Term& term) {
  if (term.isBlank()) return term.toString();
  return term.label();
}

}  // namespace

std::string toCsv(const Multirelation& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += csvField(fields[i]);
    }
    out += "\r\n";
  };
  line(table.header());
  for (const auto& row : table.rows()) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (const auto& cell : row) fields.push_back(csvCell(cell));
    line(fields);
  }
  return out;
}

std::string toText(const Multirelation& table) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(table.header());
  for (const auto& row : table.rows()) {
    std::vector<std::string> fields;
    for (const auto& cell : row) fields.push_back(cell.toString());
    cells.push_back(std::move(fields));
  }
  std::vector<std::size_t> width(table.header().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t j = 0; j < line.size(); ++j) {
      width[j] = std::max(width[j], line[j].size());
    }
  }
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j > 0) text += "  ";
      text += line[j];
      if (j + 1 < line.size()) text.append(width[j] - line[j].size(), ' ');
    }
    out += text;
    out += '\n';
  }
  return out;
}

}  // namespace poim
