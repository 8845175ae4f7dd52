#include "poim/select.hpp"

#include <map>
#include <optional>
#include <set>

#include "poim/error.hpp"

namespace poim {

Term columnIri(std::string_view name) {
  return Term::iri(std::string(kColumnNamespace) + std::string(name));
}

SelectQuery SelectQuery::make(Graph pattern, std::vector<Term> projection) {
  auto vars = variablesOf(pattern);
  std::set<Term> seen;
  for (const auto& var : projection) {
    if (!seen.insert(var).second) {
      throw Error(ErrorCode::DuplicateProjectionVar,
                  "variable " + var.toString() + " is projected twice");
    }
    if (!vars.contains(var)) {
      throw Error(ErrorCode::ProjectionNotInPattern,
                  "projected variable " + var.toString() +
                      " does not occur in the pattern");
    }
  }
  return SelectQuery{std::move(pattern), std::move(projection)};
}

std::vector<std::string> SelectQuery::header() const {
  std::vector<std::string> names;
  names.reserve(projection.size());
  for (const auto& var : projection) names.push_back(var.label());
  return names;
}

Graph relationalQueryGraph(const std::vector<Term>& projection,
                           FreshSupply& supply) {
  if (projection.empty()) {
    throw Error(ErrorCode::EmptyProjection, "projection is empty");
  }
  const Term row = supply.nextBlank();
  Graph result;
  for (const auto& var : projection) {
    result.insert({row, columnIri(var.label()), var});
  }
  return result;
}

namespace {

// Row blank -> (column predicate -> cell). Empty optional when the graph is
// not relational over `header`.
std::optional<std::map<Term, std::map<Term, Term>>> groupRows(
    const Graph& h, const std::vector<std::string>& header) {
  std::set<Term> columns;
  for (const auto& name : header) columns.insert(columnIri(name));
  if (columns.size() != header.size()) return std::nullopt;

  std::map<Term, std::map<Term, Term>> rows;
  for (const auto& [s, p, o] : h) {
    if (!s.isBlank() || !columns.contains(p) || o.isVariable()) {
      return std::nullopt;
    }
    if (!rows[s].emplace(p, o).second) return std::nullopt;
  }
  for (const auto& [row, cells] : rows) {
    if (cells.size() != columns.size()) return std::nullopt;
  }
  return rows;
}

}  // namespace

bool isRelationalDataGraph(const Graph& h,
                           const std::vector<std::string>& header) {
  return groupRows(h, header).has_value();
}

Multirelation rel(const Graph& h, const std::vector<std::string>& header) {
  auto rows = groupRows(h, header);
  if (!rows) {
    throw Error(ErrorCode::NotRelational,
                "graph is not a relational data graph over the header");
  }
  std::vector<Multirelation::Row> table;
  table.reserve(rows->size());
  for (const auto& [row, cells] : *rows) {
    Multirelation::Row values;
    values.reserve(header.size());
    for (const auto& name : header) values.push_back(cells.at(columnIri(name)));
    table.push_back(std::move(values));
  }
  return Multirelation(header, std::move(table));
}

Graph relationalDataGraph(const Multirelation& table, FreshSupply& supply) {
  Graph result;
  for (const auto& row : table.rows()) {
    const Term blank = supply.nextBlank();
    for (std::size_t j = 0; j < row.size(); ++j) {
      result.insert({blank, columnIri(table.header()[j]), row[j]});
    }
  }
  return result;
}

Multirelation selectEval(const SelectQuery& query, const Graph& g,
                         FreshSupply& supply, Calculus calculus) {
  auto rule = makeRule(query.pattern,
                       relationalQueryGraph(query.projection, supply), supply);
  Graph h = constructEval(rule, g, supply, {.calculus = calculus});
  return rel(h, query.header());
}

}  // namespace poim
