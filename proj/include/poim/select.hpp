#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "poim/construct.hpp"
#include "poim/fresh_supply.hpp"
#include "poim/graph.hpp"
#include "poim/multirelation.hpp"

namespace poim {

// Column predicates live here so they never clash with data predicates.
inline constexpr std::string_view kColumnNamespace = "urn:x-poim:column:";

Term columnIri(std::string_view name);

// SELECT ?s1 ... ?sn WHERE { pattern }
struct SelectQuery {
  Graph pattern;
  std::vector<Term> projection;

  // Throws DuplicateProjectionVar or ProjectionNotInPattern.
  static SelectQuery make(Graph pattern, std::vector<Term> projection);

  // Column names: the projection labels without the `?`.
  std::vector<std::string> header() const;
};

// gr(S): one fresh row blank and a triple (row, column(s), ?s) per variable.
// Throws EmptyProjection.
Graph relationalQueryGraph(const std::vector<Term>& projection,
                           FreshSupply& supply);

// True iff the triples split into groups by pairwise distinct blank
// subjects, each group holding exactly one triple per column and no other.
bool isRelationalDataGraph(const Graph& h,
                           const std::vector<std::string>& header);

// rel(H): one row per row blank. Throws NotRelational.
Multirelation rel(const Graph& h, const std::vector<std::string>& header);

// Inverse direction of `rel`: one fresh row blank per row.
Graph relationalDataGraph(const Multirelation& table, FreshSupply& supply);

// Runs the associated construct query (L, gr(S)) and reads the table off
// the result.
Multirelation selectEval(const SelectQuery& query, const Graph& g,
                         FreshSupply& supply,
                         Calculus calculus = Calculus::Low);

}  // namespace poim
