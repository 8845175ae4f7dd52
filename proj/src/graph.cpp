#include "poim/graph.hpp"

#include <algorithm>
#include <ostream>

#include "poim/error.hpp"

namespace poim {

bool Graph::isSubgraphOf(const Graph& other) const {
  return std::includes(other.triples_.begin(), other.triples_.end(),
                       triples_.begin(), triples_.end());
}

std::ostream& operator<<(std::ostream& os, const Graph& graph) {
  os << '{';
  bool first = true;
  for (const auto& triple : graph) {
    os << (first ? " " : " . ") << triple;
    first = false;
  }
  return os << (first ? "}" : " }");
}

Graph unionOf(const Graph& a, const Graph& b) {
  Graph result = a;
  result.insertAll(b);
  return result;
}

std::set<Term> attributes(const Graph& graph) {
  std::set<Term> result;
  for (const auto& [s, p, o] : graph) {
    result.insert(s);
    result.insert(p);
    result.insert(o);
  }
  return result;
}

AttributePartition partitionAttributes(const Graph& graph) {
  AttributePartition result;
  for (const auto& term : attributes(graph)) {
    if (term.isBlank()) {
      result.blanks.insert(term);
    } else if (term.isVariable()) {
      result.variables.insert(term);
    } else {
      result.resources.insert(term);
    }
  }
  return result;
}

std::set<Term> blanksOf(const Graph& graph) {
  return partitionAttributes(graph).blanks;
}

std::set<Term> variablesOf(const Graph& graph) {
  return partitionAttributes(graph).variables;
}

bool hasVariables(const Graph& graph) {
  return std::any_of(graph.begin(), graph.end(), [](const Triple& t) {
    return t.subject.isVariable() || t.predicate.isVariable() ||
           t.object.isVariable();
  });
}

bool isRdfGraph(const Graph& graph) {
  if (hasVariables(graph)) {
    throw Error(ErrorCode::HasVariables,
                "RDF validity is only defined for data graphs");
  }
  return std::all_of(graph.begin(), graph.end(), [](const Triple& t) {
    return (t.subject.isIri() || t.subject.isBlank()) && t.predicate.isIri();
  });
}

const Term& applyMap(const AttributeMap& map, const Term& term) {
  auto it = map.find(term);
  return it == map.end() ? term : it->second;
}

Triple applyMap(const AttributeMap& map, const Triple& triple) {
  return {applyMap(map, triple.subject), applyMap(map, triple.predicate),
          applyMap(map, triple.object)};
}

Graph applyMap(const AttributeMap& map, const Graph& graph) {
  Graph result;
  for (const auto& triple : graph) result.insert(applyMap(map, triple));
  return result;
}

}  // namespace poim
