#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <set>

#include "poim/term.hpp"

namespace poim {

// A finite set of triples. Iteration follows the canonical triple order
// (subject, predicate, object under the Term ordering).
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples) : triples_(triples) {}
  explicit Graph(std::set<Triple> triples) : triples_(std::move(triples)) {}

  // Returns false when the triple was already present.
  bool insert(Triple triple) { return triples_.insert(std::move(triple)).second; }
  void insertAll(const Graph& other) {
    triples_.insert(other.triples_.begin(), other.triples_.end());
  }

  bool contains(const Triple& triple) const { return triples_.contains(triple); }
  // Every triple of this graph is in `other`.
  bool isSubgraphOf(const Graph& other) const;

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }
  const std::set<Triple>& triples() const noexcept { return triples_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::set<Triple> triples_;
};

std::ostream& operator<<(std::ostream& os, const Graph& graph);

Graph unionOf(const Graph& a, const Graph& b);

// |T|: subjects, predicates and objects occurring in the graph.
std::set<Term> attributes(const Graph& graph);

// |T|_I, |T|_B and |T|_V.
struct AttributePartition {
  std::set<Term> resources;
  std::set<Term> blanks;
  std::set<Term> variables;

  friend bool operator==(const AttributePartition&,
                         const AttributePartition&) = default;
};

AttributePartition partitionAttributes(const Graph& graph);

std::set<Term> blanksOf(const Graph& graph);
std::set<Term> variablesOf(const Graph& graph);
bool hasVariables(const Graph& graph);

// RDF graphs: subjects are IRIs or blanks, predicates are IRIs, objects are
// anything but variables. Throws HasVariables on a query graph.
bool isRdfGraph(const Graph& graph);

// A finite attribute map. Applying it to a term outside its key set returns
// the term unchanged, which is how partial substitutions extend to |T|.
using AttributeMap = std::map<Term, Term>;

const Term& applyMap(const AttributeMap& map, const Term& term);
Triple applyMap(const AttributeMap& map, const Triple& triple);
Graph applyMap(const AttributeMap& map, const Graph& graph);

}  // namespace poim
