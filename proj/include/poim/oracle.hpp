#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "poim/fresh_supply.hpp"
#include "poim/graph.hpp"
#include "poim/multirelation.hpp"
#include "poim/unbound_policy.hpp"

// Direct-definition evaluators used to cross-check the POIM calculi. They
// only share the term and graph types with the engine: no matcher, colimit
// or rule code is involved, and results are computed by plain substitution
// and union.
namespace poim::oracle {

// A solution mapping restricted to, or extended over, the non-fixed
// attributes of a pattern.
using Assignment = std::map<Term, Term>;

// Every map from the non-fixed attributes of `l` into the attributes of `g`
// whose substitution sends `l` into `g`. Pure generate-and-test; throws
// TooLarge when `l` has more than `limit` non-fixed attributes.
std::set<Assignment> bruteForceMatches(const Graph& l, const Graph& g,
                                       std::size_t limit = 8);

// Same set as `bruteForceMatches`, found by assigning one attribute at a
// time from per-attribute candidate domains and testing each pattern triple
// once its attributes are all assigned. Usable on larger patterns.
std::set<Assignment> solutionMappings(const Graph& l, const Graph& g);

// Query result of (L, R) against G: for each match m_i, R with variables
// replaced by m_i(x) and each blank by a blank fresh for (blank, i); the
// union of those graphs.
Graph directConstruct(const Graph& l, const Graph& r, const Graph& g,
                      FreshSupply& supply,
                      UnboundPolicy policy = UnboundPolicy::Strict);

// Answer of CONSTRUCT { r } WHERE { l } in the solution-mapping semantics:
// the union of μ(f_μ(t)) for t in R, with per-mapping blank relabellings
// that are pairwise disjoint and avoid the blanks of G. With `rdfStrict`
// only RDF triples are kept. Throws BlanksInPattern or UnboundVariables.
Graph sparqlConstructAnswer(const Graph& l, const Graph& r, const Graph& g,
                            FreshSupply& supply, bool rdfStrict = false);

// The multiset of restrictions μ|_S, each with multiplicity the number of
// mappings μ that restrict to it. Blanks of `l` count as variables.
// Throws ProjectionNotInPattern.
Multirelation sparqlSelectAnswer(const Graph& l,
                                 const std::vector<Term>& projection,
                                 const Graph& g);

}  // namespace poim::oracle
