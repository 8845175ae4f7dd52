#pragma once

#include <vector>

#include "poim/graph.hpp"
#include "poim/morphism.hpp"

namespace poim {

// A match L -> G is a morphism fixing I: resource identifiers stay put while
// variables and blanks of L bind to resource identifiers or blanks of G.
using Match = Morphism;

// All matches of the query graph `l` into the data graph `g`, each exactly
// once. Backtracking join: patterns are visited cheapest first (static count
// of data triples agreeing on the constant positions, ties in canonical
// order); for each pattern the data triples are scanned in canonical order
// and compatible ones extend the current binding.
//
// Throws CodomainHasVariables when `g` is not a data graph.
std::vector<Match> enumerateMatches(const Graph& l, const Graph& g);

// m(L), the part of the data graph covered by the match.
Graph matchImage(const Match& m);

}  // namespace poim
