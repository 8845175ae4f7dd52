#pragma once

#include <vector>

#include "poim/fixed_set.hpp"
#include "poim/fresh_supply.hpp"
#include "poim/graph.hpp"
#include "poim/morphism.hpp"

namespace poim {

struct CoproductResult {
  Graph graph;
  std::vector<Morphism> injections;  // parts[i] -> graph
};

// Coproduct in tgr_C. Every non-fixed attribute of every part is replaced by
// a fresh one of the same kind, so distinct parts only share fixed
// attributes; the coproduct is then the union of the renamed parts.
CoproductResult coproduct(const std::vector<Graph>& parts,
                          const FixedSet& fixed, FreshSupply& supply);

// The pushout square
//
//        l
//    L ----> K
//  m |       | n
//    v       v
//    G ----> D
//        g
//
// with l an inclusion and m fixing C. `n` is expressed on the original K.
// When K shares non-fixed attributes with G they are first renamed freshly
// on the K side; `renaming` records that step (identity on the others) and
// `renamedRule` / `renamedPattern` are K' and L'.
struct PushoutResult {
  Graph d;
  Morphism n;  // K -> D
  Morphism g;  // G -> D, an inclusion
  AttributeMap renaming;
  Graph renamedRule;
  Graph renamedPattern;
};

// Throws InvalidInclusion when L is not a subgraph of K or when `m` does not
// start at L.
PushoutResult pushout(const Graph& l, const Graph& k, const Morphism& m,
                      const FixedSet& fixed, FreshSupply& supply);

struct ImageResult {
  Graph h;
  Morphism p;          // R -> H, restriction of n
  Morphism inclusion;  // H -> D
};

// H = n(R) with p the restriction of n to R. Throws InvalidInclusion unless
// R ⊆ K = domain of n.
ImageResult imageFactorization(const Graph& r, const Morphism& n);

}  // namespace poim
