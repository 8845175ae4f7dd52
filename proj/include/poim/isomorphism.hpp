#pragma once

#include <optional>

#include "poim/fixed_set.hpp"
#include "poim/fresh_supply.hpp"
#include "poim/graph.hpp"
#include "poim/morphism.hpp"

namespace poim {

// Searches for an isomorphism g1 → g2 in tgr_C: identity on the fixed
// attributes, a bijection between the non-fixed ones, and a(g1) = g2.
//
// Non-fixed attributes of g1 are assigned one at a time (most constrained
// first) to unused non-fixed attributes of g2 of the same refined colour.
// Colours start from the per-position incidence counts and are refined by
// neighbourhood until stable; every triple whose attributes are all decided
// is checked immediately. The first witness in this deterministic order is
// returned.
std::optional<Morphism> findIsomorphism(const Graph& g1, const Graph& g2,
                                        const FixedSet& fixed);

inline bool isomorphic(const Graph& g1, const Graph& g2,
                       const FixedSet& fixed) {
  return findIsomorphism(g1, g2, fixed).has_value();
}

struct RenamedGraph {
  Graph graph;
  AttributeMap renaming;  // old blank -> fresh blank
};

// Replaces every blank by a fresh one, injectively. Other attributes are
// untouched, so the result is isomorphic to `graph` in DGr_I.
RenamedGraph renameBlanks(const Graph& graph, FreshSupply& supply);

}  // namespace poim
