#pragma once

#include <vector>

#include "poim/fresh_supply.hpp"
#include "poim/graph.hpp"
#include "poim/matcher.hpp"
#include "poim/unbound_policy.hpp"

namespace poim {

// The transformation rule L ⊆ K ⊇ R of a basic construct query, with
// |L|_B ∩ |R|_B = ∅, |R|_V ⊆ |L|_V and K = L ∪ R.
class ConstructRule {
 public:
  // Validates the invariants above; throws UnboundVariables or
  // InvalidInclusion (shared blanks).
  static ConstructRule fromDisjoint(Graph pattern, Graph templ);

  const Graph& pattern() const noexcept { return pattern_; }   // L
  const Graph& templ() const noexcept { return templ_; }       // R
  const Graph& combined() const noexcept { return combined_; } // K

 private:
  ConstructRule(Graph pattern, Graph templ, Graph combined)
      : pattern_(std::move(pattern)),
        templ_(std::move(templ)),
        combined_(std::move(combined)) {}

  Graph pattern_;
  Graph templ_;
  Graph combined_;
};

// Builds the rule of CONSTRUCT { r } WHERE { l }. Blanks of `r` are always
// replaced by fresh ones, which makes them disjoint from those of `l`.
ConstructRule makeRule(const Graph& l, const Graph& r, FreshSupply& supply,
                       UnboundPolicy policy = UnboundPolicy::Strict);

struct PoimResult {
  Graph h;     // result graph
  Match p;     // R -> H
  Graph d;     // pushout object
};

// One POIM step: pushout of L ⊆ K along m, then image factorization of
// R ⊆ K along the resulting K -> D.
PoimResult poimApply(const ConstructRule& rule, const Match& m,
                     FreshSupply& supply);

struct KFoldRule {
  ConstructRule rule;
  // copies[i] sends each attribute of K to its name in the i-th copy.
  std::vector<AttributeMap> copies;
};

// k disjoint copies of the rule, blanks and variables renamed per copy in L,
// K and R simultaneously.
KFoldRule kFoldRule(const ConstructRule& rule, std::size_t k,
                    FreshSupply& supply);

// One POIM step of the k-fold rule along the match that agrees with the i-th
// match of L on the i-th copy.
Graph constructHigh(const ConstructRule& rule, const Graph& g,
                    FreshSupply& supply);

// One POIM step per match on its image, then the coproduct of the local
// results fixing I and the blanks of `g`.
Graph constructLow(const ConstructRule& rule, const Graph& g,
                   FreshSupply& supply);

enum class Calculus { High, Low };

struct ConstructOptions {
  Calculus calculus = Calculus::Low;
  // Reject results that are not RDF graphs (NotRdfGraph).
  bool rdfStrict = false;
};

Graph constructEval(const ConstructRule& rule, const Graph& g,
                    FreshSupply& supply, const ConstructOptions& options = {});

}  // namespace poim
