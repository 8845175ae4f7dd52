#pragma once

#include <memory>

#include "poim/fixed_set.hpp"
#include "poim/graph.hpp"

namespace poim {

// A validated morphism of graphs: a total map on |domain| whose triple image
// lies in the codomain and which fixes every attribute in `fixed`. Instances
// are only produced by `checkMorphism` and the helpers built on it, so every
// Morphism value satisfies those three properties. Domain and codomain are
// shared immutable graphs, which keeps copies cheap.
class Morphism {
 public:
  const Graph& domain() const noexcept { return *domain_; }
  const Graph& codomain() const noexcept { return *codomain_; }
  const std::shared_ptr<const Graph>& sharedDomain() const noexcept {
    return domain_;
  }
  const std::shared_ptr<const Graph>& sharedCodomain() const noexcept {
    return codomain_;
  }
  const AttributeMap& map() const noexcept { return map_; }
  const FixedSet& fixed() const noexcept { return fixed_; }

  // |a|(x). Throws NotTotal for terms outside |domain|.
  const Term& operator()(const Term& term) const;
  Triple operator()(const Triple& triple) const;
  // a(domain) ⊆ codomain
  Graph image() const;

 private:
  friend Morphism checkMorphism(AttributeMap map,
                                std::shared_ptr<const Graph> domain,
                                std::shared_ptr<const Graph> codomain,
                                FixedSet fixed);

  Morphism(std::shared_ptr<const Graph> domain,
           std::shared_ptr<const Graph> codomain, AttributeMap map,
           FixedSet fixed)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        map_(std::move(map)),
        fixed_(std::move(fixed)) {}

  std::shared_ptr<const Graph> domain_;
  std::shared_ptr<const Graph> codomain_;
  AttributeMap map_;
  FixedSet fixed_;
};

// Validates totality, the homomorphism condition and fixing, in that order,
// throwing NotTotal, NotHomomorphism or ViolatesFixing. Keys outside
// |domain| are dropped.
Morphism checkMorphism(AttributeMap map, std::shared_ptr<const Graph> domain,
                       std::shared_ptr<const Graph> codomain, FixedSet fixed);
Morphism checkMorphism(AttributeMap map, const Graph& domain,
                       const Graph& codomain, FixedSet fixed);

Morphism identityMorphism(const Graph& graph, FixedSet fixed);
// Throws InvalidInclusion unless sub ⊆ super.
Morphism inclusionMorphism(const Graph& sub, const Graph& super,
                           FixedSet fixed);
// second ∘ first; the codomain of `first` must equal the domain of `second`.
Morphism compose(const Morphism& second, const Morphism& first);

// Bijective on attributes with a(g1) = g2, in tgr_C.
bool isIsomorphism(const Morphism& morphism);

}  // namespace poim
