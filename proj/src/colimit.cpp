#include "poim/colimit.hpp"

#include <memory>

#include "poim/error.hpp"

namespace poim {

CoproductResult coproduct(const std::vector<Graph>& parts,
                          const FixedSet& fixed, FreshSupply& supply) {
  CoproductResult result;
  std::vector<AttributeMap> renamings;
  renamings.reserve(parts.size());
  for (const auto& part : parts) {
    AttributeMap renaming;
    for (const auto& term : attributes(part)) {
      renaming.emplace(term,
                       fixed.contains(term) ? term : supply.nextLike(term));
    }
    result.graph.insertAll(applyMap(renaming, part));
    renamings.push_back(std::move(renaming));
  }
  auto shared = std::make_shared<const Graph>(result.graph);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    result.injections.push_back(
        checkMorphism(std::move(renamings[i]),
                      std::make_shared<const Graph>(parts[i]), shared, fixed));
  }
  return result;
}

PushoutResult pushout(const Graph& l, const Graph& k, const Morphism& m,
                      const FixedSet& fixed, FreshSupply& supply) {
  if (!l.isSubgraphOf(k)) {
    throw Error(ErrorCode::InvalidInclusion, "pattern is not a subgraph of the rule");
  }
  if (!(m.domain() == l)) {
    throw Error(ErrorCode::InvalidInclusion, "match does not start at the pattern");
  }
  for (const auto& [from, to] : m.map()) {
    if (fixed.contains(from) && from != to) {
      throw Error(ErrorCode::ViolatesFixing,
                  "match moves fixed attribute " + from.toString());
    }
  }
  const Graph& g = m.codomain();
  const auto gAttrs = attributes(g);
  const auto kAttrs = attributes(k);
  const auto lAttrs = attributes(l);

  // Make |K'| ∩ |G| ⊆ C.
  AttributeMap renaming;
  for (const auto& term : kAttrs) {
    bool clash = !fixed.contains(term) && gAttrs.contains(term);
    renaming.emplace(term, clash ? supply.nextLike(term) : term);
  }
  Graph renamedRule = applyMap(renaming, k);
  Graph renamedPattern = applyMap(renaming, l);

  // N(x) = m(x) on |L'|, identity elsewhere.
  AttributeMap extension;
  for (const auto& term : kAttrs) {
    const Term& renamed = renaming.at(term);
    extension.emplace(renamed, lAttrs.contains(term) ? m(term) : renamed);
  }
  Graph d = g;
  d.insertAll(applyMap(extension, renamedRule));

  // n = N ∘ renaming, on the original K.
  AttributeMap nMap;
  for (const auto& term : kAttrs) {
    nMap.emplace(term, extension.at(renaming.at(term)));
  }
  auto sharedD = std::make_shared<const Graph>(std::move(d));
  Morphism n = checkMorphism(std::move(nMap),
                             std::make_shared<const Graph>(k), sharedD, fixed);
  AttributeMap gMap;
  for (const auto& term : gAttrs) gMap.emplace(term, term);
  Morphism gIncl =
      checkMorphism(std::move(gMap), m.sharedCodomain(), sharedD, fixed);
  return PushoutResult{*sharedD,
                       std::move(n),
                       std::move(gIncl),
                       std::move(renaming),
                       std::move(renamedRule),
                       std::move(renamedPattern)};
}

ImageResult imageFactorization(const Graph& r, const Morphism& n) {
  if (!r.isSubgraphOf(n.domain())) {
    throw Error(ErrorCode::InvalidInclusion,
                "right-hand side is not a subgraph of the rule");
  }
  auto h = std::make_shared<const Graph>(applyMap(n.map(), r));
  AttributeMap pMap;
  for (const auto& term : attributes(r)) pMap.emplace(term, n(term));
  Morphism p = checkMorphism(std::move(pMap), std::make_shared<const Graph>(r),
                             h, n.fixed());
  AttributeMap hMap;
  for (const auto& term : attributes(*h)) hMap.emplace(term, term);
  Morphism inclusion =
      checkMorphism(std::move(hMap), h, n.sharedCodomain(), n.fixed());
  return ImageResult{*h, std::move(p), std::move(inclusion)};
}

}  // namespace poim
