#include "poim/morphism.hpp"

#include <sstream>

#include "poim/error.hpp"

namespace poim {

const Term& Morphism::operator()(const Term& term) const {
  auto it = map_.find(term);
  if (it == map_.end()) {
    throw Error(ErrorCode::NotTotal,
                "term " + term.toString() + " is not an attribute of the domain");
  }
  return it->second;
}

Triple Morphism::operator()(const Triple& triple) const {
  return {(*this)(triple.subject), (*this)(triple.predicate),
          (*this)(triple.object)};
}

Graph Morphism::image() const { return applyMap(map_, *domain_); }

Morphism checkMorphism(AttributeMap map, std::shared_ptr<const Graph> domain,
                       std::shared_ptr<const Graph> codomain, FixedSet fixed) {
  const auto attrs = attributes(*domain);
  AttributeMap restricted;
  for (const auto& term : attrs) {
    auto it = map.find(term);
    if (it == map.end()) {
      throw Error(ErrorCode::NotTotal,
                  "map is undefined on attribute " + term.toString());
    }
    restricted.emplace(term, std::move(it->second));
  }
  for (const auto& triple : *domain) {
    Triple image = applyMap(restricted, triple);
    if (!codomain->contains(image)) {
      std::ostringstream msg;
      msg << "image (" << image << ") of (" << triple
          << ") is not in the codomain";
      throw Error(ErrorCode::NotHomomorphism, msg.str());
    }
  }
  for (const auto& [from, to] : restricted) {
    if (fixed.contains(from) && from != to) {
      throw Error(ErrorCode::ViolatesFixing,
                  "map moves " + from.toString() + " which must stay fixed in " +
                      fixed.name());
    }
  }
  return Morphism(std::move(domain), std::move(codomain),
                  std::move(restricted), std::move(fixed));
}

Morphism checkMorphism(AttributeMap map, const Graph& domain,
                       const Graph& codomain, FixedSet fixed) {
  return checkMorphism(std::move(map), std::make_shared<const Graph>(domain),
                       std::make_shared<const Graph>(codomain),
                       std::move(fixed));
}

Morphism identityMorphism(const Graph& graph, FixedSet fixed) {
  AttributeMap map;
  for (const auto& term : attributes(graph)) map.emplace(term, term);
  auto shared = std::make_shared<const Graph>(graph);
  return checkMorphism(std::move(map), shared, shared, std::move(fixed));
}

Morphism inclusionMorphism(const Graph& sub, const Graph& super,
                           FixedSet fixed) {
  if (!sub.isSubgraphOf(super)) {
    throw Error(ErrorCode::InvalidInclusion, "graph is not a subgraph");
  }
  AttributeMap map;
  for (const auto& term : attributes(sub)) map.emplace(term, term);
  return checkMorphism(std::move(map), sub, super, std::move(fixed));
}

Morphism compose(const Morphism& second, const Morphism& first) {
  if (!(first.codomain() == second.domain())) {
    throw Error(ErrorCode::NotHomomorphism,
                "cannot compose: codomain and domain differ");
  }
  AttributeMap map;
  for (const auto& [from, mid] : first.map()) map.emplace(from, second(mid));
  return checkMorphism(std::move(map), first.sharedDomain(),
                       second.sharedCodomain(), first.fixed());
}

bool isIsomorphism(const Morphism& morphism) {
  std::set<Term> seen;
  for (const auto& [from, to] : morphism.map()) {
    if (!seen.insert(to).second) return false;
  }
  return morphism.image() == morphism.codomain();
}

}  // namespace poim
