#include "poim/fixed_set.hpp"

namespace poim {

FixedSet FixedSet::IBOf(const Graph& graph) {
  FixedSet result(Kind::IBOf);
  result.blanks_ = std::make_shared<const std::set<Term>>(blanksOf(graph));
  return result;
}

bool FixedSet::contains(const Term& term) const {
  if (term.isResource()) return true;
  switch (kind_) {
    case Kind::I: return false;
    case Kind::IV: return term.isVariable();
    case Kind::IB: return term.isBlank();
    case Kind::IBV: return true;
    case Kind::IBOf: return term.isBlank() && blanks_->contains(term);
  }
  return false;
}

std::string FixedSet::name() const {
  switch (kind_) {
    case Kind::I: return "I";
    case Kind::IV: return "IV";
    case Kind::IB: return "IB";
    case Kind::IBV: return "IBV";
    case Kind::IBOf: return "IB(G)";
  }
  return "?";
}

}  // namespace poim
