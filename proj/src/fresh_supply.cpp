#include "poim/fresh_supply.hpp"

#include <cassert>

namespace poim {

Term FreshSupply::nextLike(const Term& like) {
  assert(like.isBlank() || like.isVariable());
  return like.isVariable() ? nextVariable() : nextBlank();
}

}  // namespace poim
