#pragma once

#include <memory>
#include <set>
#include <string>

#include "poim/graph.hpp"

namespace poim {

// The subset C of attributes that morphisms must fix. All supported sets
// contain I and are infinite, so they are kept symbolic: membership is
// decided from the term kind, plus a blank lookup for IB(G).
class FixedSet {
 public:
  enum class Kind { I, IV, IB, IBV, IBOf };

  static FixedSet I() { return FixedSet(Kind::I); }
  static FixedSet IV() { return FixedSet(Kind::IV); }
  static FixedSet IB() { return FixedSet(Kind::IB); }
  static FixedSet IBV() { return FixedSet(Kind::IBV); }
  // I ∪ |G|_B
  static FixedSet IBOf(const Graph& graph);

  Kind kind() const noexcept { return kind_; }
  bool contains(const Term& term) const;
  std::string name() const;

 private:
  explicit FixedSet(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::shared_ptr<const std::set<Term>> blanks_;
};

}  // namespace poim
