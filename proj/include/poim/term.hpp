#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace poim {

// Declaration order is the canonical kind order used for sorting terms.
enum class TermKind : std::uint8_t { Iri, Literal, Blank, Variable };

// An attribute: a resource identifier (IRI or literal), a blank, or a
// variable. The kind tag keeps the four namespaces apart, so `_:x` and `?x`
// never compare equal.
class Term {
 public:
  Term(TermKind kind, std::string label)
      : kind_(kind), label_(std::move(label)) {}

  static Term iri(std::string label) { return {TermKind::Iri, std::move(label)}; }
  static Term literal(std::string value) {
    return {TermKind::Literal, std::move(value)};
  }
  static Term blank(std::string label) {
    return {TermKind::Blank, std::move(label)};
  }
  static Term variable(std::string label) {
    return {TermKind::Variable, std::move(label)};
  }

  TermKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

  bool isIri() const noexcept { return kind_ == TermKind::Iri; }
  bool isLiteral() const noexcept { return kind_ == TermKind::Literal; }
  bool isBlank() const noexcept { return kind_ == TermKind::Blank; }
  bool isVariable() const noexcept { return kind_ == TermKind::Variable; }
  // Member of I = Iri ∪ Lit.
  bool isResource() const noexcept { return isIri() || isLiteral(); }

  // Concrete syntax: `:name`, `<iri>`, `"literal"`, `_:label`, `?label`.
  std::string toString() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.label_.compare(b.label_) <=> 0;
  }

 private:
  TermKind kind_;
  std::string label_;
};

std::ostream& operator<<(std::ostream& os, const Term& term);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&,
                                          const Triple&) = default;
};

std::ostream& operator<<(std::ostream& os, const Triple& triple);

}  // namespace poim
