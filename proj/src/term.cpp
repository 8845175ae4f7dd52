#include "poim/term.hpp"

#include <ostream>

namespace poim {

namespace {

std::string escapeLiteral(const std::string& value) {
  std::string out;
  out.reserve(value.size() + 2);
  out += '"';
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

std::string Term::toString() const {
  switch (kind_) {
    case TermKind::Iri:
      // Unresolved abbreviations keep their leading colon as identity.
      if (!label_.empty() && label_.front() == ':') return label_;
      return "<" + label_ + ">";
    case TermKind::Literal:
      return escapeLiteral(label_);
    case TermKind::Blank:
      return "_:" + label_;
    case TermKind::Variable:
      return "?" + label_;
  }
  return label_;
}

std::ostream& operator<<(std::ostream& os, const Term& term) {
  return os << term.toString();
}

std::ostream& operator<<(std::ostream& os, const Triple& triple) {
  return os << triple.subject << ' ' << triple.predicate << ' '
            << triple.object;
}

}  // namespace poim
