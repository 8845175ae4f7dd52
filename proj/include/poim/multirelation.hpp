#pragma once

#include <string>
#include <vector>

#include "poim/term.hpp"

namespace poim {

// An ordered multiset of tuples with named columns; the result of a SELECT.
// Rows are kept sorted, so equality is multiset equality.
class Multirelation {
 public:
  using Row = std::vector<Term>;

  Multirelation() = default;
  // Throws std::invalid_argument when a row's arity differs from the header.
  Multirelation(std::vector<std::string> header, std::vector<Row> rows);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  // Multiplicity of `row`.
  std::size_t count(const Row& row) const;

  friend bool operator==(const Multirelation&, const Multirelation&) = default;

 private:
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

// RFC 4180: CRLF line breaks, fields quoted when they contain a comma, a
// quote, CR or LF. Cells follow the SPARQL results CSV convention: a literal
// is written by value, an IRI without brackets, a blank as `_:label`.
std::string toCsv(const Multirelation& table);

// Space-padded columns under a header line.
std::string toText(const Multirelation& table);

}  // namespace poim
