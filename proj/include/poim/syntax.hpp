#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "poim/graph.hpp"
#include "poim/select.hpp"

// Text formats for graphs (`.dg`) and queries (`.rq`).
//
//   document := (prefix | triple ('.' triple)* '.'?)*
//   prefix   := '@prefix' ':' '<' iri '>' '.'?  |  'PREFIX' ':' '<' iri '>'
//   triple   := term term term
//   term     := ':' name | '<' iri '>' | '"' chars '"' | '_:' name | '?' name
//   query    := prefix* ( 'CONSTRUCT' '{' document '}' 'WHERE' '{' document '}'
//                       | 'SELECT' ('?' name)+ 'WHERE' '{' document '}' )
//
// Names are [A-Za-z0-9_-]+ (no '-' in variables). Literal escapes are \" \\ \n
// and \t. `#` starts a comment that runs to the end of the line. Keywords are
// case-insensitive. `:name` resolves against the declared default prefix;
// without a declaration the IRI keeps ":name" as its identity.
namespace poim {

// Data graph; variables are rejected (VariableInData).
Graph parseData(std::string_view text);

// Query graph; variables allowed.
Graph parsePattern(std::string_view text);

struct ConstructQuery {
  Graph pattern;  // WHERE
  Graph templ;    // CONSTRUCT
};

using Query = std::variant<ConstructQuery, SelectQuery>;

Query parseQuery(std::string_view text);

// One triple per line in canonical order, lines separated by " .\n" and no
// trailing separator. With `canonicalBlanks` blanks are relabelled _:b1,
// _:b2, ... in order of first occurrence.
std::string serializeGraph(const Graph& graph, bool canonicalBlanks = false);

}  // namespace poim
