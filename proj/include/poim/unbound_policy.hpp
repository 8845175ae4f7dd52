#pragma once

namespace poim {

// What to do with template triples that mention variables absent from the
// pattern. Strict rejects the query; DropTriples removes those triples first,
// like SPARQL's CONSTRUCT does with unbound variables.
enum class UnboundPolicy { Strict, DropTriples };

}  // namespace poim
