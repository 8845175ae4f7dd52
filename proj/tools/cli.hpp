#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "poim/graph.hpp"

namespace poim::cli {

// Exit statuses of `poimq`.
enum Status : int {
  kOk = 0,
  kUsage = 1,     // bad arguments, unreadable file, parse error
  kSemantic = 2,  // rejected by evaluation (unbound variables, ...)
  kMismatch = 3,  // `diff` found a disagreement, `iso` found none
};

// Runs `poimq` with `args` (program name excluded). Results go to `out`,
// diagnostics to `err`.
int runCli(std::vector<std::string> args, std::ostream& out,
           std::ostream& err);

// The check behind `diff` for construct queries: every pair of named results
// must be isomorphic in DGr_I. Prints the first disagreeing pair with both
// serializations and returns kMismatch, else returns kOk.
int compareGraphs(const std::vector<std::pair<std::string, Graph>>& results,
                  std::ostream& out);

}  // namespace poim::cli
