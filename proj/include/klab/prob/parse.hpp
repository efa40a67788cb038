#pragma once

#include <stdexcept>
#include <string>

#include "klab/prob/ast.hpp"

namespace klab::prob {

struct ProbParseError : std::runtime_error {
  int line, col;
  ProbParseError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

/// Parses the probabilistic grammar. `;` binds loosest, `+[r]` next; both
/// associate to the right; `else` extends as far as possible; parentheses
/// group.
ProbProg parse_prob(const std::string& text);

}  // namespace klab::prob
