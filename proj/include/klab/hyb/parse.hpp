#pragma once

#include <stdexcept>
#include <string>

#include "klab/hyb/ast.hpp"

namespace klab::hyb {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

/// Parses the hybrid program grammar; collects variables in first-appearance
/// order, binds every term to that order, and checks that each atom's tuple
/// covers every variable exactly once.
HybProgram parse_hyb(const std::string& text);

}  // namespace klab::hyb
