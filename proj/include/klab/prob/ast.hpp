#pragma once

#include <string>
#include <vector>

#include "klab/rat.hpp"

namespace klab::prob {

/// Probabilistic program syntax. The base fragment is Skip / Atom / Seq /
/// Convex; Zero, tests and if-then-else belong to the extended fragment and
/// are rejected by the base interpreter.
struct ProbProg {
  enum class Kind { Atom, Skip, Zero, Seq, Convex, Ite, TestStmt };
  Kind kind = Kind::Skip;
  std::string name;  // Atom payload; test name for Ite / TestStmt
  Rat lambda;        // Convex parameter in [0,1]
  std::vector<ProbProg> kids;

  bool base_fragment() const {
    if (kind == Kind::Zero || kind == Kind::Ite || kind == Kind::TestStmt)
      return false;
    for (const auto& k : kids)
      if (!k.base_fragment()) return false;
    return true;
  }

  static ProbProg atom(std::string n) {
    ProbProg p;
    p.kind = Kind::Atom;
    p.name = std::move(n);
    return p;
  }
  static ProbProg seq(ProbProg a, ProbProg b) {
    ProbProg p;
    p.kind = Kind::Seq;
    p.kids = {std::move(a), std::move(b)};
    return p;
  }
  static ProbProg convex(Rat lambda, ProbProg a, ProbProg b) {
    ProbProg p;
    p.kind = Kind::Convex;
    p.lambda = lambda;
    p.kids = {std::move(a), std::move(b)};
    return p;
  }
};

}  // namespace klab::prob
