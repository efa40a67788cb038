#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace klab::hyb {

/// Affine term over the program's variable vector: coeff . x + constant.
struct AffineTerm {
  Eigen::VectorXd coeff;
  double constant = 0.0;

  double eval(const Eigen::VectorXd& x) const { return coeff.dot(x) + constant; }
};

/// Predicate over states: conjunctions/disjunctions of affine <= / >= atoms.
/// Only closed comparisons, so the satisfaction region is closed.
struct HybPred {
  enum class Kind { Leq, Geq, And, Or };
  Kind kind = Kind::Leq;
  AffineTerm lhs, rhs;        // atoms
  std::vector<HybPred> kids;  // connectives

  bool eval(const Eigen::VectorXd& x) const {
    switch (kind) {
      case Kind::Leq: return lhs.eval(x) <= rhs.eval(x);
      case Kind::Geq: return lhs.eval(x) >= rhs.eval(x);
      case Kind::And: return kids[0].eval(x) && kids[1].eval(x);
      case Kind::Or: return kids[0].eval(x) || kids[1].eval(x);
    }
    return false;
  }
};

/// Atomic statement: a total assignment tuple or a total flow tuple with a
/// duration or event trigger.
struct HybAtom {
  enum class Kind { Assign, Flow };
  enum class Trigger { Duration, Event };
  Kind kind = Kind::Assign;
  std::vector<AffineTerm> terms;  // one per variable, in variable order
  Trigger trigger = Trigger::Duration;
  double duration = 0.0;
  HybPred event;
};

struct HybStmt {
  enum class Kind { Skip, Atom, Seq, Choice };
  Kind kind = Kind::Skip;
  HybAtom atom;
  std::vector<HybStmt> kids;  // two for Seq / Choice
};

/// A parsed program: the variable list (first-appearance order) and the
/// statement tree with all terms bound to that variable order.
struct HybProgram {
  std::vector<std::string> vars;
  HybStmt root;
  bool has_choice = false;
  bool has_event = false;
  bool has_duration = false;
};

struct NumericConfig {
  double step = 1e-3;     // event scan step (s)
  double eps = 1e-9;      // bisection tolerance (s)
  double t_max = 100.0;   // event horizon (s)
  double dt = 0.01;       // output sampling step (s)

  void validate() const {
    if (!(step > 0) || !(eps > 0) || !(t_max > 0) || !(dt > 0))
      throw std::invalid_argument("numeric config: all values must be positive");
    if (eps > step)
      throw std::invalid_argument("numeric config: eps must not exceed step");
  }
};

}  // namespace klab::hyb
