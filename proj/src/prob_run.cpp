#include "klab/prob/run.hpp"

namespace klab::prob {

Kernel<dist_monad> interpret_prob(const ProbProg& prog, const AtomTable& atoms) {
  int n = (int)atoms.carrier.size();
  switch (prog.kind) {
    case ProbProg::Kind::Skip:
      return unit_kernel<dist_monad>(n);
    case ProbProg::Kind::Atom:
      return atoms.pure_atom(prog.name);
    case ProbProg::Kind::Seq:
      return kleisli<dist_monad>(interpret_prob(prog.kids[0], atoms),
                                 interpret_prob(prog.kids[1], atoms));
    case ProbProg::Kind::Convex: {
      auto l = interpret_prob(prog.kids[0], atoms);
      auto r = interpret_prob(prog.kids[1], atoms);
      Kernel<dist_monad> out;
      out.reserve(l.size());
      for (std::size_t x = 0; x < l.size(); ++x)
        out.push_back(convex(prog.lambda, l[x], r[x]));
      return out;
    }
    case ProbProg::Kind::Zero:
    case ProbProg::Kind::Ite:
    case ProbProg::Kind::TestStmt:
      throw std::invalid_argument(
          "program uses the extended fragment; run it with run-prob --extended");
  }
  throw std::logic_error("bad program node");
}

Kernel<DM> interpret_prob_plus(const ProbProg& prog, const AtomTable& atoms,
                               SelectionPolicy policy) {
  int n = (int)atoms.carrier.size();
  switch (prog.kind) {
    case ProbProg::Kind::Skip:
      return unit_kernel<DM>(n);
    case ProbProg::Kind::Zero:
      return constant_kernel<DM>(n, lifted_zero<dist_monad>());
    case ProbProg::Kind::Atom:
      return atoms.atom(prog.name);
    case ProbProg::Kind::TestStmt:
      return interpret_test<dist_monad>(atoms.test(prog.name));
    case ProbProg::Kind::Seq:
      return kleisli<DM>(interpret_prob_plus(prog.kids[0], atoms, policy),
                         interpret_prob_plus(prog.kids[1], atoms, policy));
    case ProbProg::Kind::Convex: {
      auto l = interpret_prob_plus(prog.kids[0], atoms, policy);
      auto r = interpret_prob_plus(prog.kids[1], atoms, policy);
      Kernel<DM> out;
      out.reserve(l.size());
      for (std::size_t x = 0; x < l.size(); ++x)
        out.push_back(convex(prog.lambda, l[x], r[x]));
      return out;
    }
    case ProbProg::Kind::Ite:
      return if_then_else<dist_monad>(
          atoms.test(prog.name), interpret_prob_plus(prog.kids[0], atoms, policy),
          interpret_prob_plus(prog.kids[1], atoms, policy), policy);
  }
  throw std::logic_error("bad program node");
}

Dist<int> run_prob(const ProbProg& prog, const AtomTable& atoms, int state) {
  auto k = interpret_prob(prog, atoms);
  return k.at((std::size_t)state);
}

SubDist<int> run_prob_plus(const ProbProg& prog, const AtomTable& atoms, int state,
                           SelectionPolicy policy) {
  auto k = interpret_prob_plus(prog, atoms, policy);
  return k.at((std::size_t)state);
}

}  // namespace klab::prob
