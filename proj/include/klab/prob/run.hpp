#pragma once

#include "klab/prob/ast.hpp"
#include "klab/prob/atoms.hpp"

namespace klab::prob {

/// Kernel denotation in the base fragment (pure distributions). Rejects
/// Zero, tests, and if-then-else with a fragment error.
Kernel<dist_monad> interpret_prob(const ProbProg& prog, const AtomTable& atoms);

/// Kernel denotation in the extended fragment over failure-extended
/// distributions.
Kernel<DM> interpret_prob_plus(const ProbProg& prog, const AtomTable& atoms,
                               SelectionPolicy policy = SelectionPolicy::LeftBiased);

Dist<int> run_prob(const ProbProg& prog, const AtomTable& atoms, int state);
SubDist<int> run_prob_plus(const ProbProg& prog, const AtomTable& atoms, int state,
                           SelectionPolicy policy = SelectionPolicy::LeftBiased);

}  // namespace klab::prob
