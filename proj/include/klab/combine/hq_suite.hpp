#pragma once

#include <string>

#include "klab/monad/composite.hpp"
#include "klab/monad/laws.hpp"

namespace klab {

struct HqReport {
  LawReport law;             // four diagrams for the non-empty variant
  bool full_powerset_theta_fails = false;
  std::string theta_witness;
  bool union_commutative = false;
  bool union_idempotent = false;
  bool union_associative = false;
  bool union_has_no_unit = false;
  bool pass() const {
    return law.pass && full_powerset_theta_fails && union_commutative &&
           union_idempotent && union_associative && union_has_no_unit;
  }
};

/// Distributive-law verification for the selection map on set-valued
/// trajectories: the non-empty variant satisfies all four diagrams; the full
/// powerset breaks the start-point equation as soon as a later instant
/// carries the empty set. Also checks the inherited union operation on
/// sets of trajectories.
inline HqReport hq_suite(int carrier = 2, int max_duration = 2,
                         int max_subsets = 2, Exec exec = default_exec()) {
  HqReport rep;

  LawFragment frag;
  frag.carrier = carrier;
  frag.level1 = Bounds{.max_duration = max_duration, .max_support = max_subsets};
  frag.level2 = Bounds{.max_duration = max_duration, .max_support = max_subsets};
  frag.level3 = Bounds{.max_duration = 1, .max_support = max_subsets};
  frag.carrier_cap = 48;
  rep.law = check_distributive_law<qset_monad, dtraj_monad,
                                   selections_over_dtraj<true>>(frag, exec);

  // theta equation with the full powerset: the set of selection start
  // points must equal the set at instant 0; an empty later instant gives
  // no selections at all.
  {
    std::vector<int> base(carrier);
    for (int i = 0; i < carrier; ++i) base[(std::size_t)i] = i;
    Bounds b{.max_duration = max_duration, .max_support = max_subsets};
    auto pw = powerset_monad::enumerate(base, b);
    std::sort(pw.begin(), pw.end());
    auto trajs = dtraj_monad::enumerate(pw, b);
    for (const auto& f : trajs) {
      PSet<int> theta_direct = f.start();
      auto sels = selections_over_dtraj<false>::apply<int>(f);
      PSet<int> theta_through;
      for (const auto& g : sels.elems)
        theta_through = set_union(theta_through, PSet<int>{{g.start()}});
      if (!(theta_direct == theta_through)) {
        rep.full_powerset_theta_fails = true;
        rep.theta_witness =
            "f = " + show(f) + ": theta(f) = " + show(theta_direct) +
            " but selections give " + show(theta_through);
        break;
      }
    }
  }

  // union on non-empty sets of trajectories
  {
    std::vector<int> base(carrier);
    for (int i = 0; i < carrier; ++i) base[(std::size_t)i] = i;
    Bounds b{.max_duration = 1, .max_support = max_subsets};
    auto vals = qh_monad::enumerate(base, b);
    rep.union_commutative = rep.union_idempotent = rep.union_associative = true;
    for (const auto& a : vals) {
      if (!(set_union(a, a) == a)) rep.union_idempotent = false;
      for (const auto& c : vals) {
        if (!(set_union(a, c) == set_union(c, a))) rep.union_commutative = false;
        for (const auto& d : vals)
          if (!(set_union(set_union(a, c), d) == set_union(a, set_union(c, d))))
            rep.union_associative = false;
      }
    }
    rep.union_has_no_unit = true;
    for (const auto& cand : vals) {
      bool is_unit = true;
      for (const auto& a : vals)
        is_unit &= set_union(a, cand) == a && set_union(cand, a) == a;
      if (is_unit) rep.union_has_no_unit = false;
    }
  }
  return rep;
}

}  // namespace klab
