#pragma once

#include <string>
#include <vector>

#include "klab/monad/composite.hpp"
#include "klab/monad/dist.hpp"
#include "klab/monad/powerset.hpp"
#include "klab/nat/enumerate.hpp"

namespace klab {

/// Sets of finite distributions: a functor (composite values and maps) that
/// carries no monad structure at all — which is exactly what this suite
/// demonstrates.
using pd_functor = composite_monad<powerset_monad, dist_monad, void>;

struct PdReport {
  int unit_families = 0;
  bool diracs_only = false;       // elements satisfying both projections are diracs
  bool forced_value_escapes = false;  // the h-square needs a non-dirac value
  bool empty_unit_fails = false;
  std::string detail;
  bool pass() const {
    return unit_families == 2 && diracs_only && forced_value_escapes &&
           empty_unit_fails;
  }
};

/// Replays the argument that no multiplication can complete either unit
/// candidate of the set-of-distributions functor into a monad.
///
/// For the singleton-dirac unit: the two relabelling maps force every
/// distribution in mu(Xi) to be a dirac, while the collapsing map forces the
/// half-half mixture to appear — an empty intersection of constraints. For
/// the constant-empty unit: the first unit law pins mu(empty) to two
/// different values at once.
inline PdReport pd_suite() {
  PdReport rep;

  // (1) the fragment has exactly the two unit candidates
  {
    Universe<pd_functor> u(4, Bounds{.denom = 2, .max_support = 2});
    auto res = enumerate_units(u);
    rep.unit_families = res.complete ? (int)res.families.size() : -1;
  }

  // (2) constraints from the three maps on X = {a, b, c, d} = {0, 1, 2, 3}
  // f merges c into a and d into b; g merges d into a and c into b;
  // h merges b into a and d into c.
  auto supported_in = [](const Dist<int>& d, std::initializer_list<int> allowed) {
    for (auto& [x, w] : d.entries) {
      bool ok = false;
      for (int a : allowed) ok |= x == a;
      if (!ok) return false;
    }
    return true;
  };
  auto pred_f = [&](const Dist<int>& d) {
    return supported_in(d, {0, 2}) || supported_in(d, {1, 3});
  };
  auto pred_g = [&](const Dist<int>& d) {
    return supported_in(d, {0, 3}) || supported_in(d, {1, 2});
  };

  std::vector<int> carrier{0, 1, 2, 3};
  // denominators dividing 4 strengthen the check beyond the halves the
  // argument itself needs
  auto dists = dist_monad::enumerate(carrier, Bounds{.denom = 4});
  rep.diracs_only = true;
  for (const auto& d : dists)
    if (pred_f(d) && pred_g(d) && d.entries.size() != 1) rep.diracs_only = false;

  // images of diracs under h lie in {dirac a, dirac c}; the h-square forces
  // the mixture (a + c) / 2, which is not among them
  auto h = [](int x) { return x == 0 || x == 1 ? 0 : 2; };
  auto forced = Dist<int>::make({{0, Rat(1, 2)}, {2, Rat(1, 2)}});
  rep.forced_value_escapes = true;
  for (const auto& d : dists)
    if (d.entries.size() == 1 && dist_monad::map(d, h) == forced)
      rep.forced_value_escapes = false;

  // (3) the constant-empty unit: mu(empty set) would have to equal every U
  rep.empty_unit_fails = !(PSet<Dist<int>>{} ==
                           PSet<Dist<int>>{{Dist<int>::point(0)}});

  rep.detail = "units " + std::to_string(rep.unit_families) +
               "; dirac-only constraint " + (rep.diracs_only ? "holds" : "fails") +
               "; forced mixture 1/2 a + 1/2 c not a dirac image: " +
               (rep.forced_value_escapes ? "confirmed" : "refuted");
  return rep;
}

}  // namespace klab
