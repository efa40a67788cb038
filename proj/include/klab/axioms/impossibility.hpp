#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "klab/axioms/coord.hpp"
#include "klab/nat/enumerate.hpp"
#include "klab/nat/naturality.hpp"
#include "klab/nat/spec.hpp"

namespace klab {

/// Recovers the coordinate code of an enumerated Maybe family by reading off
/// its values on the three generating inputs at carrier 2, and confirms the
/// whole table matches that code.
inline std::optional<MaybeCode> extract_maybe_code(const Universe<maybe_monad>& u,
                                                   const TableFamily& fam) {
  TupleInputs<maybe_monad> in(u, 2);
  auto out_at = [&](const Maybe<int>& a, const Maybe<int>& b) {
    long long t = in.encode(2, {u.val_index(2, a), u.val_index(2, b)});
    return u.out_vals(2)[(std::size_t)fam.at(2, t)];
  };
  Maybe<int> j0(0), j1(1), bot;
  MaybeCode code;
  auto on_both = out_at(j0, j1);
  if (on_both == j0)
    code.both = M2Coord::Left;
  else if (on_both == j1)
    code.both = M2Coord::Right;
  else if (!on_both)
    code.both = M2Coord::Bot;
  else
    return std::nullopt;
  code.left_only = out_at(j0, bot) == j0 ? M1Coord::Keep : M1Coord::Drop;
  code.right_only = out_at(bot, j0) == j0 ? M1Coord::Keep : M1Coord::Drop;

  auto coded = materialize<maybe_monad>(
      u, 2, [&](int, std::span<const Maybe<int>> args) {
        return apply_nt(code, args[0], args[1]);
      });
  if (!(coded == fam)) return std::nullopt;
  return code;
}

struct ImpossibilityReport {
  // (a) Maybe classification counts
  int maybe_total = 0;
  int maybe_commutative = 0;
  int maybe_idempotent = 0;
  int maybe_both = 0;
  int maybe_with_unit = 0;
  bool coord_matches_extensional = false;

  // (b) continuity obstruction for subdistribution units
  struct PhiFailure {
    std::string phi_name;
    int n;             // first n with a unit-law failure at mass 1/n
    std::string text;  // the violated instance
  };
  std::vector<PhiFailure> phi_failures;
  bool all_phis_fail = false;

  // (c) powerset: union is commutative+idempotent+unit, but the only unit is
  // the empty set, so non-empty powersets have none
  bool union_comm_idem_unit = false;
  bool qset_has_no_unit = false;

  bool pass = false;
  std::string detail;
};

/// Named continuous candidate for the subdistribution weight map.
struct PhiCandidate {
  std::string name;
  std::function<std::pair<Rat, Rat>(const Rat&, const Rat&)> phi;
};

inline std::vector<PhiCandidate> default_phi_candidates() {
  std::vector<PhiCandidate> out;
  out.push_back({"normalized swap r2/(r1+r2), r1/(r1+r2)",
                 [](const Rat& r1, const Rat& r2) {
                   Rat s = r1 + r2;
                   if (s.is_zero()) return std::pair<Rat, Rat>(Rat(0), Rat(0));
                   return std::pair<Rat, Rat>(r2 / s, r1 / s);
                 }});
  out.push_back({"constant halves", [](const Rat&, const Rat&) {
                   return std::pair<Rat, Rat>(Rat(1, 2), Rat(1, 2));
                 }});
  out.push_back({"scaled average", [](const Rat& r1, const Rat& r2) {
                   return std::pair<Rat, Rat>(r1 * Rat(1, 2), r2 * Rat(1, 2));
                 }});
  return out;
}

/// The negative results: no commutative idempotent binary operation exists
/// for Maybe (checked by filtering the complete enumeration through the
/// coordinate criteria), no continuous weight map can give subdistributions
/// a unit (checked on the paper's mass sequence), and non-empty powersets
/// have no unit for union (checked on the fragment).
inline ImpossibilityReport impossibility_suite(
    std::vector<PhiCandidate> phis = default_phi_candidates(), int max_n = 16) {
  ImpossibilityReport rep;

  // (a) enumerate and filter through the coordinate criteria
  Universe<maybe_monad> u(3, Bounds{});
  auto res = enumerate_natural(u, 2);
  rep.maybe_total = (int)res.families.size();
  rep.coord_matches_extensional = true;
  for (const auto& fam : res.families) {
    auto code = extract_maybe_code(u, fam);
    if (!code) {
      rep.coord_matches_extensional = false;
      continue;
    }
    bool comm = coord_commutative(*code);
    bool idem = coord_idempotent(*code);
    rep.maybe_commutative += comm;
    rep.maybe_idempotent += idem;
    rep.maybe_both += comm && idem;
    rep.maybe_with_unit += coord_has_unit_bottom(*code);

    // the criteria must agree with a direct extensional sweep over the whole
    // fragment (carrier 1 alone cannot witness non-commutativity)
    bool ext_comm = true, ext_idem = true;
    for (int m = 1; m <= u.max_carrier(); ++m)
      for (const auto& a : u.vals(m))
        for (const auto& b : u.vals(m)) {
          ext_comm &= apply_nt(*code, a, b) == apply_nt(*code, b, a);
          ext_idem &= !(a == b) || apply_nt(*code, a, b) == a;
        }
    if (ext_comm != comm || ext_idem != idem)
      rep.coord_matches_extensional = false;
  }

  // (b) each continuous phi candidate must break a unit law at some 1/n mass
  rep.all_phis_fail = !phis.empty();
  for (auto& cand : phis) {
    bool found = false;
    for (int n = 2; n <= max_n && !found; ++n) {
      SubDist<int> mu = SubDist<int>::make(
          {{Maybe<int>(0), Rat(1, n)}, {Maybe<int>{}, Rat(n - 1, n)}});
      SubDist<int> star = SubDist<int>::point(Maybe<int>{});
      SubDistWeights w{cand.phi};
      bool right_ok = apply_nt(w, mu, star) == mu;
      bool left_ok = apply_nt(w, star, mu) == mu;
      if (!right_ok || !left_ok) {
        found = true;
        rep.phi_failures.push_back(
            {cand.name, n,
             "unit law fails on mu = 1/" + std::to_string(n) + " delta_x + " +
                 std::to_string(n - 1) + "/" + std::to_string(n) + " bottom"});
      }
    }
    if (!found) rep.all_phis_fail = false;
  }

  // (c) union on powersets vs the non-empty fragment
  {
    Bounds b;
    std::vector<int> carrier{0, 1, 2};
    auto sets = powerset_monad::enumerate(carrier, b);
    PSet<int> empty;
    bool ok = true;
    for (const auto& a : sets) {
      ok &= set_union(a, empty) == a && set_union(empty, a) == a;
      ok &= set_union(a, a) == a;
      for (const auto& c : sets) ok &= set_union(a, c) == set_union(c, a);
    }
    rep.union_comm_idem_unit = ok;
    auto qsets = qset_monad::enumerate(carrier, b);
    rep.qset_has_no_unit = true;
    for (const auto& cand : qsets) {
      bool is_unit = true;
      for (const auto& a : qsets)
        is_unit &= set_union(a, cand) == a && set_union(cand, a) == a;
      if (is_unit) rep.qset_has_no_unit = false;
    }
  }

  rep.pass = rep.maybe_total == 12 && rep.maybe_both == 0 &&
             rep.coord_matches_extensional && rep.all_phis_fail &&
             rep.union_comm_idem_unit && rep.qset_has_no_unit;
  rep.detail = std::to_string(rep.maybe_total) + " families; commutative " +
               std::to_string(rep.maybe_commutative) + "; idempotent " +
               std::to_string(rep.maybe_idempotent) + "; both " +
               std::to_string(rep.maybe_both) + "; with unit " +
               std::to_string(rep.maybe_with_unit);
  return rep;
}

}  // namespace klab
