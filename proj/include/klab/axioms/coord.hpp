#pragma once

#include "klab/nat/spec.hpp"

namespace klab {

/// Coordinate-level axiom criteria for the coproduct-of-homs monads. These
/// decide an axiom from the coordinates alone, with no extensional sweep;
/// the extensional checker must agree with them on every fragment (tested).

/// Commutative iff swapping the summands carries s_ij to s_ji; on a diagonal
/// coordinate this forces the empty-domain map.
inline bool coord_commutative(const MaybeCode& c) {
  return c.both == M2Coord::Bot && c.left_only == c.right_only;
}

/// No evolution has an empty domain, so no hybrid scheme is commutative.
inline bool coord_commutative(const HybridScheme&) { return false; }

/// Idempotent iff every diagonal coordinate is a section of the codiagonal.
inline bool coord_idempotent(const MaybeCode& c) {
  return c.both == M2Coord::Left || c.both == M2Coord::Right;
}

/// For hybrid schemes: the diagonal coordinate at duration i must keep
/// duration i and route every instant to the same instant on either side.
inline bool coord_idempotent(const HybridScheme& s, int max_duration = 3) {
  for (int i = 0; i <= max_duration; ++i) {
    auto r = s.coords(i, i);
    if (r.duration != i) return false;
    for (int t = 0; t <= i; ++t)
      if (r.route[(std::size_t)t].second != t) return false;
  }
  return true;
}

/// The bottom constant is a unit iff both mixed coordinates keep the value.
inline bool coord_has_unit_bottom(const MaybeCode& c) {
  return c.left_only == M1Coord::Keep && c.right_only == M1Coord::Keep;
}

/// Hybrid has no constants, so nothing can be a unit.
inline bool coord_has_unit(const HybridScheme&) { return false; }

}  // namespace klab
