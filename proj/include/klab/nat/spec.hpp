#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "klab/monad/discrete_traj.hpp"
#include "klab/monad/dist.hpp"
#include "klab/monad/maybe.hpp"
#include "klab/monad/multiset.hpp"
#include "klab/monad/powerset.hpp"
#include "klab/rat.hpp"

namespace klab {

// ---------------------------------------------------------------------------
// Convex combination on distributions: the only binary naturals of Dist.

struct ConvexCombo {
  Rat lambda;
};

template <class X>
Dist<X> apply_nt(const ConvexCombo& s, const Dist<X>& a, const Dist<X>& b) {
  return convex(s.lambda, a, b);
}

// ---------------------------------------------------------------------------
// Weighted-sum operations on multisets: output = sum_i w_i * bag_i where
// (w_1..w_n) = phi(total masses).

template <class S>
struct MultisetWeights {
  int arity = 2;
  std::function<std::vector<typename S::elem>(const std::vector<typename S::elem>&)> phi;
};

template <class S, class X>
MultiSet<X, S> apply_nt(const MultisetWeights<S>& s,
                        std::span<const MultiSet<X, S>> args) {
  if ((int)args.size() != s.arity)
    throw std::invalid_argument("MultisetWeights: arity mismatch");
  std::vector<typename S::elem> masses;
  masses.reserve(args.size());
  for (const auto& m : args) masses.push_back(m.total());
  auto ws = s.phi(masses);
  if (ws.size() != args.size())
    throw std::invalid_argument("MultisetWeights: phi arity mismatch");
  std::vector<std::pair<X, typename S::elem>> acc;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (auto& [x, w] : args[i].entries) acc.emplace_back(x, S::mul(ws[i], w));
  return MultiSet<X, S>::make(std::move(acc));
}

// ---------------------------------------------------------------------------
// Shrink-map operations on powersets: union of the arguments selected by
// phi applied to the non-emptiness pattern; phi(J) must be a subset of J.

struct PowersetShrink {
  int arity = 2;
  std::vector<unsigned> phi;  // indexed by bitmask J, value subset of J

  static PowersetShrink make(int arity, std::vector<unsigned> phi) {
    PowersetShrink s{arity, std::move(phi)};
    if (s.phi.size() != (std::size_t)1 << arity)
      throw std::invalid_argument("PowersetShrink: table size");
    for (unsigned j = 0; j < s.phi.size(); ++j)
      if ((s.phi[j] & ~j) != 0)
        throw std::invalid_argument("PowersetShrink: phi(J) not a subset of J");
    return s;
  }
};

template <class X>
PSet<X> apply_nt(const PowersetShrink& s, std::span<const PSet<X>> args) {
  if ((int)args.size() != s.arity)
    throw std::invalid_argument("PowersetShrink: arity mismatch");
  unsigned j = 0;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!args[i].empty()) j |= 1u << i;
  PSet<X> out;
  unsigned k = s.phi[j];
  for (std::size_t i = 0; i < args.size(); ++i)
    if (k & (1u << i)) out = set_union(out, args[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Mass-weighted operations on subdistributions: (q1, q2) = phi(mass a,
// mass b); the output keeps q1*a + q2*b on the live carrier, remainder on
// bottom. phi must land in {(r1, r2) : r1 + r2 <= 1}.

struct SubDistWeights {
  std::function<std::pair<Rat, Rat>(const Rat&, const Rat&)> phi;
};

template <class X>
SubDist<X> apply_nt(const SubDistWeights& s, const SubDist<X>& a,
                    const SubDist<X>& b) {
  auto [q1, q2] = s.phi(subdist_mass(a), subdist_mass(b));
  if (q1 < Rat(0) || q2 < Rat(0) || Rat(1) < q1 + q2)
    throw std::invalid_argument("SubDistWeights: phi escapes the simplex");
  std::vector<std::pair<Maybe<X>, Rat>> acc;
  Rat live(0);
  for (auto& [k, w] : a.entries)
    if (k) {
      acc.emplace_back(k, q1 * w);
      live += q1 * w;
    }
  for (auto& [k, w] : b.entries)
    if (k) {
      acc.emplace_back(k, q2 * w);
      live += q2 * w;
    }
  acc.emplace_back(Maybe<X>{}, Rat(1) - live);
  return SubDist<X>::make(std::move(acc));
}

// ---------------------------------------------------------------------------
// The twelve binary naturals of Maybe, by coproduct coordinates: what
// happens on (Just, Just), on (Just, bottom), and on (bottom, Just).

enum class M2Coord { Left, Right, Bot };
enum class M1Coord { Keep, Drop };

struct MaybeCode {
  M2Coord both = M2Coord::Left;
  M1Coord left_only = M1Coord::Keep;
  M1Coord right_only = M1Coord::Keep;

  friend bool operator==(const MaybeCode&, const MaybeCode&) = default;
};

inline std::vector<MaybeCode> all_maybe_codes() {
  std::vector<MaybeCode> out;
  for (M2Coord c2 : {M2Coord::Left, M2Coord::Right, M2Coord::Bot})
    for (M1Coord c10 : {M1Coord::Keep, M1Coord::Drop})
      for (M1Coord c01 : {M1Coord::Keep, M1Coord::Drop})
        out.push_back(MaybeCode{c2, c10, c01});
  return out;
}

inline std::string show(const MaybeCode& c) {
  auto c2 = c.both == M2Coord::Left    ? "Left"
            : c.both == M2Coord::Right ? "Right"
                                       : "Bot";
  auto c10 = c.left_only == M1Coord::Keep ? "Keep" : "Drop";
  auto c01 = c.right_only == M1Coord::Keep ? "Keep" : "Drop";
  return std::string("(") + c2 + "," + c10 + "," + c01 + ")";
}

template <class X>
Maybe<X> apply_nt(const MaybeCode& c, const Maybe<X>& a, const Maybe<X>& b) {
  if (a && b) {
    switch (c.both) {
      case M2Coord::Left: return a;
      case M2Coord::Right: return b;
      case M2Coord::Bot: return Maybe<X>{};
    }
  }
  if (a && !b) return c.left_only == M1Coord::Keep ? a : Maybe<X>{};
  if (!a && b) return c.right_only == M1Coord::Keep ? b : Maybe<X>{};
  return Maybe<X>{};
}

// ---------------------------------------------------------------------------
// Binary naturals of the hybrid monad, by coproduct coordinates s_ij: a
// result duration and a routing of every instant to one of the arguments.
// The closed forms cover the projections and concatenation; Custom carries
// an arbitrary rule (i, j) -> (k, route) validated against the fragment.

struct HybridScheme {
  enum class Kind { LeftProj, RightProj, Concat, Custom };
  struct Routed {
    int duration;
    std::vector<std::pair<int, int>> route;  // (0 = left | 1 = right, instant)
  };

  Kind kind = Kind::Concat;
  std::function<Routed(int, int)> custom;  // durations (i, j) -> coordinates

  Routed coords(int i, int j) const {
    Routed r;
    switch (kind) {
      case Kind::LeftProj:
        r.duration = i;
        for (int t = 0; t <= i; ++t) r.route.emplace_back(0, t);
        return r;
      case Kind::RightProj:
        r.duration = j;
        for (int t = 0; t <= j; ++t) r.route.emplace_back(1, t);
        return r;
      case Kind::Concat:
        r.duration = i + j;
        for (int t = 0; t <= i + j; ++t)
          r.route.emplace_back(t < i ? 0 : 1, t < i ? t : t - i);
        return r;
      case Kind::Custom: return custom(i, j);
    }
    throw std::logic_error("HybridScheme: bad kind");
  }
};

template <class X>
DTraj<X> apply_nt(const HybridScheme& s, const DTraj<X>& a, const DTraj<X>& b) {
  auto r = s.coords(a.duration(), b.duration());
  DTraj<X> out;
  out.values.reserve(r.route.size());
  for (auto [side, t] : r.route)
    out.values.push_back(side == 0 ? a.at(t) : b.at(t));
  if ((int)out.values.size() != r.duration + 1)
    throw std::logic_error("HybridScheme: route length does not match duration");
  return out;
}

// ---------------------------------------------------------------------------
// Tagged union over the typed specs (CLI / report plumbing).

using NatTransSpec = std::variant<ConvexCombo, MultisetWeights<nat_semiring>,
                                  PowersetShrink, SubDistWeights, MaybeCode,
                                  HybridScheme>;

}  // namespace klab
