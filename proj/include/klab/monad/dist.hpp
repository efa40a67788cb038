#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klab/monad/bounds.hpp"
#include "klab/monad/maybe.hpp"
#include "klab/rat.hpp"

namespace klab {

/// Finite-support probability distribution with exact rational weights.
/// Entries are sorted by key, weights are strictly positive and sum to 1.
template <class X>
struct Dist {
  std::vector<std::pair<X, Rat>> entries;

  friend bool operator==(const Dist& a, const Dist& b) = default;
  friend auto operator<=>(const Dist& a, const Dist& b) {
    return a.entries <=> b.entries;
  }

  Rat weight(const X& x) const {
    for (auto& [k, w] : entries)
      if (k == x) return w;
    return Rat(0);
  }

  /// Normalizes an arbitrary weight list: merges duplicate keys, drops zeros,
  /// sorts, and checks the total is exactly `expected_total`.
  static Dist make(std::vector<std::pair<X, Rat>> ws, Rat expected_total = Rat(1)) {
    std::sort(ws.begin(), ws.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Dist d;
    Rat total(0);
    for (auto& [k, w] : ws) {
      total += w;
      if (w.is_zero()) continue;
      if (w < Rat(0)) throw std::invalid_argument("Dist: negative weight");
      if (!d.entries.empty() && d.entries.back().first == k)
        d.entries.back().second += w;
      else
        d.entries.emplace_back(std::move(k), w);
    }
    if (total != expected_total)
      throw std::invalid_argument("Dist: weights sum to " + total.str());
    return d;
  }

  static Dist point(X x) { return Dist{{{std::move(x), Rat(1)}}}; }
};

/// Convex combination lambda*a + (1-lambda)*b.
template <class X>
Dist<X> convex(const Rat& lambda, const Dist<X>& a, const Dist<X>& b) {
  if (lambda < Rat(0) || lambda > Rat(1))
    throw std::invalid_argument("convex: lambda outside [0,1]");
  std::vector<std::pair<X, Rat>> ws;
  for (auto& [k, w] : a.entries) ws.emplace_back(k, lambda * w);
  Rat rest = Rat(1) - lambda;
  for (auto& [k, w] : b.entries) ws.emplace_back(k, rest * w);
  return Dist<X>::make(std::move(ws));
}

struct dist_monad {
  static constexpr const char* name = "Dist";

  template <class X>
  using val = Dist<X>;

  template <class X>
  static val<X> unit(X x) {
    return Dist<X>::point(std::move(x));
  }

  template <class X>
  static val<X> mult(const val<val<X>>& m) {
    std::vector<std::pair<X, Rat>> ws;
    for (auto& [inner, w] : m.entries)
      for (auto& [x, v] : inner.entries) ws.emplace_back(x, w * v);
    return val<X>::make(std::move(ws));
  }

  template <class X, class F>
  static auto map(const val<X>& m, F&& f)
      -> val<std::decay_t<decltype(f(m.entries.front().first))>> {
    using Y = std::decay_t<decltype(f(m.entries.front().first))>;
    std::vector<std::pair<Y, Rat>> ws;
    ws.reserve(m.entries.size());
    for (auto& [x, w] : m.entries) ws.emplace_back(f(x), w);
    return val<Y>::make(std::move(ws));
  }

  /// All distributions over `carrier` whose weights are multiples of
  /// 1/bounds.denom; support capped by bounds.max_support when nonzero.
  template <class X, class F>
  static void enumerate_visit(const std::vector<X>& carrier,
                              const Bounds& bounds, F&& visit) {
    if (carrier.empty()) return;  // D(empty) is empty
    int q = bounds.denom;
    std::vector<std::pair<X, Rat>> acc;
    int max_sup = bounds.max_support > 0 ? bounds.max_support : q;
    enum_rec(carrier, 0, q, q, max_sup, acc, visit);
  }

  template <class X>
  static std::vector<val<X>> enumerate(const std::vector<X>& carrier,
                                       const Bounds& bounds) {
    std::vector<val<X>> out;
    enumerate_visit(carrier, bounds, [&](val<X> v) {
      out.push_back(std::move(v));
      return true;
    });
    return out;
  }

 private:
  template <class X, class F>
  static bool enum_rec(const std::vector<X>& carrier, std::size_t i, int q,
                       int left, int sup_left,
                       std::vector<std::pair<X, Rat>>& acc, F&& visit) {
    if (left == 0) return visit(val<X>{acc});
    if (i == carrier.size() || sup_left == 0) return true;
    if (!enum_rec(carrier, i + 1, q, left, sup_left, acc, visit)) return false;
    for (int k = 1; k <= left; ++k) {
      acc.emplace_back(carrier[i], Rat(k, q));
      bool cont = enum_rec(carrier, i + 1, q, left - k, sup_left - 1, acc, visit);
      acc.pop_back();
      if (!cont) return false;
    }
    return true;
  }
};

/// Subdistributions are realized literally as distributions over the carrier
/// extended with the failure point: SubDist<X> = Dist<Maybe<X>>.
template <class X>
using SubDist = Dist<Maybe<X>>;

/// Mass of the non-failure part: 1 - weight(bottom).
template <class X>
Rat subdist_mass(const SubDist<X>& d) {
  return Rat(1) - d.weight(Maybe<X>{});
}

}  // namespace klab
