#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "klab/monad/bounds.hpp"
#include "klab/monad/semiring.hpp"

namespace klab {

/// Finite multiset with weights in a semiring S; entries sorted by key and
/// never mapped to the semiring zero.
template <class X, class S>
struct MultiSet {
  using W = typename S::elem;
  std::vector<std::pair<X, W>> entries;

  friend bool operator==(const MultiSet& a, const MultiSet& b) = default;
  friend auto operator<=>(const MultiSet& a, const MultiSet& b) {
    return a.entries <=> b.entries;
  }

  W weight(const X& x) const {
    for (auto& [k, w] : entries)
      if (k == x) return w;
    return S::zero();
  }

  W total() const {
    W t = S::zero();
    for (auto& [k, w] : entries) t = S::add(t, w);
    return t;
  }

  static MultiSet make(std::vector<std::pair<X, W>> ws) {
    std::sort(ws.begin(), ws.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    MultiSet m;
    for (auto& [k, w] : ws) {
      if (!m.entries.empty() && m.entries.back().first == k)
        m.entries.back().second = S::add(m.entries.back().second, w);
      else
        m.entries.emplace_back(std::move(k), w);
    }
    std::erase_if(m.entries, [](const auto& e) { return e.second == S::zero(); });
    return m;
  }
};

template <class S>
struct multiset_monad {
  static constexpr const char* name = "MultiSet";
  using semiring = S;

  template <class X>
  using val = MultiSet<X, S>;

  template <class X>
  static val<X> unit(X x) {
    return val<X>{{{std::move(x), S::one()}}};
  }

  /// mu(Phi)(x) = sum over phi in supp(Phi) of Phi(phi) * phi(x).
  template <class X>
  static val<X> mult(const val<val<X>>& m) {
    std::vector<std::pair<X, typename S::elem>> ws;
    for (auto& [inner, w] : m.entries)
      for (auto& [x, v] : inner.entries) ws.emplace_back(x, S::mul(w, v));
    return val<X>::make(std::move(ws));
  }

  template <class X, class F>
  static auto map(const val<X>& m, F&& f)
      -> MultiSet<std::decay_t<decltype(f(m.entries.front().first))>, S> {
    using Y = std::decay_t<decltype(f(m.entries.front().first))>;
    std::vector<std::pair<Y, typename S::elem>> ws;
    ws.reserve(m.entries.size());
    for (auto& [x, w] : m.entries) ws.emplace_back(f(x), w);
    return MultiSet<Y, S>::make(std::move(ws));
  }

  /// Natural-number weights 0..max_weight per key, support capped when set.
  /// Only provided for semirings whose fragment is enumerable this way.
  /// Requires `carrier` sorted ascending.
  template <class X, class F>
  static void enumerate_visit(const std::vector<X>& carrier,
                              const Bounds& bounds, F&& visit) {
    static_assert(std::is_same_v<S, nat_semiring>,
                  "fragment enumeration is defined for the Nat semiring");
    std::vector<std::pair<X, long long>> acc;
    int max_sup =
        bounds.max_support > 0 ? bounds.max_support : (int)carrier.size();
    enum_rec(carrier, 0, bounds.max_weight, max_sup, acc, visit);
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
  static bool enum_rec(const std::vector<X>& carrier, std::size_t i,
                       long long max_w, int sup_left,
                       std::vector<std::pair<X, long long>>& acc, F&& visit) {
    if (i == carrier.size()) return visit(val<X>{acc});
    if (!enum_rec(carrier, i + 1, max_w, sup_left, acc, visit)) return false;
    if (sup_left == 0) return true;
    for (long long w = 1; w <= max_w; ++w) {
      acc.emplace_back(carrier[i], w);
      bool cont = enum_rec(carrier, i + 1, max_w, sup_left - 1, acc, visit);
      acc.pop_back();
      if (!cont) return false;
    }
    return true;
  }
};

using nat_multiset_monad = multiset_monad<nat_semiring>;

}  // namespace klab
