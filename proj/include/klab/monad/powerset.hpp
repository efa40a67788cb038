#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "klab/monad/bounds.hpp"

namespace klab {

/// Finite set value: sorted, duplicate-free element vector.
template <class X>
struct PSet {
  std::vector<X> elems;

  friend bool operator==(const PSet& a, const PSet& b) = default;
  friend auto operator<=>(const PSet& a, const PSet& b) {
    return a.elems <=> b.elems;
  }

  bool empty() const { return elems.empty(); }
  bool contains(const X& x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
  }

  static PSet make(std::vector<X> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return PSet{std::move(xs)};
  }
};

template <class X>
PSet<X> set_union(const PSet<X>& a, const PSet<X>& b) {
  std::vector<X> xs;
  xs.reserve(a.elems.size() + b.elems.size());
  std::set_union(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                 std::back_inserter(xs));
  return PSet<X>{std::move(xs)};
}

namespace detail {
template <class X, class F>
bool enum_subsets(const std::vector<X>& carrier, bool include_empty,
                  int max_size, F&& visit) {
  std::vector<X> acc;
  int cap = max_size > 0 ? max_size : (int)carrier.size();
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == carrier.size()) {
      if (include_empty || !acc.empty()) return visit(PSet<X>{acc});
      return true;
    }
    if (!self(self, i + 1)) return false;
    if ((int)acc.size() < cap) {
      acc.push_back(carrier[i]);
      bool cont = self(self, i + 1);
      acc.pop_back();
      if (!cont) return false;
    }
    return true;
  };
  return rec(rec, 0);
}
}  // namespace detail

template <bool NonEmpty>
struct basic_powerset_monad {
  static constexpr const char* name = NonEmpty ? "NonemptyPowerset" : "Powerset";

  template <class X>
  using val = PSet<X>;

  template <class X>
  static val<X> unit(X x) {
    return val<X>{{std::move(x)}};
  }

  template <class X>
  static val<X> mult(const val<val<X>>& m) {
    val<X> out;
    for (const val<X>& s : m.elems) out = set_union(out, s);
    return out;
  }

  template <class X, class F>
  static auto map(const val<X>& m, F&& f)
      -> PSet<std::decay_t<decltype(f(m.elems.front()))>> {
    using Y = std::decay_t<decltype(f(m.elems.front()))>;
    std::vector<Y> ys;
    ys.reserve(m.elems.size());
    for (const X& x : m.elems) ys.push_back(f(x));
    return PSet<Y>::make(std::move(ys));
  }

  /// Requires `carrier` sorted ascending.
  template <class X, class F>
  static void enumerate_visit(const std::vector<X>& carrier,
                              const Bounds& bounds, F&& visit) {
    detail::enum_subsets(carrier, !NonEmpty, bounds.max_support, visit);
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
};

using powerset_monad = basic_powerset_monad<false>;
using qset_monad = basic_powerset_monad<true>;

}  // namespace klab
