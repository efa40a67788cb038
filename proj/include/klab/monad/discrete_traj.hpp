#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "klab/monad/bounds.hpp"

namespace klab {

/// Discrete evolution: values at the integer instants 0..d. The finite
/// stand-in for the hybrid monad used by the exhaustive law checkers.
template <class X>
struct DTraj {
  std::vector<X> values;  // size = duration + 1, never empty

  friend bool operator==(const DTraj& a, const DTraj& b) = default;
  friend auto operator<=>(const DTraj& a, const DTraj& b) {
    return a.values <=> b.values;
  }

  int duration() const { return (int)values.size() - 1; }
  const X& at(int t) const { return values.at((std::size_t)t); }
  const X& start() const { return values.front(); }
  const X& end() const { return values.back(); }
};

/// Concatenation: values of `a` on [0, d_a), then `b` shifted; the junction
/// instant takes b's start (right-continuous convention, matching mu).
template <class X>
DTraj<X> dtraj_concat(const DTraj<X>& a, const DTraj<X>& b) {
  DTraj<X> out;
  out.values.assign(a.values.begin(), a.values.end() - 1);
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  return out;
}

struct dtraj_monad {
  static constexpr const char* name = "DiscreteHybrid";

  template <class X>
  using val = DTraj<X>;

  template <class X>
  static val<X> unit(X x) {
    return val<X>{{std::move(x)}};
  }

  /// mu(f, d) = (theta . f, d) ++ f(d): start points of the inner
  /// trajectories for the first d instants, then the last inner trajectory.
  template <class X>
  static val<X> mult(const val<val<X>>& m) {
    val<X> heads;
    heads.values.reserve((std::size_t)m.duration() + 1);
    for (const val<X>& inner : m.values) heads.values.push_back(inner.start());
    return dtraj_concat(heads, m.end());
  }

  template <class X, class F>
  static auto map(const val<X>& m, F&& f)
      -> DTraj<std::decay_t<decltype(f(m.values.front()))>> {
    using Y = std::decay_t<decltype(f(m.values.front()))>;
    DTraj<Y> out;
    out.values.reserve(m.values.size());
    for (const X& x : m.values) out.values.push_back(f(x));
    return out;
  }

  /// All trajectories of duration 0..max_duration; empty carrier yields none.
  template <class X, class F>
  static void enumerate_visit(const std::vector<X>& carrier,
                              const Bounds& bounds, F&& visit) {
    if (carrier.empty()) return;
    for (int d = 0; d <= bounds.max_duration; ++d) {
      std::vector<std::size_t> idx((std::size_t)d + 1, 0);
      bool done = false;
      while (!done) {
        val<X> t;
        t.values.reserve(idx.size());
        for (std::size_t i : idx) t.values.push_back(carrier[i]);
        if (!visit(std::move(t))) return;
        std::size_t k = idx.size();
        while (k > 0) {
          if (++idx[k - 1] < carrier.size()) break;
          idx[k - 1] = 0;
          --k;
        }
        done = (k == 0);
      }
    }
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

}  // namespace klab
