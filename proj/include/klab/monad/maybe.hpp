#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "klab/monad/bounds.hpp"

namespace klab {

/// Maybe values are std::optional; std::nullopt is the failure element.
template <class X>
using Maybe = std::optional<X>;

inline constexpr std::nullopt_t bottom = std::nullopt;

struct maybe_monad {
  static constexpr const char* name = "Maybe";

  template <class X>
  using val = Maybe<X>;

  template <class X>
  static val<X> unit(X x) {
    return val<X>(std::move(x));
  }

  template <class X>
  static val<X> mult(const val<val<X>>& m) {
    return m ? *m : val<X>{};
  }

  template <class X, class F>
  static auto map(const val<X>& m, F&& f) -> val<std::decay_t<decltype(f(*m))>> {
    using Y = std::decay_t<decltype(f(*m))>;
    return m ? val<Y>(f(*m)) : val<Y>{};
  }

  /// visit(value) -> bool: return false to stop early.
  template <class X, class F>
  static void enumerate_visit(const std::vector<X>& carrier, const Bounds&,
                              F&& visit) {
    if (!visit(val<X>{})) return;  // bottom
    for (const X& x : carrier)
      if (!visit(val<X>(x))) return;
  }

  template <class X>
  static std::vector<val<X>> enumerate(const std::vector<X>& carrier,
                                       const Bounds& b = {}) {
    std::vector<val<X>> out;
    out.reserve(carrier.size() + 1);
    enumerate_visit(carrier, b, [&](val<X> v) {
      out.push_back(std::move(v));
      return true;
    });
    return out;
  }
};

}  // namespace klab
