#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "klab/monad/bounds.hpp"
#include "klab/monad/discrete_traj.hpp"
#include "klab/monad/maybe.hpp"
#include "klab/monad/powerset.hpp"

namespace klab {

/// Distributive law of Maybe over any monad T: MT -> TM with
/// delta = [T i1, eta . i2]. Makes T(Maybe) a monad for every T.
template <class T>
struct maybe_over {
  template <class X>
  using in = Maybe<typename T::template val<X>>;
  template <class X>
  using out = typename T::template val<Maybe<X>>;

  template <class X>
  static out<X> apply(const in<X>& v) {
    if (v) return T::map(*v, [](const X& x) { return Maybe<X>(x); });
    return T::unit(Maybe<X>{});
  }
};

/// Distributive law of the (non-empty) powerset over the discrete hybrid
/// monad: HQ -> QH, sending a set-valued trajectory to all of its pointwise
/// selections. With the full powerset an empty instant kills every selection,
/// which is exactly what breaks the law (see hq suite).
template <bool NonEmpty>
struct selections_over_dtraj {
  template <class X>
  using in = DTraj<PSet<X>>;
  template <class X>
  using out = PSet<DTraj<X>>;

  template <class X>
  static out<X> apply(const in<X>& f) {
    std::vector<DTraj<X>> sels;
    sels.emplace_back();
    for (const PSet<X>& choices : f.values) {
      if (choices.empty()) return {};
      std::vector<DTraj<X>> next;
      next.reserve(sels.size() * choices.elems.size());
      for (const DTraj<X>& g : sels)
        for (const X& x : choices.elems) {
          DTraj<X> g2 = g;
          g2.values.push_back(x);
          next.push_back(std::move(g2));
        }
      sels = std::move(next);
    }
    return PSet<DTraj<X>>::make(std::move(sels));
  }
};

/// Composite monad T . S from a distributive law Law: S T -> T S.
template <class T, class S, class Law>
struct composite_monad {
  using outer = T;
  using inner = S;
  using law = Law;
  static inline const std::string name_storage =
      std::string(T::name) + "." + S::name;
  static const char* name;

  template <class X>
  using val = typename T::template val<typename S::template val<X>>;

  template <class X>
  static val<X> unit(X x) {
    return T::unit(S::unit(std::move(x)));
  }

  /// TSTS --T law--> TTSS --mu_T--> TSS --T mu_S--> TS
  template <class X>
  static val<X> mult(const val<val<X>>& m) {
    using SX = typename S::template val<X>;
    auto ttss = T::map(m, [](const typename S::template val<val<X>>& stsx) {
      return Law::template apply<SX>(stsx);
    });
    auto tss = T::mult(ttss);
    return T::map(tss, [](const typename S::template val<SX>& ssx) {
      return S::mult(ssx);
    });
  }

  template <class X, class F>
  static auto map(const val<X>& m, F&& f) {
    return T::map(m, [&](const typename S::template val<X>& sx) {
      return S::map(sx, f);
    });
  }

  template <class X, class F>
  static void enumerate_visit(const std::vector<X>& carrier,
                              const Bounds& bounds, F&& visit) {
    auto inner_vals = S::enumerate(carrier, bounds);
    std::sort(inner_vals.begin(), inner_vals.end());
    T::enumerate_visit(inner_vals, bounds, visit);
  }

  template <class X>
  static auto enumerate(const std::vector<X>& carrier, const Bounds& bounds) {
    std::vector<val<X>> out;
    enumerate_visit(carrier, bounds, [&](val<X> v) {
      out.push_back(std::move(v));
      return true;
    });
    return out;
  }
};

template <class T, class S, class Law>
const char* composite_monad<T, S, Law>::name =
    composite_monad<T, S, Law>::name_storage.c_str();

template <class T>
using with_maybe = composite_monad<T, maybe_monad, maybe_over<T>>;

using qh_monad = composite_monad<qset_monad, dtraj_monad, selections_over_dtraj<true>>;

}  // namespace klab
