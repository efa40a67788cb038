#pragma once

#include <utility>
#include <vector>

#include "klab/monad/composite.hpp"
#include "klab/monad/kernel.hpp"
#include "klab/nat/spec.hpp"

namespace klab {

/// Double strength of a Set-monad, left component sequenced first:
/// T A x T B -> T (A x B).
template <class T, class A, class B>
auto dst(const typename T::template val<A>& a,
         const typename T::template val<B>& b) {
  using P = std::pair<A, B>;
  auto nested = T::map(a, [&](const A& x) {
    return T::map(b, [&](const B& y) { return P(x, y); });
  });
  return T::mult(nested);
}

/// Lifted constant of T.Maybe: eta then the failure injection (the n = 0
/// instance of lifting along the strength).
template <class T, class X = int>
typename T::template val<Maybe<X>> lifted_zero() {
  return T::unit(Maybe<X>{});
}

/// Lifts a binary operation on the inner monad to the composite T.S via the
/// double strength: (TS)^2 -> T(S^2) -> TS.
template <class T, class S, class X, class Alpha>
auto lift2(const typename T::template val<typename S::template val<X>>& a,
           const typename T::template val<typename S::template val<X>>& b,
           Alpha&& alpha) {
  using SX = typename S::template val<X>;
  auto paired = dst<T, SX, SX>(a, b);
  return T::map(paired, [&](const std::pair<SX, SX>& p) {
    return alpha(p.first, p.second);
  });
}

/// The three unit-respecting resolutions of Maybe non-determinism.
enum class SelectionPolicy { LeftBiased, RightBiased, BottomOnClash };

inline MaybeCode policy_code(SelectionPolicy p) {
  switch (p) {
    case SelectionPolicy::LeftBiased:
      return MaybeCode{M2Coord::Left, M1Coord::Keep, M1Coord::Keep};
    case SelectionPolicy::RightBiased:
      return MaybeCode{M2Coord::Right, M1Coord::Keep, M1Coord::Keep};
    case SelectionPolicy::BottomOnClash:
      return MaybeCode{M2Coord::Bot, M1Coord::Keep, M1Coord::Keep};
  }
  throw std::logic_error("bad policy");
}

/// A test is a predicate on the carrier, interpreted over T.Maybe as the
/// kernel keeping passing states and failing the rest.
struct TestPred {
  std::vector<bool> truth;  // total on the carrier

  bool operator()(int x) const { return truth.at((std::size_t)x); }
  TestPred negate() const {
    TestPred t = *this;
    for (auto&& b : t.truth) b = !b;
    return t;
  }
  static TestPred always(int n, bool v) {
    return TestPred{std::vector<bool>((std::size_t)n, v)};
  }
};

template <class T>
Kernel<with_maybe<T>> interpret_test(const TestPred& b) {
  Kernel<with_maybe<T>> k;
  k.reserve(b.truth.size());
  for (int x = 0; x < (int)b.truth.size(); ++x)
    k.push_back(b(x) ? T::unit(Maybe<int>(x)) : lifted_zero<T>());
  return k;
}

/// if b then p else q over T.Maybe: T(alpha) . dst . <[b;p], [not b;q]>.
template <class T>
Kernel<with_maybe<T>> if_then_else(const TestPred& b, const Kernel<with_maybe<T>>& p,
                                   const Kernel<with_maybe<T>>& q,
                                   SelectionPolicy policy = SelectionPolicy::LeftBiased) {
  using TM = with_maybe<T>;
  if (p.size() != q.size() || p.size() != b.truth.size())
    throw std::invalid_argument("if_then_else: carrier mismatch");
  MaybeCode code = policy_code(policy);
  Kernel<TM> bp = kleisli<TM>(interpret_test<T>(b), p);
  Kernel<TM> nbq = kleisli<TM>(interpret_test<T>(b.negate()), q);
  Kernel<TM> out;
  out.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    out.push_back(lift2<T, maybe_monad, int>(
        bp[x], nbq[x],
        [&](const Maybe<int>& l, const Maybe<int>& r) { return apply_nt(code, l, r); }));
  return out;
}

/// Direct case-split semantics (the classical reading): run p where b holds,
/// q elsewhere. The composite semantics must coincide with this one.
template <class T>
Kernel<with_maybe<T>> case_split_ite(const TestPred& b,
                                     const Kernel<with_maybe<T>>& p,
                                     const Kernel<with_maybe<T>>& q) {
  Kernel<with_maybe<T>> out;
  out.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out.push_back(b((int)x) ? p[x] : q[x]);
  return out;
}

}  // namespace klab
