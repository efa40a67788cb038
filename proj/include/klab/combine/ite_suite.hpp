#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "klab/combine/lift.hpp"
#include "klab/monad/dist.hpp"

namespace klab {

struct IteReport {
  bool idem = false;          // p +_b p = p
  bool flip = false;          // p +_b q = q +_{not b} p
  bool true_left = false;     // p +_1 q = p
  bool nesting = false;       // (p +_a q) +_b r = p +_{a;b} (q +_{not a;b} r)
  bool policies_agree = false;
  bool kozen_agrees = false;
  std::int64_t instances = 0;
  std::string witness;
  bool pass() const {
    return idem && flip && true_left && nesting && policies_agree && kozen_agrees;
  }
};

namespace detail {

template <class F>
bool all_tests(int n, F&& f) {
  // iterate every predicate on an n-state carrier
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    TestPred b{std::vector<bool>((std::size_t)n)};
    for (int x = 0; x < n; ++x) b.truth[(std::size_t)x] = mask >> x & 1;
    if (!f(b)) return false;
  }
  return true;
}

}  // namespace detail

/// Verifies the guarded-choice equations over Dist.Maybe kernels. The
/// equations are pointwise in the state, so quantifying over per-state value
/// tuples covers all kernels; carriers up to `max_carrier` are exhausted and
/// `samples` random kernel triples are drawn at carrier `sampled_carrier`.
inline IteReport ite_axiom_suite(int max_carrier = 3, int denom = 4,
                                 int sampled_carrier = 4, int samples = 1000,
                                 std::uint64_t seed = 42) {
  using T = dist_monad;
  using TM = with_maybe<T>;
  IteReport rep;
  rep.idem = rep.flip = rep.true_left = rep.nesting = true;
  rep.policies_agree = rep.kozen_agrees = true;

  auto fail = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };

  auto run_carrier = [&](int n, const std::vector<Kernel<TM>>& kernels) {
    for (const auto& p : kernels)
      for (const auto& q : kernels) {
        detail::all_tests(n, [&](const TestPred& b) {
          ++rep.instances;
          auto pq = if_then_else<T>(b, p, q);
          if (!(if_then_else<T>(b, p, p) == p)) {
            rep.idem = false;
            fail("p +_b p != p");
          }
          if (!(pq == if_then_else<T>(b.negate(), q, p))) {
            rep.flip = false;
            fail("p +_b q != q +_{not b} p");
          }
          if (!(if_then_else<T>(TestPred::always(n, true), p, q) == p)) {
            rep.true_left = false;
            fail("p +_1 q != p");
          }
          if (!(pq == case_split_ite<T>(b, p, q))) {
            rep.kozen_agrees = false;
            fail("composite semantics differs from the case split");
          }
          auto l = if_then_else<T>(b, p, q, SelectionPolicy::LeftBiased);
          auto r = if_then_else<T>(b, p, q, SelectionPolicy::RightBiased);
          auto z = if_then_else<T>(b, p, q, SelectionPolicy::BottomOnClash);
          if (!(l == r && r == z)) {
            rep.policies_agree = false;
            fail("selection policies disagree");
          }
          return rep.witness.empty();
        });
        if (!rep.witness.empty()) return;
      }
    // nesting law on kernel triples with two tests
    for (const auto& p : kernels)
      for (const auto& q : kernels)
        for (const auto& r : kernels) {
          detail::all_tests(n, [&](const TestPred& a) {
            return detail::all_tests(n, [&](const TestPred& b) {
              ++rep.instances;
              auto lhs = if_then_else<T>(b, if_then_else<T>(a, p, q), r);
              TestPred ab{std::vector<bool>((std::size_t)n)};
              TestPred nab{std::vector<bool>((std::size_t)n)};
              for (int x = 0; x < n; ++x) {
                ab.truth[(std::size_t)x] = a(x) && b(x);
                nab.truth[(std::size_t)x] = !a(x) && b(x);
              }
              auto rhs = if_then_else<T>(ab, p, if_then_else<T>(nab, q, r));
              if (!(lhs == rhs)) {
                rep.nesting = false;
                fail("nesting law failed");
              }
              return rep.witness.empty();
            });
          });
          if (!rep.witness.empty()) return;
        }
  };

  // exhaustive pointwise coverage: constant kernels over all value tuples
  for (int n = 1; n <= max_carrier; ++n) {
    Bounds b{.denom = denom};
    std::vector<int> carrier(n);
    for (int i = 0; i < n; ++i) carrier[(std::size_t)i] = i;
    auto vals = TM::enumerate(carrier, b);
    std::vector<Kernel<TM>> kernels;
    kernels.reserve(vals.size());
    for (const auto& v : vals) kernels.push_back(constant_kernel<TM>(n, v));
    run_carrier(n, kernels);
    if (!rep.witness.empty()) return rep;
  }

  // seeded random kernels at the larger carrier
  {
    int n = sampled_carrier;
    Bounds b{.denom = denom};
    std::vector<int> carrier(n);
    for (int i = 0; i < n; ++i) carrier[(std::size_t)i] = i;
    auto vals = TM::enumerate(carrier, b);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
    std::vector<Kernel<TM>> kernels;
    for (int s = 0; s < samples; ++s) {
      Kernel<TM> k;
      for (int x = 0; x < n; ++x) k.push_back(vals[pick(rng)]);
      kernels.push_back(std::move(k));
      if ((int)kernels.size() == 3) {
        run_carrier(n, kernels);
        kernels.clear();
        if (!rep.witness.empty()) return rep;
      }
    }
  }
  return rep;
}

}  // namespace klab
