#pragma once

#include <algorithm>
#include <random>

#include "klab/axioms/axioms.hpp"
#include "klab/prob/run.hpp"

namespace klab::prob {

struct ConvexSuiteOptions {
  int max_depth = 3;
  int denom = 4;  // lambda grid and weight grid
  std::int64_t tuple_budget = 2'000'000;
  int samples = 1000;
  std::uint64_t seed = 42;
  Exec exec = default_exec();
};

struct ConvexSuiteReport {
  // axiom numbering follows the signature: (1) skip unit, (2)/(3) sequencing
  // distributes over choice, (4) parameter algebra, (5) sequencing
  // associativity, (6) skew commutativity, (7) idempotence
  AxiomReport ax[7];
  std::int64_t distinct_kernels = 0;
  bool tuples_exhaustive = true;
  bool pass() const {
    for (const auto& a : ax)
      if (!a.holds) return false;
    return true;
  }
};

/// Checks the seven convex-semiring axioms extensionally over the kernel
/// denotations of every program of the given depth. Both sides of each
/// axiom instance depend only on the denotations of the metavariables, so
/// exhausting distinct denotations exhausts all program instances.
inline ConvexSuiteReport convex_semiring_suite(const AtomTable& atoms,
                                               const ConvexSuiteOptions& opt = {}) {
  using K = Kernel<dist_monad>;
  int n = (int)atoms.carrier.size();
  ConvexSuiteReport rep;

  // program denotations up to the depth, deduplicated
  std::vector<K> denots;
  denots.push_back(unit_kernel<dist_monad>(n));
  for (auto& [name, k] : atoms.atoms) denots.push_back(atoms.pure_atom(name));
  std::vector<Rat> grid;
  for (int k = 0; k <= opt.denom; ++k) grid.emplace_back(k, opt.denom);
  std::vector<K> layer = denots;
  for (int d = 2; d <= opt.max_depth; ++d) {
    std::vector<K> next;
    for (const K& p : denots)
      for (const K& q : denots) {
        next.push_back(kleisli<dist_monad>(p, q));
        for (const Rat& l : grid) {
          K c;
          c.reserve((std::size_t)n);
          for (int x = 0; x < n; ++x)
            c.push_back(convex(l, p[(std::size_t)x], q[(std::size_t)x]));
          next.push_back(std::move(c));
        }
      }
    denots.insert(denots.end(), next.begin(), next.end());
    std::sort(denots.begin(), denots.end());
    denots.erase(std::unique(denots.begin(), denots.end()), denots.end());
    layer = std::move(next);
  }
  std::sort(denots.begin(), denots.end());
  denots.erase(std::unique(denots.begin(), denots.end()), denots.end());
  rep.distinct_kernels = (std::int64_t)denots.size();
  std::int64_t kc = (std::int64_t)denots.size();

  K skip = unit_kernel<dist_monad>(n);
  auto cvx = [&](const Rat& l, const K& p, const K& q) {
    K out;
    out.reserve((std::size_t)n);
    for (int x = 0; x < n; ++x)
      out.push_back(convex(l, p[(std::size_t)x], q[(std::size_t)x]));
    return out;
  };

  // (1) p ; skip = skip ; p = p
  {
    auto& a = rep.ax[0];
    a.axiom = AxiomId::Unit;
    a.instances = kc;
    std::int64_t bad = sweep_first_fail(
        kc,
        [&](std::int64_t i) {
          const K& p = denots[(std::size_t)i];
          return kleisli<dist_monad>(p, skip) == p &&
                 kleisli<dist_monad>(skip, p) == p;
        },
        opt.exec);
    a.holds = bad == kNoFailure;
    if (!a.holds) a.witness = "kernel #" + std::to_string(bad);
  }

  // triple quantification, exhaustive when it fits the budget
  std::int64_t triple_count = kc * kc * kc;
  bool exhaustive = triple_count > 0 && triple_count <= opt.tuple_budget;
  rep.tuples_exhaustive = exhaustive;
  std::int64_t trials = exhaustive ? triple_count : opt.samples;
  auto triple = [&](std::int64_t i) {
    if (exhaustive)
      return std::array<const K*, 3>{&denots[(std::size_t)(i % kc)],
                                     &denots[(std::size_t)((i / kc) % kc)],
                                     &denots[(std::size_t)(i / (kc * kc))]};
    std::mt19937_64 g(opt.seed + 0x9E3779B97F4A7C15ULL * (std::uint64_t)(i + 1));
    std::uniform_int_distribution<std::int64_t> pick(0, kc - 1);
    return std::array<const K*, 3>{&denots[(std::size_t)pick(g)],
                                   &denots[(std::size_t)pick(g)],
                                   &denots[(std::size_t)pick(g)]};
  };

  // (2) p ; (q +_l r) = (p ; q) +_l (p ; r)
  {
    auto& a = rep.ax[1];
    a.axiom = AxiomId::LeftDistOverSeq;
    a.exhaustive = exhaustive;
    a.instances = trials * (std::int64_t)grid.size();
    std::int64_t bad = sweep_first_fail(
        trials * (std::int64_t)grid.size(),
        [&](std::int64_t i) {
          const Rat& l = grid[(std::size_t)(i % (std::int64_t)grid.size())];
          auto [p, q, r] = triple(i / (std::int64_t)grid.size());
          return kleisli<dist_monad>(*p, cvx(l, *q, *r)) ==
                 cvx(l, kleisli<dist_monad>(*p, *q), kleisli<dist_monad>(*p, *r));
        },
        opt.exec);
    a.holds = bad == kNoFailure;
    if (!a.holds) a.witness = "instance #" + std::to_string(bad);
  }

  // (3) (p +_l q) ; r = (p ; r) +_l (q ; r)
  {
    auto& a = rep.ax[2];
    a.axiom = AxiomId::RightDistOverSeq;
    a.exhaustive = exhaustive;
    a.instances = trials * (std::int64_t)grid.size();
    std::int64_t bad = sweep_first_fail(
        trials * (std::int64_t)grid.size(),
        [&](std::int64_t i) {
          const Rat& l = grid[(std::size_t)(i % (std::int64_t)grid.size())];
          auto [p, q, r] = triple(i / (std::int64_t)grid.size());
          return kleisli<dist_monad>(cvx(l, *p, *q), *r) ==
                 cvx(l, kleisli<dist_monad>(*p, *r), kleisli<dist_monad>(*q, *r));
        },
        opt.exec);
    a.holds = bad == kNoFailure;
    if (!a.holds) a.witness = "instance #" + std::to_string(bad);
  }

  // (4) parameter algebra, pointwise over the value fragment
  {
    std::vector<int> carrier(n);
    for (int i = 0; i < n; ++i) carrier[(std::size_t)i] = i;
    auto universe = dist_monad::enumerate(carrier, Bounds{.denom = opt.denom});
    rep.ax[3] = check_convex_assoc4(universe, opt.denom, ExtOpts{.exec = opt.exec});
  }

  // (5) p ; (q ; r) = (p ; q) ; r
  {
    auto& a = rep.ax[4];
    a.axiom = AxiomId::Associativity;
    a.exhaustive = exhaustive;
    a.instances = trials;
    std::int64_t bad = sweep_first_fail(
        trials,
        [&](std::int64_t i) {
          auto [p, q, r] = triple(i);
          return kleisli<dist_monad>(kleisli<dist_monad>(*p, *q), *r) ==
                 kleisli<dist_monad>(*p, kleisli<dist_monad>(*q, *r));
        },
        opt.exec);
    a.holds = bad == kNoFailure;
    if (!a.holds) a.witness = "instance #" + std::to_string(bad);
  }

  // (6) and (7), pointwise over the value fragment
  {
    std::vector<int> carrier(n);
    for (int i = 0; i < n; ++i) carrier[(std::size_t)i] = i;
    auto universe = dist_monad::enumerate(carrier, Bounds{.denom = opt.denom});
    rep.ax[5] = check_convex_comm6(universe, opt.denom, ExtOpts{.exec = opt.exec});
    auto& a = rep.ax[6];
    a.axiom = AxiomId::Idempotence;
    a.instances = (std::int64_t)universe.size() * (std::int64_t)grid.size();
    std::int64_t bad = sweep_first_fail(
        a.instances,
        [&](std::int64_t i) {
          const Rat& l = grid[(std::size_t)(i % (std::int64_t)grid.size())];
          const auto& v = universe[(std::size_t)(i / (std::int64_t)grid.size())];
          return convex(l, v, v) == v;
        },
        opt.exec);
    a.holds = bad == kNoFailure;
    if (!a.holds) a.witness = "instance #" + std::to_string(bad);
  }

  return rep;
}

}  // namespace klab::prob
