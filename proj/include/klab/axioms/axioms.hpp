#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "klab/monad/dist.hpp"
#include "klab/monad/kernel.hpp"
#include "klab/monad/show.hpp"
#include "klab/parallel.hpp"
#include "klab/rat.hpp"

namespace klab {

enum class AxiomId {
  Commutativity,
  Idempotence,
  Unit,
  Associativity,
  LeftAbsorb,      // p ; 0 = 0
  RightAbsorb,     // 0 ; p = 0
  LeftDistOverSeq,   // p ; (q + r) = (p ; q) + (p ; r)
  RightDistOverSeq,  // (p + q) ; r = (p ; r) + (q ; r)
  ConvexAssoc4,
  ConvexComm6,
};

inline const char* axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::Commutativity: return "commutativity";
    case AxiomId::Idempotence: return "idempotence";
    case AxiomId::Unit: return "unit";
    case AxiomId::Associativity: return "associativity";
    case AxiomId::LeftAbsorb: return "left-absorption (p;0 = 0)";
    case AxiomId::RightAbsorb: return "right-absorption (0;p = 0)";
    case AxiomId::LeftDistOverSeq: return "left distributivity of ; over +";
    case AxiomId::RightDistOverSeq: return "right distributivity of ; over +";
    case AxiomId::ConvexAssoc4: return "convex parameter algebra (4)";
    case AxiomId::ConvexComm6: return "skew commutativity (6)";
  }
  return "?";
}

struct AxiomReport {
  AxiomId axiom{};
  bool holds = false;
  bool exhaustive = true;
  std::int64_t instances = 0;
  std::string witness;  // reproducible inputs and both sides when it fails
};

/// Options for the extensional sweeps: kernel spaces are exhausted when
/// small enough, otherwise sampled with a seeded generator.
struct ExtOpts {
  std::int64_t exhaustive_limit = 1'000'000;
  std::int64_t samples = 1000;
  std::uint64_t seed = 42;
  Exec exec = default_exec();
};

/// Extensional axiom check for a binary operation alpha on M-values over an
/// n-state carrier. Pointwise axioms quantify over value tuples (equivalent
/// to quantifying over kernels); the sequencing axioms quantify over kernels
/// drawn from the same value universe.
template <class M>
AxiomReport check_extensional(
    AxiomId axiom,
    const std::function<typename M::template val<int>(
        const typename M::template val<int>&,
        const typename M::template val<int>&)>& alpha,
    int carrier, const std::vector<typename M::template val<int>>& universe,
    const ExtOpts& opts = {},
    const typename M::template val<int>* zero = nullptr) {
  using V = typename M::template val<int>;
  AxiomReport rep;
  rep.axiom = axiom;
  std::int64_t u = (std::int64_t)universe.size();

  auto value_pair_sweep = [&](auto&& check, auto&& describe) {
    std::int64_t total = u * u;
    rep.instances = total;
    std::int64_t bad = sweep_first_fail(
        total,
        [&](std::int64_t i) {
          return check(universe[(std::size_t)(i / u)], universe[(std::size_t)(i % u)]);
        },
        opts.exec);
    rep.holds = bad == kNoFailure;
    if (!rep.holds)
      rep.witness = describe(universe[(std::size_t)(bad / u)],
                             universe[(std::size_t)(bad % u)]);
  };

  switch (axiom) {
    case AxiomId::Commutativity:
      value_pair_sweep(
          [&](const V& a, const V& b) { return alpha(a, b) == alpha(b, a); },
          [&](const V& a, const V& b) {
            return "alpha(" + show(a) + ", " + show(b) + ") = " + show(alpha(a, b)) +
                   " but alpha(" + show(b) + ", " + show(a) + ") = " +
                   show(alpha(b, a));
          });
      return rep;

    case AxiomId::Idempotence: {
      rep.instances = u;
      std::int64_t bad = sweep_first_fail(
          u,
          [&](std::int64_t i) {
            const V& a = universe[(std::size_t)i];
            return alpha(a, a) == a;
          },
          opts.exec);
      rep.holds = bad == kNoFailure;
      if (!rep.holds) {
        const V& a = universe[(std::size_t)bad];
        rep.witness = "alpha(" + show(a) + ", " + show(a) + ") = " + show(alpha(a, a));
      }
      return rep;
    }

    case AxiomId::Unit: {
      if (!zero) throw std::invalid_argument("unit axiom needs a constant");
      rep.instances = u;
      std::int64_t bad = sweep_first_fail(
          u,
          [&](std::int64_t i) {
            const V& a = universe[(std::size_t)i];
            return alpha(a, *zero) == a && alpha(*zero, a) == a;
          },
          opts.exec);
      rep.holds = bad == kNoFailure;
      if (!rep.holds) {
        const V& a = universe[(std::size_t)bad];
        rep.witness = "alpha(" + show(a) + ", u) = " + show(alpha(a, *zero)) +
                      ", alpha(u, " + show(a) + ") = " + show(alpha(*zero, a));
      }
      return rep;
    }

    case AxiomId::Associativity: {
      std::int64_t total = u * u * u;
      rep.instances = total;
      std::int64_t bad = sweep_first_fail(
          total,
          [&](std::int64_t i) {
            const V& a = universe[(std::size_t)(i / (u * u))];
            const V& b = universe[(std::size_t)((i / u) % u)];
            const V& c = universe[(std::size_t)(i % u)];
            return alpha(alpha(a, b), c) == alpha(a, alpha(b, c));
          },
          opts.exec);
      rep.holds = bad == kNoFailure;
      if (!rep.holds) {
        const V& a = universe[(std::size_t)(bad / (u * u))];
        const V& b = universe[(std::size_t)((bad / u) % u)];
        const V& c = universe[(std::size_t)(bad % u)];
        rep.witness = "args " + show(a) + ", " + show(b) + ", " + show(c) +
                      ": lhs = " + show(alpha(alpha(a, b), c)) +
                      ", rhs = " + show(alpha(a, alpha(b, c)));
      }
      return rep;
    }

    case AxiomId::LeftAbsorb:
    case AxiomId::RightAbsorb: {
      if (!zero) throw std::invalid_argument("absorption needs a constant");
      KernelSpace<M> space(carrier, universe, opts.exhaustive_limit, opts.samples,
                           opts.seed);
      rep.exhaustive = space.exhaustive();
      rep.instances = space.count();
      Kernel<M> zk = constant_kernel<M>(carrier, *zero);
      std::int64_t bad = sweep_first_fail(
          space.count(),
          [&](std::int64_t i) {
            Kernel<M> p = space.at(i);
            Kernel<M> lhs = axiom == AxiomId::LeftAbsorb ? kleisli<M>(p, zk)
                                                         : kleisli<M>(zk, p);
            return lhs == zk;
          },
          opts.exec);
      rep.holds = bad == kNoFailure;
      if (!rep.holds) {
        Kernel<M> p = space.at(bad);
        Kernel<M> lhs =
            axiom == AxiomId::LeftAbsorb ? kleisli<M>(p, zk) : kleisli<M>(zk, p);
        std::string side = axiom == AxiomId::LeftAbsorb ? "p;0" : "0;p";
        rep.witness = "kernel p with p(0) = " + show(p[0]) + " (carrier " +
                      std::to_string(carrier) + "): " + side + " at state 0 = " +
                      show(lhs[0]) + " but 0 = " + show(zk[0]);
      }
      return rep;
    }

    case AxiomId::LeftDistOverSeq:
    case AxiomId::RightDistOverSeq: {
      KernelSpace<M> space(carrier, universe, opts.exhaustive_limit, opts.samples,
                           opts.seed);
      bool left = axiom == AxiomId::LeftDistOverSeq;
      auto bind = [&](const V& v, const Kernel<M>& k) {
        return M::mult(M::map(v, [&](int y) { return k[(std::size_t)y]; }));
      };
      // The left law needs a kernel pair (q, r); exhaustive only when the
      // squared space fits the limit, else seeded pairs.
      bool ex_pairs = space.exhaustive() &&
                      space.count() <= opts.exhaustive_limit / space.count();
      std::int64_t pairs = ex_pairs ? space.count() * space.count() : opts.samples;
      std::int64_t total = left ? u * pairs : u * u * space.count();
      rep.exhaustive = space.exhaustive() && (ex_pairs || !left);
      rep.instances = total;
      std::int64_t bad = sweep_first_fail(
          total,
          [&](std::int64_t i) {
            if (left) {
              const V& pv = universe[(std::size_t)(i % u)];
              std::int64_t pi = i / u;
              Kernel<M> q, r;
              if (ex_pairs) {
                q = space.at(pi / space.count());
                r = space.at(pi % space.count());
              } else {
                q = space.at(pi);
                r = space.at(pi + 0x40000000LL);
              }
              Kernel<M> qr((std::size_t)carrier);
              for (int x = 0; x < carrier; ++x)
                qr[(std::size_t)x] = alpha(q[(std::size_t)x], r[(std::size_t)x]);
              return bind(pv, qr) == alpha(bind(pv, q), bind(pv, r));
            }
            const V& pv = universe[(std::size_t)(i % u)];
            const V& qv = universe[(std::size_t)((i / u) % u)];
            Kernel<M> r = space.at(i / (u * u));
            return bind(alpha(pv, qv), r) == alpha(bind(pv, r), bind(qv, r));
          },
          opts.exec);
      rep.holds = bad == kNoFailure;
      if (!rep.holds)
        rep.witness = "sequencing distributivity failed at sweep index " +
                      std::to_string(bad);
      return rep;
    }

    default:
      throw std::invalid_argument("axiom not handled by the generic checker");
  }
}

/// Axiom (6) on distributions: a +_l b = b +_{1-l} a, over a lambda grid.
inline AxiomReport check_convex_comm6(
    const std::vector<Dist<int>>& universe, int denom, const ExtOpts& opts = {}) {
  AxiomReport rep;
  rep.axiom = AxiomId::ConvexComm6;
  std::int64_t u = (std::int64_t)universe.size();
  std::int64_t total = (denom + 1) * u * u;
  rep.instances = total;
  std::int64_t bad = sweep_first_fail(
      total,
      [&](std::int64_t i) {
        Rat l((int)(i % (denom + 1)), denom);
        const auto& a = universe[(std::size_t)((i / (denom + 1)) % u)];
        const auto& b = universe[(std::size_t)(i / ((denom + 1) * u))];
        return convex(l, a, b) == convex(Rat(1) - l, b, a);
      },
      opts.exec);
  rep.holds = bad == kNoFailure;
  if (!rep.holds) rep.witness = "axiom (6) failed at index " + std::to_string(bad);
  return rep;
}

/// Axiom (4) on distributions: a +_l (b +_t c) regrouped to the left with
/// the transformed parameters, over a lambda/tau grid.
inline AxiomReport check_convex_assoc4(
    const std::vector<Dist<int>>& universe, int denom, const ExtOpts& opts = {}) {
  AxiomReport rep;
  rep.axiom = AxiomId::ConvexAssoc4;
  std::int64_t u = (std::int64_t)universe.size();
  std::int64_t grid = denom + 1;
  std::int64_t total = grid * grid * u * u * u;
  rep.instances = total;
  std::int64_t bad = sweep_first_fail(
      total,
      [&](std::int64_t i) {
        Rat l((int)(i % grid), denom);
        Rat t((int)((i / grid) % grid), denom);
        std::int64_t j = i / (grid * grid);
        const auto& a = universe[(std::size_t)(j % u)];
        const auto& b = universe[(std::size_t)((j / u) % u)];
        const auto& c = universe[(std::size_t)(j / (u * u))];
        Rat outer = l + (Rat(1) - l) * t;
        auto lhs = convex(l, a, convex(t, b, c));
        if (outer.is_zero())  // l = t = 0: both sides are c
          return lhs == c;
        auto rhs = convex(outer, convex(l / outer, a, b), c);
        return lhs == rhs;
      },
      opts.exec);
  rep.holds = bad == kNoFailure;
  if (!rep.holds) rep.witness = "axiom (4) failed at index " + std::to_string(bad);
  return rep;
}

/// Both absorption laws against a zero constant. Right absorption
/// (0 ; p = 0) is expected to hold unconditionally; left absorption only
/// when the monad's constants are trivial.
template <class M>
std::pair<AxiomReport, AxiomReport> absorption_suite(
    const typename M::template val<int>& zero, int carrier,
    const std::vector<typename M::template val<int>>& universe,
    const ExtOpts& opts = {}) {
  auto nop = [](const typename M::template val<int>& a,
                const typename M::template val<int>&) { return a; };
  auto right = check_extensional<M>(AxiomId::RightAbsorb, nop, carrier, universe,
                                    opts, &zero);
  auto left = check_extensional<M>(AxiomId::LeftAbsorb, nop, carrier, universe,
                                   opts, &zero);
  return {right, left};
}

}  // namespace klab
