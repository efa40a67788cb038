#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klab/monad/bounds.hpp"
#include "klab/monad/show.hpp"
#include "klab/parallel.hpp"

namespace klab {

/// Fragment description for a three-level law check. `carrier` is the base
/// carrier size; each nesting level has its own bounds; when a nested value
/// universe exceeds `carrier_cap`, it is thinned deterministically (constant
/// stride over the sorted universe) before serving as the next level's
/// carrier. The check is exhaustive over the fragment so described.
struct LawFragment {
  int carrier = 2;
  Bounds level1{};
  Bounds level2{};
  Bounds level3{};
  std::size_t carrier_cap = 512;
  std::int64_t budget = 20'000'000;
};

struct LawReport {
  std::string monad;
  bool pass = false;
  std::int64_t checked = 0;
  std::string failed_law;   // empty when pass
  std::string counterexample;
};

namespace detail {
/// Deterministic constant-stride thinning; keeps the vector sorted so it can
/// serve as the next level's enumeration carrier.
template <class V>
std::vector<V> thin(std::vector<V> vs, std::size_t cap) {
  std::sort(vs.begin(), vs.end());
  if (cap == 0 || vs.size() <= cap) return vs;
  std::vector<V> out;
  out.reserve(cap);
  double stride = double(vs.size()) / double(cap);
  for (std::size_t k = 0; k < cap; ++k)
    out.push_back(vs[(std::size_t)(k * stride)]);
  return out;
}
}  // namespace detail

/// Exhaustively verifies the unit laws (mu . eta_T = mu . T eta = id) and
/// associativity (mu . mu_T = mu . T mu) of M over the given fragment.
template <class M>
LawReport check_monad_laws(const LawFragment& frag, Exec mode = default_exec()) {
  LawReport rep;
  rep.monad = M::name;

  std::vector<int> base(frag.carrier);
  for (int i = 0; i < frag.carrier; ++i) base[i] = i;

  using V1 = typename M::template val<int>;
  using V2 = typename M::template val<V1>;
  using V3 = typename M::template val<V2>;

  std::vector<V1> v1 = M::enumerate(base, frag.level1);
  NodeBudget budget(frag.budget);

  // Unit laws on T X.
  auto unit_ok = [&](const V1& t) {
    return M::mult(M::unit(t)) == t &&
           M::mult(M::map(t, [](int x) { return M::template unit<int>(x); })) == t;
  };
  std::int64_t bad = sweep_first_fail(
      (std::int64_t)v1.size(), [&](std::int64_t i) { return unit_ok(v1[(std::size_t)i]); }, mode);
  rep.checked += (std::int64_t)v1.size();
  if (bad != kNoFailure) {
    rep.failed_law = "unit";
    rep.counterexample = show(v1[(std::size_t)bad]);
    return rep;
  }

  // Unit laws on T T X as well, streamed; then associativity on T T T X.
  std::vector<V1> carrier2 = detail::thin(v1, frag.carrier_cap);
  std::vector<V2> v2 = M::enumerate(carrier2, frag.level2);
  budget.spend((std::int64_t)v2.size());

  auto unit2_ok = [&](const V2& t) {
    return M::mult(M::unit(t)) == t &&
           M::mult(M::map(t, [](const V1& x) { return M::unit(x); })) == t;
  };
  bad = sweep_first_fail(
      (std::int64_t)v2.size(), [&](std::int64_t i) { return unit2_ok(v2[(std::size_t)i]); },
      mode);
  rep.checked += (std::int64_t)v2.size();
  if (bad != kNoFailure) {
    rep.failed_law = "unit";
    rep.counterexample = show(v2[(std::size_t)bad]);
    return rep;
  }

  auto assoc_ok = [&](const V3& t) {
    return M::mult(M::mult(t)) ==
           M::mult(M::map(t, [](const V2& x) { return M::mult(x); }));
  };
  std::vector<V2> carrier3 = detail::thin(std::move(v2), frag.carrier_cap);
  BufferedSweep<V3, decltype(assoc_ok)> sweep(assoc_ok, mode);
  bool budget_ok = true;
  M::enumerate_visit(carrier3, frag.level3, [&](V3 t) {
    if (budget.remaining() <= 0) {
      budget_ok = false;
      return false;
    }
    budget.spend();
    return sweep.push(std::move(t));
  });
  sweep.finish();
  if (!budget_ok) throw resource_error("monad-law fragment exceeds node budget");
  rep.checked += sweep.total();
  if (sweep.failed()) {
    rep.failed_law = "associativity";
    rep.counterexample = show(*sweep.failing_value());
    return rep;
  }

  rep.pass = true;
  return rep;
}

/// Verifies the four coherence diagrams of a distributive law
/// Law: S T -> T S on the fragment (both unit triangles, both
/// multiplication squares).
template <class T, class S, class Law>
LawReport check_distributive_law(const LawFragment& frag,
                                 Exec mode = default_exec()) {
  LawReport rep;
  rep.monad = std::string(T::name) + "/" + S::name + " law";

  std::vector<int> base(frag.carrier);
  for (int i = 0; i < frag.carrier; ++i) base[i] = i;

  using TX = typename T::template val<int>;
  using SX = typename S::template val<int>;

  // (U1) law . eta^S_T = T eta^S on T X
  {
    std::vector<TX> ts = T::enumerate(base, frag.level1);
    auto ok = [&](const TX& t) {
      return Law::template apply<int>(S::unit(t)) ==
             T::map(t, [](int x) { return S::template unit<int>(x); });
    };
    std::int64_t bad = sweep_first_fail(
        (std::int64_t)ts.size(), [&](std::int64_t i) { return ok(ts[(std::size_t)i]); }, mode);
    rep.checked += (std::int64_t)ts.size();
    if (bad != kNoFailure) {
      rep.failed_law = "unit triangle (eta_S)";
      rep.counterexample = show(ts[(std::size_t)bad]);
      return rep;
    }
  }
  // (U2) law . S eta^T = eta^T_S on S X
  {
    std::vector<SX> ss = S::enumerate(base, frag.level1);
    auto ok = [&](const SX& s) {
      return Law::template apply<int>(
                 S::map(s, [](int x) { return T::template unit<int>(x); })) ==
             T::unit(s);
    };
    std::int64_t bad = sweep_first_fail(
        (std::int64_t)ss.size(), [&](std::int64_t i) { return ok(ss[(std::size_t)i]); }, mode);
    rep.checked += (std::int64_t)ss.size();
    if (bad != kNoFailure) {
      rep.failed_law = "unit triangle (eta_T)";
      rep.counterexample = show(ss[(std::size_t)bad]);
      return rep;
    }
  }
  // (M1) law . mu^S_T = T mu^S . law_S . S law on S S T X
  {
    std::vector<TX> ts = T::enumerate(base, frag.level1);
    std::vector<TX> tc = detail::thin(ts, frag.carrier_cap);
    auto sts = S::enumerate(tc, frag.level2);
    auto sst = S::enumerate(detail::thin(sts, frag.carrier_cap), frag.level3);
    using SST = typename S::template val<typename S::template val<TX>>;
    auto ok = [&](const SST& v) {
      auto lhs = Law::template apply<int>(S::mult(v));
      auto s_law = S::map(v, [](const typename S::template val<TX>& w) {
        return Law::template apply<int>(w);
      });
      auto law_s = Law::template apply<SX>(s_law);
      auto rhs = T::map(law_s, [](const typename S::template val<SX>& w) {
        return S::mult(w);
      });
      return lhs == rhs;
    };
    std::int64_t bad = sweep_first_fail(
        (std::int64_t)sst.size(), [&](std::int64_t i) { return ok(sst[(std::size_t)i]); },
        mode);
    rep.checked += (std::int64_t)sst.size();
    if (bad != kNoFailure) {
      rep.failed_law = "multiplication square (mu_S)";
      rep.counterexample = show(sst[(std::size_t)bad]);
      return rep;
    }
  }
  // (M2) law . S mu^T = mu^T_S . T law . law_T on S T T X
  {
    std::vector<TX> ts = T::enumerate(base, frag.level1);
    auto tts = T::enumerate(detail::thin(ts, frag.carrier_cap), frag.level2);
    auto stt = S::enumerate(detail::thin(tts, frag.carrier_cap), frag.level3);
    using STT = typename S::template val<typename T::template val<TX>>;
    auto ok = [&](const STT& v) {
      auto lhs = Law::template apply<int>(
          S::map(v, [](const typename T::template val<TX>& w) { return T::mult(w); }));
      auto law_t = Law::template apply<TX>(v);
      auto t_law = T::map(law_t, [](const typename S::template val<TX>& w) {
        return Law::template apply<int>(w);
      });
      auto rhs = T::mult(t_law);
      return lhs == rhs;
    };
    std::int64_t bad = sweep_first_fail(
        (std::int64_t)stt.size(), [&](std::int64_t i) { return ok(stt[(std::size_t)i]); },
        mode);
    rep.checked += (std::int64_t)stt.size();
    if (bad != kNoFailure) {
      rep.failed_law = "multiplication square (mu_T)";
      rep.counterexample = show(stt[(std::size_t)bad]);
      return rep;
    }
  }

  rep.pass = true;
  return rep;
}

}  // namespace klab
