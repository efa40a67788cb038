#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klab/combine/hq_suite.hpp"
#include "klab/combine/ite_suite.hpp"
#include "klab/combine/lift.hpp"
#include "klab/combine/pd_suite.hpp"
#include "klab/monad/laws.hpp"

using namespace klab;

TEST_CASE("double strength on distributions is the product") {
  auto a = Dist<int>::make({{0, Rat(1, 2)}, {1, Rat(1, 2)}});
  auto b = Dist<int>::point(7);
  auto p = dst<dist_monad, int, int>(a, b);
  CHECK(p == Dist<std::pair<int, int>>::make(
                 {{{0, 7}, Rat(1, 2)}, {{1, 7}, Rat(1, 2)}}));
}

TEST_CASE("lifted constants") {
  CHECK(lifted_zero<dist_monad>() == Dist<Maybe<int>>::point(Maybe<int>{}));
  auto hz = lifted_zero<dtraj_monad>();
  CHECK(hz.duration() == 0);  // the d = 0 member of the abort family
  CHECK(!hz.values[0].has_value());
}

TEST_CASE("lift2 of a left-biased selection") {
  auto ja = with_maybe<dist_monad>::unit(5);
  auto bot = lifted_zero<dist_monad>();
  auto out = lift2<dist_monad, maybe_monad, int>(
      ja, bot, [](const Maybe<int>& l, const Maybe<int>& r) {
        return apply_nt(policy_code(SelectionPolicy::LeftBiased), l, r);
      });
  CHECK(out == ja);
}

TEST_CASE("tests interpret as guarded units") {
  using T = dist_monad;
  int n = 4;
  TestPred even{{true, false, true, false}};
  auto k = interpret_test<T>(even);
  CHECK(k[0] == with_maybe<T>::unit(0));
  CHECK(k[1] == lifted_zero<T>());

  SUBCASE("negation flips, double negation restores") {
    auto nk = interpret_test<T>(even.negate());
    CHECK(nk[0] == lifted_zero<T>());
    CHECK(nk[1] == with_maybe<T>::unit(1));
    CHECK(interpret_test<T>(even.negate().negate()) == k);
  }
  SUBCASE("true is the unit, false is the zero") {
    auto one = interpret_test<T>(TestPred::always(n, true));
    CHECK(one == unit_kernel<with_maybe<T>>(n));
    auto zero = interpret_test<T>(TestPred::always(n, false));
    for (auto& v : zero) CHECK(v == lifted_zero<T>());
  }
  SUBCASE("conjunction is kleisli composition: even; (< 2)") {
    TestPred lt2{{true, true, false, false}};
    auto both = kleisli<with_maybe<T>>(k, interpret_test<T>(lt2));
    CHECK(both[0] == with_maybe<T>::unit(0));   // even and < 2
    CHECK(both[2] == lifted_zero<T>());          // even but not < 2
    CHECK(both[1] == lifted_zero<T>());
    CHECK(both == interpret_test<T>(TestPred{{true, false, false, false}}));
  }
}

TEST_CASE("if-then-else picks branches pointwise") {
  using T = dist_monad;
  using TM = with_maybe<T>;
  int n = 4;
  TestPred even{{true, false, true, false}};
  // p: x -> just(x + 1 mod 4); q: x -> half just(x), half just(x + 2 mod 4)
  Kernel<TM> p, q;
  for (int x = 0; x < n; ++x) {
    p.push_back(TM::unit((x + 1) % n));
    q.push_back(Dist<Maybe<int>>::make({{Maybe<int>(x), Rat(1, 2)},
                                        {Maybe<int>((x + 2) % n), Rat(1, 2)}}));
  }
  auto ite = if_then_else<T>(even, p, q);
  CHECK(ite[2] == TM::unit(3));
  CHECK(ite[3] == Dist<Maybe<int>>::make({{Maybe<int>(3), Rat(1, 2)},
                                          {Maybe<int>(1), Rat(1, 2)}}));
  CHECK(ite == case_split_ite<T>(even, p, q));
}

TEST_CASE("guarded-choice equations hold on the small fragments") {
  auto rep = ite_axiom_suite(/*max_carrier=*/2, /*denom=*/2,
                             /*sampled_carrier=*/4, /*samples=*/60);
  INFO(rep.witness);
  CHECK(rep.pass());
}

TEST_CASE("lifting keeps the inner algebra when the outer monad commutes") {
  using T = dist_monad;
  using TM = with_maybe<T>;
  std::vector<int> carrier{0, 1};
  auto vals = TM::enumerate(carrier, Bounds{.denom = 2});
  auto lift_code = [](const MaybeCode& code, const Dist<Maybe<int>>& a,
                      const Dist<Maybe<int>>& b) {
    return lift2<T, maybe_monad, int>(
        a, b, [&](const Maybe<int>& l, const Maybe<int>& r) {
          return apply_nt(code, l, r);
        });
  };
  // bottom-on-clash is commutative and keeps its unit after lifting
  MaybeCode boc = policy_code(SelectionPolicy::BottomOnClash);
  auto zero = lifted_zero<T>();
  for (const auto& a : vals) {
    CHECK(lift_code(boc, a, zero) == a);
    CHECK(lift_code(boc, zero, a) == a);
    for (const auto& b : vals)
      CHECK(lift_code(boc, a, b) == lift_code(boc, b, a));
  }
}

TEST_CASE("selection law: enumerating pointwise choices") {
  using L = selections_over_dtraj<true>;
  // f: d=1, f(0) = {a}, f(1) = {b, c}
  DTraj<PSet<int>> f{{PSet<int>{{0}}, PSet<int>{{1, 2}}}};
  auto out = L::apply<int>(f);
  CHECK(out == PSet<DTraj<int>>::make({DTraj<int>{{0, 1}}, DTraj<int>{{0, 2}}}));

  // constant singleton family stays a singleton
  DTraj<PSet<int>> g{{PSet<int>{{1}}, PSet<int>{{1}}}};
  CHECK(L::apply<int>(g).elems.size() == 1);
}

TEST_CASE("hq suite: laws pass, the full-powerset variant breaks, union behaves") {
  auto rep = hq_suite();
  CHECK(rep.law.pass);
  CHECK(rep.full_powerset_theta_fails);
  CHECK(!rep.theta_witness.empty());
  CHECK(rep.union_commutative);
  CHECK(rep.union_idempotent);
  CHECK(rep.union_associative);
  CHECK(rep.union_has_no_unit);
  CHECK(rep.pass());
}

TEST_CASE("the composite of sets over trajectories is a monad on fragments") {
  LawFragment f;
  f.carrier = 2;
  f.level1 = Bounds{.max_duration = 1, .max_support = 2};
  f.level2 = Bounds{.max_duration = 1, .max_support = 2};
  f.level3 = Bounds{.max_duration = 1, .max_support = 1};
  f.carrier_cap = 32;
  auto rep = check_monad_laws<qh_monad>(f);
  CHECK(rep.pass);
}

TEST_CASE("no monad structure on sets of distributions") {
  auto rep = pd_suite();
  CHECK(rep.unit_families == 2);
  CHECK(rep.diracs_only);
  CHECK(rep.forced_value_escapes);
  CHECK(rep.empty_unit_fails);
  CHECK(rep.pass());
}
