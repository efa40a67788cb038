#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klab/monad/composite.hpp"
#include "klab/monad/dist.hpp"
#include "klab/monad/kernel.hpp"
#include "klab/monad/laws.hpp"
#include "klab/monad/maybe.hpp"
#include "klab/monad/multiset.hpp"
#include "klab/monad/powerset.hpp"
#include "klab/rat.hpp"

using namespace klab;

namespace {
// dist_monad with a deliberately wrong multiplication, for checker coverage
struct broken_dist : dist_monad {
  template <class X>
  static val<X> mult(const val<val<X>>& m) {
    auto r = dist_monad::mult(m);
    if (r.entries.size() > 1) std::swap(r.entries[0].second, r.entries[1].second);
    return r;
  }
};
}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(1) - Rat(1, 3) == Rat(2, 3));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat::parse("3/10") == Rat(3, 10));
  CHECK(Rat::parse("0.25") == Rat(1, 4));
  CHECK(Rat::parse("-0.5") == Rat(-1, 2));
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(INT64_MAX, 1) + Rat(INT64_MAX, 1), rat_overflow);
}

TEST_CASE("units") {
  CHECK(dist_monad::unit(7) == Dist<int>::point(7));
  CHECK(dist_monad::unit(7).weight(7) == Rat(1));
  CHECK(nat_multiset_monad::unit(3) == MultiSet<int, nat_semiring>{{{3, 1}}});
  CHECK(maybe_monad::unit(4) == Maybe<int>(4));
  CHECK(dtraj_monad::unit(9).duration() == 0);
}

TEST_CASE("dist mult is the weighted average") {
  auto ab = Dist<int>::make({{0, Rat(1, 2)}, {1, Rat(1, 2)}});
  auto a = Dist<int>::point(0);
  auto nested = Dist<Dist<int>>::make({{ab, Rat(1, 2)}, {a, Rat(1, 2)}});
  auto flat = dist_monad::mult(nested);
  CHECK(flat == Dist<int>::make({{0, Rat(3, 4)}, {1, Rat(1, 4)}}));
}

TEST_CASE("multiset mult multiplies weights through") {
  using MS = MultiSet<int, nat_semiring>;
  MS inner{{{0, 2}}};
  MultiSet<MS, nat_semiring> nested{{{inner, 3}}};
  CHECK(nat_multiset_monad::mult(nested) == MS{{{0, 6}}});
}

TEST_CASE("discrete hybrid mult concatenates start points then the last leg") {
  using T = DTraj<int>;
  // f with d=1, f(0) = [a], f(1) = [b, c]  ->  [a, b, c]
  DTraj<T> f{{T{{0}}, T{{1, 2}}}};
  CHECK(dtraj_monad::mult(f) == T{{0, 1, 2}});
}

TEST_CASE("discrete concat keeps the junction value from the right") {
  DTraj<int> a{{5, 6}}, b{{7, 8}};
  CHECK(dtraj_concat(a, b) == DTraj<int>{{5, 7, 8}});
}

TEST_CASE("kleisli composition: unit is the identity, coin then flip") {
  auto coin = Kernel<dist_monad>{
      Dist<int>::make({{0, Rat(1, 2)}, {1, Rat(1, 2)}}),
      Dist<int>::make({{0, Rat(1, 2)}, {1, Rat(1, 2)}})};
  auto flip = Kernel<dist_monad>{Dist<int>::point(1), Dist<int>::point(0)};
  auto u = unit_kernel<dist_monad>(2);
  CHECK(kleisli<dist_monad>(u, flip) == flip);
  CHECK(kleisli<dist_monad>(flip, u) == flip);
  auto both = kleisli<dist_monad>(coin, flip);
  CHECK(both[0] == Dist<int>::make({{0, Rat(1, 2)}, {1, Rat(1, 2)}}));
  CHECK_THROWS_AS(kleisli<dist_monad>(coin, Kernel<dist_monad>{}),
                  std::invalid_argument);
}

TEST_CASE("empty carriers are handled without crashing") {
  std::vector<int> none;
  CHECK(dist_monad::enumerate(none, Bounds{}).empty());
  CHECK(dtraj_monad::enumerate(none, Bounds{}).empty());
  auto mv = maybe_monad::enumerate(none, Bounds{});
  REQUIRE(mv.size() == 1);  // only bottom
  CHECK(!mv[0].has_value());
}

TEST_CASE("monad laws hold exhaustively on the acceptance fragments") {
  SUBCASE("maybe") {
    LawFragment f;
    f.carrier = 3;
    auto rep = check_monad_laws<maybe_monad>(f);
    CHECK(rep.pass);
  }
  SUBCASE("dist") {
    LawFragment f;
    f.carrier = 3;
    f.level1.denom = 4;
    f.level2 = Bounds{.denom = 4, .max_support = 3};
    f.level3 = Bounds{.denom = 4, .max_support = 2};
    f.carrier_cap = 96;
    auto rep = check_monad_laws<dist_monad>(f);
    CHECK(rep.pass);
    CHECK(rep.checked > 1000);
  }
  SUBCASE("multiset over Nat") {
    LawFragment f;
    f.carrier = 2;
    f.level1.max_weight = 3;
    f.level2 = Bounds{.max_weight = 3, .max_support = 2};
    f.level3 = Bounds{.max_weight = 2, .max_support = 2};
    f.carrier_cap = 96;
    auto rep = check_monad_laws<nat_multiset_monad>(f);
    CHECK(rep.pass);
  }
  SUBCASE("discrete hybrid") {
    LawFragment f;
    f.carrier = 2;
    f.level1.max_duration = 2;
    f.level2.max_duration = 2;
    f.level3.max_duration = 2;
    f.carrier_cap = 24;
    auto rep = check_monad_laws<dtraj_monad>(f);
    CHECK(rep.pass);
  }
  SUBCASE("a broken mu is caught") {
    LawFragment f;
    f.carrier = 2;
    f.level1.denom = 2;
    f.level2 = Bounds{.denom = 2, .max_support = 2};
    f.level3 = Bounds{.denom = 2, .max_support = 2};
    auto rep = check_monad_laws<broken_dist>(f);
    CHECK(!rep.pass);
    CHECK(!rep.counterexample.empty());
  }
}

TEST_CASE("hybrid mu adds durations") {
  Bounds b;
  b.max_duration = 2;
  std::vector<int> base{0, 1};
  auto v1 = dtraj_monad::enumerate(base, b);
  std::sort(v1.begin(), v1.end());
  auto v2 = dtraj_monad::enumerate(v1, b);
  for (const auto& f : v2) {
    CHECK(dtraj_monad::mult(f).duration() == f.duration() + f.end().duration());
  }
}

TEST_CASE("composite Dist.Maybe: delta cases and derived laws") {
  using DM = with_maybe<dist_monad>;
  SUBCASE("delta on Just mu re-injects the carrier") {
    auto mu = Dist<int>::make({{0, Rat(1, 2)}, {1, Rat(1, 2)}});
    auto out = maybe_over<dist_monad>::apply<int>(Maybe<Dist<int>>(mu));
    CHECK(out == Dist<Maybe<int>>::make(
                     {{Maybe<int>(0), Rat(1, 2)}, {Maybe<int>(1), Rat(1, 2)}}));
  }
  SUBCASE("delta on bottom is the point mass at bottom") {
    auto out = maybe_over<dist_monad>::apply<int>(Maybe<Dist<int>>{});
    CHECK(out == Dist<Maybe<int>>::point(Maybe<int>{}));
  }
  SUBCASE("derived monad laws") {
    LawFragment f;
    f.carrier = 3;
    f.level1.denom = 4;
    f.level2 = Bounds{.denom = 4, .max_support = 2};
    f.level3 = Bounds{.denom = 4, .max_support = 2};
    f.carrier_cap = 64;
    auto rep = check_monad_laws<DM>(f);
    CHECK(rep.pass);
  }
  SUBCASE("distributive law diagrams") {
    LawFragment f;
    f.carrier = 2;
    f.level1.denom = 4;
    f.level2 = Bounds{.denom = 4, .max_support = 2};
    f.level3 = Bounds{.denom = 4, .max_support = 2};
    f.carrier_cap = 64;
    auto rep = check_distributive_law<dist_monad, maybe_monad,
                                      maybe_over<dist_monad>>(f);
    CHECK(rep.pass);
  }
}

TEST_CASE("weights stay normalized through composite operations") {
  using DM = with_maybe<dist_monad>;
  Bounds b{.denom = 3, .max_support = 2};
  std::vector<int> base{0, 1};
  auto vals = DM::enumerate(base, b);
  for (const auto& v : vals) {
    Rat total(0);
    for (auto& [k, w] : v.entries) total += w;
    CHECK(total == Rat(1));
    auto m = DM::mult(DM::unit(v));
    CHECK(m == v);
  }
}

TEST_CASE("semiring common-integer-divisor decomposition") {
  auto c = rat_semiring::cid({Rat(5, 6), Rat(1, 2), Rat(2, 3)});
  CHECK(c.divisor == Rat(1, 6));
  CHECK(c.multipliers == std::vector<long long>{5, 3, 4});
  auto n = nat_semiring::cid({4, 7});
  CHECK(n.divisor == 1);
  CHECK(n.multipliers == std::vector<long long>{4, 7});
}
