#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klab/monad/composite.hpp"
#include "klab/nat/constants.hpp"
#include "klab/nat/enumerate.hpp"
#include "klab/nat/naturality.hpp"
#include "klab/nat/orbits.hpp"
#include "klab/nat/spec.hpp"

using namespace klab;

namespace {

TableFamily maybe_table(const Universe<maybe_monad>& u, const MaybeCode& code) {
  return materialize<maybe_monad>(
      u, 2, [&](int, std::span<const Maybe<int>> args) {
        return apply_nt(code, args[0], args[1]);
      });
}

}  // namespace

TEST_CASE("apply_nt formulas") {
  SUBCASE("convex combination") {
    auto a = Dist<int>::point(0), b = Dist<int>::point(1);
    auto r = apply_nt(ConvexCombo{Rat(1, 3)}, a, b);
    CHECK(r == Dist<int>::make({{0, Rat(1, 3)}, {1, Rat(2, 3)}}));
  }
  SUBCASE("powerset shrink: phi({1,2}) = {1}") {
    auto s = PowersetShrink::make(2, {0u, 1u, 2u, 1u});
    std::vector<PSet<int>> args{PSet<int>{{0}}, PSet<int>{{1}}};
    CHECK(apply_nt(s, std::span<const PSet<int>>(args)) == PSet<int>{{0}});
    CHECK_THROWS_AS(PowersetShrink::make(2, {1u, 1u, 2u, 3u}),
                    std::invalid_argument);
  }
  SUBCASE("multiset weights phi == (2,3)") {
    MultisetWeights<nat_semiring> s{
        2, [](const std::vector<long long>&) {
          return std::vector<long long>{2, 3};
        }};
    using MS = MultiSet<int, nat_semiring>;
    std::vector<MS> args{MS{{{0, 1}}}, MS{{{0, 2}, {1, 1}}}};
    CHECK(apply_nt(s, std::span<const MS>(args)) == MS{{{0, 8}, {1, 3}}});
  }
  SUBCASE("hybrid concat routes left then right") {
    DTraj<int> a{{7, 7}}, b{{8, 8, 8}};
    auto r = apply_nt(HybridScheme{HybridScheme::Kind::Concat, {}}, a, b);
    CHECK(r == DTraj<int>{{7, 8, 8, 8}});
    auto l = apply_nt(HybridScheme{HybridScheme::Kind::LeftProj, {}}, a, b);
    CHECK(l == a);
  }
  SUBCASE("subdist weights route mass and keep the remainder on bottom") {
    SubDistWeights s{[](const Rat& m1, const Rat& m2) {
      return std::pair<Rat, Rat>(m1 * Rat(1, 2), m2 * Rat(1, 2));
    }};
    auto a = SubDist<int>::make({{Maybe<int>(0), Rat(1)}});
    auto b = SubDist<int>::make({{Maybe<int>{}, Rat(1)}});
    auto r = apply_nt(s, a, b);
    CHECK(r == SubDist<int>::make(
                   {{Maybe<int>(0), Rat(1, 2)}, {Maybe<int>{}, Rat(1, 2)}}));
  }
}

TEST_CASE("constants follow the empty-carrier computation") {
  Bounds b;
  b.max_duration = 2;
  SUBCASE("maybe has exactly the bottom constant") {
    auto c = constants_of<maybe_monad>(b);
    REQUIRE(c.constants.size() == 1);
    CHECK(!c.constants[0].has_value());
    CHECK(!c.truncated_family);
  }
  SUBCASE("dist and hybrid have none") {
    CHECK(constants_of<dist_monad>(b).constants.empty());
    CHECK(constants_of<dtraj_monad>(b).constants.empty());
    CHECK(constants_of<qset_monad>(b).constants.empty());
  }
  SUBCASE("dist-with-failure has exactly the bottom point mass") {
    auto c = constants_of<with_maybe<dist_monad>>(b);
    REQUIRE(c.constants.size() == 1);
    CHECK(c.constants[0] == Dist<Maybe<int>>::point(Maybe<int>{}));
    CHECK(!c.truncated_family);
  }
  SUBCASE("hybrid-with-failure is a duration-indexed family") {
    auto c = constants_of<with_maybe<dtraj_monad>>(b);
    CHECK(c.constants.size() == 3);  // durations 0, 1, 2
    CHECK(c.truncated_family);
    // the induced constant at any carrier is the all-bottom trajectory
    auto at_x = constant_at<with_maybe<dtraj_monad>>(c.constants[2]);
    CHECK(at_x.duration() == 2);
    for (const auto& v : at_x.values) CHECK(!v.has_value());
  }
  SUBCASE("multiset has exactly the zero multiset") {
    CHECK(constants_of<nat_multiset_monad>(b).constants.size() == 1);
  }
  SUBCASE("powerset has exactly the empty set") {
    auto c = constants_of<powerset_monad>(b);
    REQUIRE(c.constants.size() == 1);
    CHECK(c.constants[0].empty());
  }
}

TEST_CASE("maybe: exactly 12 binary naturals, all distinct, all natural") {
  Universe<maybe_monad> u(3, Bounds{});
  auto res = enumerate_natural(u, 2);
  CHECK(res.complete);
  CHECK(res.families.size() == 12);

  // they are exactly the twelve coordinate codes
  std::vector<TableFamily> coded;
  for (const auto& c : all_maybe_codes()) coded.push_back(maybe_table(u, c));
  std::sort(coded.begin(), coded.end());
  auto found = res.families;
  std::sort(found.begin(), found.end());
  CHECK(found == coded);

  for (const auto& fam : res.families)
    CHECK(!check_naturality(u, fam).has_value());
}

TEST_CASE("maybe: arity 1 has exactly identity and constant-bottom") {
  Universe<maybe_monad> u(3, Bounds{});
  auto res = enumerate_natural(u, 1);
  CHECK(res.complete);
  CHECK(res.families.size() == 2);
}

TEST_CASE("a non-natural candidate is rejected with a witness") {
  // "return the argument with larger support, ties left" on Dist
  Universe<dist_monad> u(3, Bounds{.denom = 2});
  auto sq = check_naturality_rule<dist_monad>(
      u, 2, [&](int, std::span<const Dist<int>> args) {
        return args[1].entries.size() > args[0].entries.size() ? args[1]
                                                               : args[0];
      });
  REQUIRE(sq.has_value());
  CHECK(!sq->text.empty());
}

TEST_CASE("powerset: exactly 16 binary naturals on carriers <= 3") {
  Universe<powerset_monad> u(3, Bounds{});
  auto res = enumerate_natural(u, 2);
  CHECK(res.complete);
  CHECK(res.families.size() == 16);

  // in bijection with shrink maps phi(J) subset of J on 2^2
  std::vector<TableFamily> coded;
  for (unsigned j1 : {0u, 1u})
    for (unsigned j2 : {0u, 2u})
      for (unsigned j3 = 0; j3 < 4; ++j3) {
        auto s = PowersetShrink::make(2, {0u, j1, j2, j3});
        coded.push_back(materialize<powerset_monad>(
            u, 2, [&](int, std::span<const PSet<int>> args) {
              return apply_nt(s, args);
            }));
      }
  std::sort(coded.begin(), coded.end());
  auto found = res.families;
  std::sort(found.begin(), found.end());
  CHECK(found == coded);
}

TEST_CASE("rational distributions: the naturals found are the convex sums") {
  // inputs on the sixth grid; outputs need the 36th grid to hold the combos
  Universe<dist_monad> u(3, Bounds{.denom = 6}, Bounds{.denom = 36});
  auto res = enumerate_natural(u, 2, 50'000'000);
  CHECK(res.complete);
  CHECK(res.families.size() == 7);  // lambda in {0, 1/6, ..., 1}

  std::vector<TableFamily> coded;
  for (int k = 0; k <= 6; ++k) {
    ConvexCombo cc{Rat(k, 6)};
    coded.push_back(materialize<dist_monad>(
        u, 2, [&](int, std::span<const Dist<int>> args) {
          return apply_nt(cc, args[0], args[1]);
        }));
  }
  std::sort(coded.begin(), coded.end());
  auto found = res.families;
  std::sort(found.begin(), found.end());
  CHECK(found == coded);
}

TEST_CASE("typed specs pass naturality on their fragments") {
  SUBCASE("convex combo") {
    Universe<dist_monad> u(3, Bounds{.denom = 4});
    ConvexCombo cc{Rat(1, 2)};
    auto sq = check_naturality_rule<dist_monad>(
        u, 2, [&](int, std::span<const Dist<int>> args) {
          return apply_nt(cc, args[0], args[1]);
        });
    CHECK(!sq.has_value());
  }
  SUBCASE("hybrid schemes including a custom rule") {
    Universe<dtraj_monad> u(2, Bounds{.max_duration = 2});
    for (auto kind : {HybridScheme::Kind::LeftProj, HybridScheme::Kind::RightProj,
                      HybridScheme::Kind::Concat}) {
      HybridScheme s{kind, {}};
      auto sq = check_naturality_rule<dtraj_monad>(
          u, 2, [&](int, std::span<const DTraj<int>> args) {
            return apply_nt(s, args[0], args[1]);
          });
      CHECK(!sq.has_value());
    }
    // swap-concat: right argument first; still natural
    HybridScheme rev{HybridScheme::Kind::Custom,
                     [](int i, int j) {
                       HybridScheme::Routed r;
                       r.duration = i + j;
                       for (int t = 0; t <= i + j; ++t)
                         r.route.emplace_back(t < j ? 1 : 0, t < j ? t : t - j);
                       return r;
                     }};
    auto sq = check_naturality_rule<dtraj_monad>(
        u, 2, [&](int, std::span<const DTraj<int>> args) {
          return apply_nt(rev, args[0], args[1]);
        });
    CHECK(!sq.has_value());
  }
  SUBCASE("multiset weighted sums") {
    Universe<nat_multiset_monad> u(2, Bounds{.max_weight = 2});
    MultisetWeights<nat_semiring> s{2, [](const std::vector<long long>&) {
                                      return std::vector<long long>{2, 3};
                                    }};
    auto sq = check_naturality_rule<nat_multiset_monad>(
        u, 2, [&](int, std::span<const MultiSet<int, nat_semiring>> args) {
          return apply_nt(s, args);
        });
    CHECK(!sq.has_value());
  }
}

TEST_CASE("shrink outputs never leave the union of the inputs") {
  Universe<powerset_monad> u(3, Bounds{});
  for (unsigned j1 : {0u, 1u})
    for (unsigned j2 : {0u, 2u})
      for (unsigned j3 = 0; j3 < 4; ++j3) {
        auto s = PowersetShrink::make(2, {0u, j1, j2, j3});
        for (const auto& a : u.vals(3))
          for (const auto& b : u.vals(3)) {
            std::vector<PSet<int>> args{a, b};
            auto out = apply_nt(s, std::span<const PSet<int>>(args));
            for (int x : out.elems)
              CHECK((a.contains(x) || b.contains(x)));
          }
      }
}

TEST_CASE("orbit decompositions") {
  SUBCASE("dist arity 1 is a single orbit") {
    Universe<dist_monad> u(3, Bounds{.denom = 4});
    auto dec = orbits(u, 1);
    CHECK(dec.orbits.size() == 1);
  }
  SUBCASE("subdist arity 1: one orbit per mass value in the fragment") {
    Universe<with_maybe<dist_monad>> u(3, Bounds{.denom = 4});
    auto dec = orbits(u, 1);
    CHECK(dec.orbits.size() == 5);  // masses 0, 1/4, ..., 1
    // every member of an orbit has the same mass as its representative
    for (const auto& o : dec.orbits) {
      TupleInputs<with_maybe<dist_monad>> in(u, 1);
      Rat mass(-1);
      for (auto [m, t] : o.members) {
        const auto& v = u.vals(m)[(std::size_t)in.decode(m, t)[0]];
        Rat live(0);
        for (auto& [k, w] : v.entries)
          if (k) live += w;
        if (mass == Rat(-1)) mass = live;
        CHECK(mass == live);
      }
    }
  }
  SUBCASE("multiset arity 2: orbits labelled by pairs of total masses") {
    Universe<nat_multiset_monad> u(2, Bounds{.max_weight = 3});
    auto dec = orbits(u, 2);
    // totals 0..6 per side on carrier 2 after closure; count pairs present
    TupleInputs<nat_multiset_monad> in(u, 2);
    std::set<std::pair<long long, long long>> labels;
    for (int m = 1; m <= 2; ++m)
      for (long long t = 0; t < in.count(m); ++t) {
        auto parts = in.decode(m, t);
        labels.emplace(u.vals(m)[(std::size_t)parts[0]].total(),
                       u.vals(m)[(std::size_t)parts[1]].total());
      }
    CHECK(dec.orbits.size() == labels.size());
  }
}

TEST_CASE("naturality violations stay inside the modified orbit") {
  Universe<maybe_monad> u(2, Bounds{});
  auto fam = maybe_table(u, MaybeCode{M2Coord::Left, M1Coord::Keep, M1Coord::Keep});
  // flip one entry inside the orbit of (bottom, bottom) pairs: all all-bottom
  // tuples form their own orbit; perturbing it cannot be witnessed elsewhere.
  TupleInputs<maybe_monad> in(u, 2);
  auto dec = orbits(u, 2);
  // locate the orbit containing carrier-1 input (bottom, bottom)
  int bot = u.val_index(1, Maybe<int>{});
  long long target = in.encode(1, {bot, bot});
  const Orbit* horbit = nullptr;
  for (const auto& o : dec.orbits)
    for (auto [m, t] : o.members)
      if (m == 1 && t == target) horbit = &o;
  REQUIRE(horbit != nullptr);
  // perturb the family everywhere on that orbit to Just 0 at carrier 1 (an
  // arbitrary wrong value) and check every violation involves the orbit
  TableFamily mod = fam;
  for (auto [m, t] : horbit->members)
    mod.out[(std::size_t)m - 1][(std::size_t)t] = u.val_index(m, Maybe<int>(0));
  auto sq = check_naturality(u, mod);
  REQUIRE(sq.has_value());
  auto in_orbit = [&](int m, long long t) {
    for (auto [om, ot] : horbit->members)
      if (om == m && ot == t) return true;
    return false;
  };
  int f_idx = 0;
  for (int k = (int)sq->f.size() - 1; k >= 0; --k)
    f_idx = f_idx * sq->n + sq->f[(std::size_t)k];
  long long pushed = in.push(sq->m, sq->n, f_idx, sq->input);
  bool witnessed_in_orbit = in_orbit(sq->m, sq->input) || in_orbit(sq->n, pushed);
  CHECK(witnessed_in_orbit);
}

TEST_CASE("unit enumeration for the set-of-distributions functor") {
  using pd_functor = composite_monad<powerset_monad, dist_monad, void>;
  Universe<pd_functor> u(4, Bounds{.denom = 2, .max_support = 2});
  auto res = enumerate_units(u);
  CHECK(res.complete);
  CHECK(res.families.size() == 2);  // empty-set constant and x -> {dirac x}
}
