#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klab/axioms/axioms.hpp"
#include "klab/axioms/coord.hpp"
#include "klab/axioms/impossibility.hpp"
#include "klab/monad/composite.hpp"
#include "klab/monad/multiset.hpp"

using namespace klab;

TEST_CASE("coordinate criteria on maybe codes") {
  CHECK(coord_commutative(MaybeCode{M2Coord::Bot, M1Coord::Keep, M1Coord::Keep}));
  CHECK(coord_commutative(MaybeCode{M2Coord::Bot, M1Coord::Drop, M1Coord::Drop}));
  CHECK(!coord_commutative(MaybeCode{M2Coord::Left, M1Coord::Keep, M1Coord::Keep}));
  CHECK(!coord_commutative(MaybeCode{M2Coord::Bot, M1Coord::Keep, M1Coord::Drop}));

  CHECK(coord_idempotent(MaybeCode{M2Coord::Left, M1Coord::Drop, M1Coord::Keep}));
  CHECK(coord_idempotent(MaybeCode{M2Coord::Right, M1Coord::Keep, M1Coord::Keep}));
  CHECK(!coord_idempotent(MaybeCode{M2Coord::Bot, M1Coord::Keep, M1Coord::Keep}));

  int with_unit = 0;
  for (const auto& c : all_maybe_codes()) with_unit += coord_has_unit_bottom(c);
  CHECK(with_unit == 3);
  CHECK(!coord_has_unit_bottom(MaybeCode{M2Coord::Left, M1Coord::Drop, M1Coord::Keep}));
}

TEST_CASE("coordinate criteria on hybrid schemes") {
  HybridScheme left{HybridScheme::Kind::LeftProj, {}};
  HybridScheme cat{HybridScheme::Kind::Concat, {}};
  CHECK(!coord_commutative(left));
  CHECK(!coord_commutative(cat));
  CHECK(coord_idempotent(left));
  CHECK(!coord_idempotent(cat));
  CHECK(!coord_has_unit(cat));
  // a pointwise mix of the two projections is still idempotent
  HybridScheme mix{HybridScheme::Kind::Custom, [](int i, int j) {
                     HybridScheme::Routed r;
                     r.duration = i;
                     for (int t = 0; t <= i; ++t)
                       r.route.emplace_back(t % 2 == 0 && t <= j ? 1 : 0, t);
                     return r;
                   }};
  CHECK(coord_idempotent(mix));
}

TEST_CASE("extensional checks on distributions") {
  std::vector<int> carrier{0, 1, 2};
  auto universe = dist_monad::enumerate(carrier, Bounds{.denom = 4});
  auto avg = [](const Dist<int>& a, const Dist<int>& b) {
    return convex(Rat(1, 2), a, b);
  };
  auto third = [](const Dist<int>& a, const Dist<int>& b) {
    return convex(Rat(1, 3), a, b);
  };

  auto rep = check_extensional<dist_monad>(AxiomId::Commutativity, avg, 3, universe);
  CHECK(rep.holds);
  rep = check_extensional<dist_monad>(AxiomId::Commutativity, third, 3, universe);
  CHECK(!rep.holds);
  CHECK(!rep.witness.empty());

  // every convex combination is idempotent
  for (int k = 0; k <= 4; ++k) {
    Rat l(k, 4);
    auto cc = [l](const Dist<int>& a, const Dist<int>& b) { return convex(l, a, b); };
    CHECK(check_extensional<dist_monad>(AxiomId::Idempotence, cc, 3, universe).holds);
  }

  // the average is not associative; projections are
  rep = check_extensional<dist_monad>(AxiomId::Associativity, avg, 3, universe);
  CHECK(!rep.holds);
  auto projl = [](const Dist<int>& a, const Dist<int>&) { return a; };
  CHECK(check_extensional<dist_monad>(AxiomId::Associativity, projl, 3, universe).holds);

  // sequencing distributes over every convex combination on both sides
  ExtOpts opts;
  opts.exhaustive_limit = 5000;  // keeps the kernel space sampled
  rep = check_extensional<dist_monad>(AxiomId::RightDistOverSeq, avg, 3, universe, opts);
  CHECK(rep.holds);
  rep = check_extensional<dist_monad>(AxiomId::LeftDistOverSeq, avg, 3, universe, opts);
  CHECK(rep.holds);
}

TEST_CASE("convex parameter axioms (4) and (6)") {
  std::vector<int> carrier{0, 1, 2};
  auto universe = dist_monad::enumerate(carrier, Bounds{.denom = 4});
  CHECK(check_convex_comm6(universe, 4).holds);
  auto rep = check_convex_assoc4(universe, 4);
  CHECK(rep.holds);
  CHECK(rep.instances > 50000);
}

TEST_CASE("the criteria agree with extensional sweeps for every maybe code") {
  std::vector<int> carrier{0, 1, 2};
  auto universe = maybe_monad::enumerate(carrier, Bounds{});
  for (const auto& code : all_maybe_codes()) {
    auto alpha = [&](const Maybe<int>& a, const Maybe<int>& b) {
      return apply_nt(code, a, b);
    };
    auto comm =
        check_extensional<maybe_monad>(AxiomId::Commutativity, alpha, 3, universe);
    CHECK(comm.holds == coord_commutative(code));
    auto idem =
        check_extensional<maybe_monad>(AxiomId::Idempotence, alpha, 3, universe);
    CHECK(idem.holds == coord_idempotent(code));
    Maybe<int> bot;
    auto unit = check_extensional<maybe_monad>(AxiomId::Unit, alpha, 3, universe,
                                               {}, &bot);
    CHECK(unit.holds == coord_has_unit_bottom(code));
  }
}

TEST_CASE("absorption: dist-with-failure has both laws, maybe too") {
  SUBCASE("Dist.Maybe") {
    using DM = with_maybe<dist_monad>;
    std::vector<int> carrier{0, 1};
    auto universe = DM::enumerate(carrier, Bounds{.denom = 2});
    auto zero = DM::unit(0);
    zero = Dist<Maybe<int>>::point(Maybe<int>{});
    auto [right, left] = absorption_suite<DM>(zero, 2, universe);
    CHECK(right.holds);
    CHECK(left.holds);
    CHECK(right.exhaustive);
  }
  SUBCASE("Maybe") {
    std::vector<int> carrier{0, 1, 2};
    auto universe = maybe_monad::enumerate(carrier, Bounds{});
    Maybe<int> zero;
    auto [right, left] = absorption_suite<maybe_monad>(zero, 3, universe);
    CHECK(right.holds);
    CHECK(left.holds);
  }
}

TEST_CASE("absorption: hybrid-with-failure keeps 0;p but loses p;0") {
  using HM = with_maybe<dtraj_monad>;
  std::vector<int> carrier{0, 1};
  auto universe = HM::enumerate(carrier, Bounds{.max_duration = 2});

  for (int d = 0; d <= 2; ++d) {
    DTraj<Maybe<int>> zero;
    zero.values.assign((std::size_t)d + 1, Maybe<int>{});
    auto [right, left] = absorption_suite<HM>(zero, 2, universe);
    CHECK(right.holds);
    if (d > 0) {
      CHECK(!left.holds);
      CHECK(!left.witness.empty());
    }
  }
  // even the duration-0 zero fails p;0 = 0: p's evolution still runs first
  DTraj<Maybe<int>> zero0{{Maybe<int>{}}};
  auto [right0, left0] = absorption_suite<HM>(zero0, 2, universe);
  CHECK(right0.holds);
  CHECK(!left0.holds);
}

TEST_CASE("impossibility suite") {
  auto rep = impossibility_suite();
  CHECK(rep.pass);
  CHECK(rep.maybe_total == 12);
  CHECK(rep.maybe_commutative == 2);
  CHECK(rep.maybe_idempotent == 8);
  CHECK(rep.maybe_both == 0);
  CHECK(rep.maybe_with_unit == 3);
  CHECK(rep.coord_matches_extensional);
  REQUIRE(rep.phi_failures.size() == 3);
  CHECK(rep.phi_failures[0].n == 2);  // the normalized swap dies immediately
  CHECK(rep.union_comm_idem_unit);
  CHECK(rep.qset_has_no_unit);
}

TEST_CASE("multiset idempotence on equal-mass pairs needs a projection") {
  using MS = MultiSet<int, nat_semiring>;
  std::vector<int> carrier{0, 1};
  auto universe = nat_multiset_monad::enumerate(carrier, Bounds{.max_weight = 2});

  auto weighted = [&](long long w1, long long w2) {
    return [w1, w2](const MS& a, const MS& b) {
      MultisetWeights<nat_semiring> s{2, [&](const std::vector<long long>&) {
                                        return std::vector<long long>{w1, w2};
                                      }};
      std::vector<MS> args{a, b};
      return apply_nt(s, std::span<const MS>(args));
    };
  };
  // idempotence on equal-mass pairs: alpha(a, a) = a
  for (auto [w1, w2] : std::vector<std::pair<long long, long long>>{
           {1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
    bool idem = true;
    for (const auto& a : universe) {
      auto out = weighted(w1, w2)(a, a);
      idem &= out == a;
    }
    bool projection = (w1 == 1 && w2 == 0) || (w1 == 0 && w2 == 1);
    CHECK(idem == projection);
  }
  // the equally weighted sum is commutative
  bool comm = true;
  for (const auto& a : universe)
    for (const auto& b : universe)
      comm &= weighted(1, 1)(a, b) == weighted(1, 1)(b, a);
  CHECK(comm);
}
