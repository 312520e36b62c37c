#include <doctest.h>

#include "fixtures.hpp"

using namespace pgcomp;
using namespace pgcomp::testing;

TEST_SUITE_BEGIN("attractor");

TEST_CASE("attract pulls along a chain with strategy") {
  // v0(Odd) -> v1(Even) -> v2(Even)
  const Arena a = make_arena({{O, 0, {1}}, {E, 0, {2}}, {E, 0, {}}});
  const SubgameMask g(a);
  const AttractorResult res = attract(g, E, set_of(a, {2}));
  CHECK(res.attracted == set_of(a, {0, 1, 2}));
  CHECK(res.strategy[1] == 2);   // Even steps in
  CHECK(res.strategy[0] == -1);  // Odd vertex forced, no strategy entry
  CHECK(res.strategy[2] == -1);  // target keeps no entry
}

TEST_CASE("attract with empty target on a total game is empty") {
  const Arena a = g_cyc2();
  const SubgameMask g(a);
  CHECK(attract(g, E, VertexSet(a.size())).attracted.empty());
  CHECK(attract(g, O, VertexSet(a.size())).attracted.empty());
}

TEST_CASE("attract on the apex game") {
  const Arena a = g_apex();
  const SubgameMask g(a);
  const AttractorResult res = attract(g, O, set_of(a, {2}));
  CHECK(res.attracted == set_of(a, {0, 1, 2}));
  CHECK(res.strategy[1] == 2);  // v1 is Odd and can step to u
}

TEST_CASE("opponent-owned dead ends are attracted even with empty target") {
  // v0(Even) dead end, v1(Odd) -> v0
  const Arena a = make_arena({{E, 3, {}}, {O, 1, {0}}});
  const SubgameMask g(a);
  const AttractorResult res = attract(g, O, VertexSet(a.size()));
  CHECK(res.attracted == set_of(a, {0, 1}));
  CHECK(res.strategy[1] == 0);
}

TEST_CASE("attract rejects dead targets") {
  const Arena a = g_cyc2();
  SubgameMask g(a);
  g.remove(1);
  CHECK_THROWS_AS(attract(g, E, set_of(a, {1})), InputError);
}

TEST_CASE("is_closed examples") {
  const Arena a = g_cyc2();
  const SubgameMask g(a);
  CHECK(is_closed(g, E, set_of(a, {0, 1})));
  CHECK(!is_closed(g, E, set_of(a, {0})));
  const Arena ap = g_apex();
  const SubgameMask gap(ap);
  CHECK(is_closed(gap, O, set_of(ap, {0, 1, 2})));
}

TEST_CASE("eliminate_dead_ends examples") {
  {
    SubgameMask g{SubgameMask(g_dead())};
    const DeadEndResult res = eliminate_dead_ends(g);
    CHECK(g.empty());
    CHECK(res.won_even.empty());
    CHECK(res.won_odd == VertexSet::of(1, {0}));
  }
  {
    SubgameMask g{SubgameMask(g_cyc2())};
    const DeadEndResult res = eliminate_dead_ends(g);
    CHECK(g.alive_count() == 2);
    CHECK(res.won_even.empty());
    CHECK(res.won_odd.empty());
  }
  {
    // v0(Even,1) -> v1, v1(Odd,2) dead end: Odd is stuck, Even attracts both
    const Arena a = make_arena({{E, 1, {1}}, {O, 2, {}}});
    SubgameMask g(a);
    const DeadEndResult res = eliminate_dead_ends(g);
    CHECK(g.empty());
    CHECK(res.won_even == set_of(a, {0, 1}));
    CHECK(res.won_odd.empty());
    CHECK(res.strategy[0] == 1);
  }
}

TEST_CASE("attract is monotone and idempotent") {
  SplitRng rng(201);
  for (int round = 0; round < 200; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 5, 0.35);
    const SubgameMask g(a);
    const Player i = rng.player();
    VertexSet target(a.size());
    for (int v = 0; v < a.size(); ++v)
      if (rng.chance(0.3)) target.insert(v);
    const AttractorResult first = attract(g, i, target);
    CHECK(target.is_subset_of(first.attracted));
    const AttractorResult second = attract(g, i, first.attracted);
    CHECK(second.attracted == first.attracted);
  }
}

TEST_CASE("complement of an attractor is closed for the opponent") {
  SplitRng rng(202);
  for (int round = 0; round < 300; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 5, 0.35);
    const SubgameMask g(a);
    const Player i = rng.player();
    VertexSet target(a.size());
    for (int v = 0; v < a.size(); ++v)
      if (rng.chance(0.3)) target.insert(v);
    const AttractorResult res = attract(g, i, target);
    VertexSet rest(a.size());
    for (int v = 0; v < a.size(); ++v)
      if (g.alive(v) && !res.attracted.contains(v)) rest.insert(v);
    CHECK(is_closed(g, opponent(i), rest));
  }
}

TEST_CASE("removing an attractor never helps the attracting player") {
  SplitRng rng(203);
  for (int round = 0; round < 150; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 5, 0.35);
    const SubgameMask g(a);
    const Player i = rng.player();
    VertexSet target(a.size());
    for (int v = 0; v < a.size(); ++v)
      if (rng.chance(0.3)) target.insert(v);
    SubgameMask rest = g;
    rest.remove_all(attract(g, i, target).attracted);
    const Regions whole = solve_brute_force(g);
    const Regions sub = solve_brute_force(rest);
    for (int v = 0; v < a.size(); ++v) {
      if (sub.covered(v) && sub.winner(v) == opponent(i)) {
        CHECK(whole.covered(v));
        CHECK(whole.winner(v) == opponent(i));
      }
    }
  }
}

TEST_CASE("winning regions are attractor fixpoints") {
  SplitRng rng(204);
  for (int round = 0; round < 200; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 5, 0.35);
    const SubgameMask g(a);
    const Regions oracle = solve_brute_force(g);
    for (Player i : {E, O})
      CHECK(attract(g, i, oracle.region(i)).attracted == oracle.region(i));
  }
}

TEST_CASE("eliminate_dead_ends credits agree with the oracle") {
  SplitRng rng(205);
  for (int round = 0; round < 200; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 5, 0.3);
    const Regions oracle = solve_brute_force(SubgameMask(a));
    SubgameMask g(a);
    const DeadEndResult res = eliminate_dead_ends(g);
    for (int v = 0; v < a.size(); ++v) {
      if (res.won_even.contains(v)) CHECK(oracle.winner(v) == E);
      if (res.won_odd.contains(v)) CHECK(oracle.winner(v) == O);
      if (g.alive(v)) CHECK(g.alive_out_degree(v) > 0);  // residual is total
    }
  }
}

TEST_SUITE_END();
