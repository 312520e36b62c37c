#include <doctest.h>

#include "fixtures.hpp"

using namespace pgcomp;
using namespace pgcomp::testing;

TEST_SUITE_BEGIN("baseline_solvers");

TEST_CASE("solve_single_player examples") {
  {
    // Odd owns everything but the only cycle has even maximum
    const Regions r = solve_single_player(SubgameMask(g_sp()), O);
    CHECK(r.count(E) == 2);
    CHECK(r.count(O) == 0);
  }
  {
    const Arena a = make_arena({{O, 1, {0}}});  // odd self-loop
    const Regions r = solve_single_player(SubgameMask(a), O);
    CHECK(r.winner(0) == O);
  }
  {
    // Odd-owned path into a dead end: stuck everywhere
    const Arena a = make_arena({{O, 1, {1}}, {O, 2, {}}});
    const Regions r = solve_single_player(SubgameMask(a), O);
    CHECK(r.winner(0) == E);
    CHECK(r.winner(1) == E);
  }
  CHECK_THROWS_AS(solve_single_player(SubgameMask(g_cyc2()), E), InputError);
}

TEST_CASE("solve_zielonka examples") {
  {
    const SolverReport rep = solve_zielonka(SubgameMask(g_cyc2()));
    CHECK(rep.regions.count(E) == 2);
    CHECK(rep.strategy_present);
  }
  {
    const SolverReport rep = solve_zielonka(SubgameMask(g_cyc2b()));
    CHECK(rep.regions.count(O) == 2);
  }
  {
    const SolverReport rep = solve_zielonka(SubgameMask(g_apex()));
    CHECK(rep.regions.count(O) == 3);
  }
}

TEST_CASE("solve_brute_force examples") {
  {
    const Regions r = solve_brute_force(SubgameMask(g_loop()));
    CHECK(r.winner(0) == E);
  }
  {
    const Regions r = solve_brute_force(SubgameMask(g_dead()));
    CHECK(r.winner(0) == O);
  }
  {
    const Regions r = solve_brute_force(SubgameMask(g_paste()));
    CHECK(r.count(E) == 3);
  }
  CHECK_THROWS_AS(
      solve_brute_force(SubgameMask(gen_random({GenClass::Random, 9, 3, 0.4, 1,
                                                Player::Odd}))),
      SizeError);
}

TEST_CASE("verify_solution examples") {
  const Arena a = g_cyc2();
  const SubgameMask g(a);
  const SolverReport rep = solve_zielonka(g);
  CHECK(verify_solution(g, rep.regions));

  Regions swapped(a.size());
  swapped.assign(0, O);
  swapped.assign(1, O);
  const VerificationResult res = verify_solution(g, swapped);
  CHECK(!res);
  CHECK(res.witness >= 0);

  CHECK(verify_solution(SubgameMask(g_empty()), Regions(0)));
}

TEST_CASE("verify_solution flags uncovered vertices") {
  const Arena a = g_cyc2();
  Regions partial(a.size());
  partial.assign(0, E);
  const VerificationResult res = verify_solution(SubgameMask(a), partial);
  CHECK(!res);
  CHECK(res.witness == 1);
}

TEST_CASE("zielonka agrees with brute force on random games") {
  SplitRng rng(301);
  for (int round = 0; round < 300; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 6,
                                 round % 2 == 0 ? 0.3 : 0.6);
    const SubgameMask g(a);
    CHECK(same_winners(solve_zielonka(g).regions, solve_brute_force(g)));
  }
}

TEST_CASE("single-player solver agrees with zielonka") {
  SplitRng rng(302);
  for (int round = 0; round < 200; ++round) {
    GenSpec spec;
    spec.cls = GenClass::SinglePlayer;
    spec.n = 1 + static_cast<int>(rng.below(50));
    spec.max_priority = 6;
    spec.density = 0.2 + 0.5 * rng.uniform01();
    spec.seed = rng.next();
    spec.single_owner = rng.player();
    const Arena a = gen_single_player(spec);
    const SubgameMask g(a);
    CHECK(same_winners(solve_single_player(g, spec.single_owner),
                       solve_zielonka(g).regions));
  }
}

TEST_CASE("verify accepts zielonka and rejects winner flips") {
  SplitRng rng(303);
  for (int round = 0; round < 60; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 6, 0.4);
    const SubgameMask g(a);
    const SolverReport rep = solve_zielonka(g);
    CHECK(verify_solution(g, rep.regions));
    for (int v = 0; v < a.size(); ++v) {
      Regions mutated = rep.regions;
      mutated.assign(v, opponent(rep.regions.winner(v)));
      CHECK(!verify_solution(g, mutated));
    }
  }
}

TEST_SUITE_END();
