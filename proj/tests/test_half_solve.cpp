#include <doctest.h>

#include "fixtures.hpp"

using namespace pgcomp;
using namespace pgcomp::testing;

TEST_SUITE_BEGIN("half_solve");

TEST_CASE("generic_solve on the empty game") {
  const Regions r = generic_solve(SubgameMask(g_empty()),
                                  make_weak_tournament_half_solver());
  CHECK(r.count(E) == 0);
  CHECK(r.count(O) == 0);
}

TEST_CASE("generic_solve resolves the apex game through Whole") {
  const Arena a = g_apex();
  const Regions r = generic_solve(
      SubgameMask(a), make_add_vertex_half_solver(2, weak_tournament_solver()));
  CHECK(r.count(O) == 3);
  CHECK(same_winners(r, solve_zielonka(SubgameMask(a)).regions));
}

TEST_CASE("generic_solve with the weak-tournament half-solver") {
  const Arena a = g_cyc2();
  const Regions r =
      generic_solve(SubgameMask(a), make_weak_tournament_half_solver());
  CHECK(r.count(E) == 2);
}

TEST_CASE("a half-solver returning a non-proper subgame is rejected") {
  const HalfSolver broken{"broken-identity", [](const SubgameMask& m) {
                            return Reduced{m, VertexSet(m.universe()),
                                           VertexSet(m.universe())};
                          }};
  CHECK_THROWS_AS(generic_solve(SubgameMask(g_cyc2()), broken),
                  ContractViolation);
}

TEST_CASE("a half-solver with a bad starred partition is rejected") {
  const HalfSolver broken{"broken-stars", [](const SubgameMask& m) {
                            SubgameMask rem = m;
                            rem.remove(rem.first_alive());
                            // removed vertex credited to nobody
                            return Reduced{std::move(rem),
                                           VertexSet(m.universe()),
                                           VertexSet(m.universe())};
                          }};
  CHECK_THROWS_AS(generic_solve(SubgameMask(g_cyc2()), broken),
                  ContractViolation);
}

TEST_CASE("a half-solver with incomplete Solved regions is rejected") {
  const HalfSolver broken{"broken-solved", [](const SubgameMask& m) {
                            return Solved{Regions(m.universe())};
                          }};
  CHECK_THROWS_AS(generic_solve(SubgameMask(g_cyc2()), broken),
                  ContractViolation);
}

TEST_CASE("depth is bounded by the vertex count") {
  SplitRng rng(401);
  for (int round = 0; round < 100; ++round) {
    GenSpec spec;
    spec.cls = GenClass::WeakTournament;
    spec.n = 1 + static_cast<int>(rng.below(30));
    spec.max_priority = 6;
    spec.density = 0.4;
    spec.seed = rng.next();
    const Arena a = gen_weak_tournament(spec);
    GenericSolveStats stats;
    generic_solve(SubgameMask(a), make_weak_tournament_half_solver(), &stats);
    CHECK(stats.depth <= a.size());
  }
}

TEST_CASE("framework arc touches stay within twice the arc count") {
  SplitRng rng(402);
  for (int round = 0; round < 100; ++round) {
    GenSpec spec;
    spec.cls = GenClass::WeakTournament;
    spec.n = 1 + static_cast<int>(rng.below(40));
    spec.max_priority = 6;
    spec.density = 0.5;
    spec.seed = rng.next();
    const Arena a = gen_weak_tournament(spec);
    GenericSolveStats stats;
    generic_solve(SubgameMask(a), make_weak_tournament_half_solver(), &stats);
    CHECK(stats.framework_arc_touches <= 2 * stats.initial_arc_count);
  }
}

TEST_CASE("Whole answers always leave one true region empty") {
  SplitRng rng(403);
  int whole_seen = 0;
  for (int round = 0; round < 150; ++round) {
    GenSpec spec;
    spec.cls = GenClass::WeakTournament;
    spec.n = 1 + static_cast<int>(rng.below(18));
    spec.max_priority = 5;
    spec.density = 0.4;
    spec.seed = rng.next();
    const Arena a = gen_weak_tournament(spec);

    const HalfSolver base = make_weak_tournament_half_solver();
    const HalfSolver audited{
        "audited", [&](const SubgameMask& m) {
          HalfSolveOutcome out = base.run(m);
          if (std::holds_alternative<Whole>(out)) {
            ++whole_seen;
            const Regions oracle = solve_zielonka(m).regions;
            CHECK(std::min(oracle.count(E), oracle.count(O)) == 0);
          }
          return out;
        }};
    const Regions r = generic_solve(SubgameMask(a), audited);
    CHECK(same_winners(r, solve_zielonka(SubgameMask(a)).regions));
  }
  CHECK(whole_seen > 0);  // the audit actually fired
}

TEST_SUITE_END();
