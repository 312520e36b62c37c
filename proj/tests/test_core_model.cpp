#include <doctest.h>

#include "fixtures.hpp"

using namespace pgcomp;
using namespace pgcomp::testing;

TEST_SUITE_BEGIN("core_model");

TEST_CASE("player basics") {
  CHECK(opponent(Player::Even) == Player::Odd);
  CHECK(opponent(opponent(Player::Even)) == Player::Even);
  CHECK(opponent(opponent(Player::Odd)) == Player::Odd);
  CHECK(parity_owner(0) == Player::Even);
  CHECK(parity_owner(7) == Player::Odd);
}

TEST_CASE("arena construction dedupes parallel arcs and keeps self-loops") {
  ArenaBuilder b;
  b.add_vertex(E, 0);
  b.add_vertex(O, 3);
  b.add_arc(0, 1);
  b.add_arc(0, 1);
  b.add_arc(1, 1);
  const Arena a = b.build();
  CHECK(a.arc_count() == 2);
  CHECK(a.successors(0).size() == 1);
  CHECK(a.has_arc(1, 1));
  CHECK(a.predecessors(1).size() == 2);
}

TEST_CASE("arena rejects out-of-range arcs and negative priorities") {
  ArenaBuilder b;
  b.add_vertex(E, 0);
  b.add_arc(0, 1);
  CHECK_THROWS_AS(b.build(), InputError);
  ArenaBuilder c;
  CHECK_THROWS_AS(c.add_vertex(E, -1), InputError);
}

TEST_CASE("restrict: identity restriction leaves the game unchanged") {
  const Arena a = g_cyc2();
  const SubgameMask g(a);
  const SubgameMask r = restrict(g, set_of(a, {0, 1}));
  CHECK(r.alive_count() == 2);
  CHECK(r.alive_out_degree(0) == 1);
  CHECK(r.alive_out_degree(1) == 1);
}

TEST_CASE("restrict: dropping a vertex drops its arcs") {
  const Arena a = g_cyc2();
  const SubgameMask g(a);
  const SubgameMask r = restrict(g, set_of(a, {0}));
  CHECK(r.alive_count() == 1);
  CHECK(r.alive(0));
  CHECK(!r.alive(1));
  CHECK(r.alive_out_degree(0) == 0);
}

TEST_CASE("restrict: empty game") {
  const Arena a = g_empty();
  const SubgameMask g(a);
  const SubgameMask r = restrict(g, VertexSet(0));
  CHECK(r.empty());
}

TEST_CASE("restrict rejects sets outside the alive view") {
  const Arena a = g_cyc2();
  SubgameMask g(a);
  g.remove(1);
  CHECK_THROWS_AS(restrict(g, set_of(a, {0, 1})), InputError);
  CHECK_THROWS_AS(VertexSet::of(2, {5}), InputError);
}

TEST_CASE("restrict properties on small random games") {
  SplitRng rng(101);
  for (int round = 0; round < 200; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(6)), 5, 0.4);
    const SubgameMask g(a);
    VertexSet keep(a.size());
    for (int v = 0; v < a.size(); ++v)
      if (rng.chance(0.6)) keep.insert(v);
    const SubgameMask r = restrict(g, keep);
    CHECK(r.alive_count() == keep.size());
    // every arc of the restriction is an arc of g with both ends kept
    for (int v = 0; v < a.size(); ++v) {
      int expected = 0;
      if (keep.contains(v))
        for (int w : a.successors(v))
          if (keep.contains(w)) ++expected;
      CHECK(r.alive_out_degree(v) == (keep.contains(v) ? expected : 0));
    }
  }
}

TEST_CASE("restrict to the full alive set is arc-for-arc identical") {
  SplitRng rng(102);
  for (int round = 0; round < 50; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(6)), 5, 0.5);
    const SubgameMask g(a);
    const SubgameMask r = restrict(g, alive_set(g));
    for (int v = 0; v < a.size(); ++v)
      CHECK(r.alive_out_degree(v) == g.alive_out_degree(v));
  }
}

TEST_CASE("priority_level examples") {
  {
    const Arena a = g_cyc2();
    const auto lvl = priority_level(SubgameMask(a));
    CHECK(lvl.priority == 2);
    CHECK(lvl.vertices == set_of(a, {1}));
  }
  {
    const Arena a = g_apex();
    const auto lvl = priority_level(SubgameMask(a));
    CHECK(lvl.priority == 5);
    CHECK(lvl.vertices == set_of(a, {2}));
  }
  {
    const Arena a = g_loop();
    const auto lvl = priority_level(SubgameMask(a));
    CHECK(lvl.priority == 0);
    CHECK(lvl.vertices == set_of(a, {0}));
  }
  CHECK_THROWS_AS(priority_level(SubgameMask(g_empty())), InputError);
}

TEST_CASE("underlying_undirected examples") {
  {
    const UndirectedView u = underlying_undirected(SubgameMask(g_cyc2()));
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(1, 0));
    CHECK(u.neighbors[0].size() == 1);
  }
  {
    const UndirectedView u = underlying_undirected(SubgameMask(g_apex()));
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(0, 2));
    CHECK(u.adjacent(1, 2));
  }
  {
    const UndirectedView u = underlying_undirected(SubgameMask(g_dead()));
    CHECK(u.neighbors[0].empty());
    CHECK(!u.self_loop[0]);
  }
  {
    const UndirectedView u = underlying_undirected(SubgameMask(g_loop()));
    CHECK(u.neighbors[0].empty());
    CHECK(u.self_loop[0]);
  }
}

TEST_CASE("underlying_undirected is symmetric") {
  SplitRng rng(103);
  for (int round = 0; round < 100; ++round) {
    const Arena a = random_arena(rng, 1 + static_cast<int>(rng.below(8)), 5, 0.4);
    const UndirectedView u = underlying_undirected(SubgameMask(a));
    for (int v = 0; v < a.size(); ++v)
      for (int w : u.neighbors[static_cast<size_t>(v)]) CHECK(u.adjacent(w, v));
  }
}

TEST_SUITE_END();
