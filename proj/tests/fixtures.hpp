#pragma once

// Shared reference games used across the test suites.

#include <initializer_list>
#include <vector>

#include "pgcomp/pgcomp.hpp"

namespace pgcomp::testing {

struct VertexSpec {
  Player owner;
  int priority;
  std::vector<int> succs;
};

inline Arena make_arena(std::initializer_list<VertexSpec> vertices) {
  ArenaBuilder b(static_cast<int>(vertices.size()));
  int id = 0;
  for (const auto& v : vertices) {
    b.add_vertex(v.owner, v.priority);
    for (int w : v.succs) b.add_arc(id, w);
    ++id;
  }
  return b.build();
}

constexpr Player E = Player::Even;
constexpr Player O = Player::Odd;

inline Arena g_empty() { return {}; }

// v0(Even, 0) with a self-loop
inline Arena g_loop() { return make_arena({{E, 0, {0}}}); }

// v0(Even, 0), no arcs
inline Arena g_dead() { return make_arena({{E, 0, {}}}); }

// v0(Even,1) -> v1, v1(Odd,2) -> v0
inline Arena g_cyc2() { return make_arena({{E, 1, {1}}, {O, 2, {0}}}); }

// same shape, top priority 3
inline Arena g_cyc2b() { return make_arena({{E, 1, {1}}, {O, 3, {0}}}); }

// single-player Odd: a(Odd,1) <-> b(Odd,2)
inline Arena g_sp() { return make_arena({{O, 1, {1}}, {O, 2, {0}}}); }

// blocks {v,a} and {v,b} pasted at v: v=0(Even,1), a=1(Odd,2), b=2(Odd,3)
inline Arena g_paste() {
  return make_arena({{E, 1, {1, 2}}, {O, 2, {0}}, {O, 3, {0}}});
}

// g_cyc2 plus an apex u=2(Odd,5) with u->v0 and v1->u
inline Arena g_apex() {
  return make_arena({{E, 1, {1}}, {O, 2, {0, 2}}, {O, 5, {0}}});
}

inline VertexSet set_of(const Arena& a, std::initializer_list<int> vs) {
  return VertexSet::of(a.size(), vs);
}

/// Random game over its own arena; owners fair, priorities uniform.
inline Arena random_arena(SplitRng& rng, int n, int max_priority,
                          double density) {
  GenSpec spec;
  spec.cls = GenClass::Random;
  spec.n = n;
  spec.max_priority = max_priority;
  spec.density = density;
  spec.seed = rng.next();
  return gen_random(spec);
}

}  // namespace pgcomp::testing
