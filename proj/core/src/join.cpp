#include <utility>

#include "pgcomp/attractor.hpp"
#include "pgcomp/baseline.hpp"
#include "pgcomp/classes.hpp"
#include "pgcomp/errors.hpp"
#include "pgcomp/join.hpp"
#include "pgcomp/undirected.hpp"

namespace pgcomp {

namespace {

void check_partition(const SubgameMask& g, const VertexSet& a,
                     const VertexSet& b, const char* what) {
  for (int v = 0; v < g.universe(); ++v) {
    const bool in_a = a.contains(v);
    const bool in_b = b.contains(v);
    if (in_a && in_b)
      throw InputError(std::string(what) + ": sides overlap at vertex " +
                       std::to_string(v));
    if ((in_a || in_b) != g.alive(v))
      throw InputError(std::string(what) +
                       ": sides do not partition the alive vertices (vertex " +
                       std::to_string(v) + ")");
  }
}

bool cross_adjacent(const SubgameMask& g, int x, int y) {
  return g.arena().has_arc(x, y) || g.arena().has_arc(y, x);
}

/// Reduction removing `removed` from g, crediting all of it to one player.
HalfSolveOutcome reduce_by(const SubgameMask& g, const VertexSet& removed,
                           Player credit) {
  SubgameMask remaining = g;
  remaining.remove_all(removed);
  VertexSet even(g.universe()), odd(g.universe());
  (credit == Player::Even ? even : odd) = removed;
  return Reduced{std::move(remaining), std::move(even), std::move(odd)};
}

}  // namespace

void HalfJoinDecomposition::validate(const SubgameMask& g) const {
  check_partition(g, single_side, class_side, "half-join decomposition");
  const Player opp = opponent(single_owner);
  for (int x = 0; x < g.universe(); ++x) {
    if (!single_side.contains(x)) continue;
    if (g.arena().owner(x) != single_owner)
      throw InputError("half-join decomposition: vertex " + std::to_string(x) +
                       " on the single side is not owned by its player");
    for (int y = 0; y < g.universe(); ++y) {
      if (!class_side.contains(y) || g.arena().owner(y) != opp) continue;
      if (!cross_adjacent(g, x, y))
        throw InputError("half-join decomposition: cross pair (" +
                         std::to_string(x) + ", " + std::to_string(y) +
                         ") is not adjacent");
    }
  }
}

void JoinDecomposition::validate(const SubgameMask& g) const {
  check_partition(g, left, right, "join decomposition");
  for (int x = 0; x < g.universe(); ++x) {
    if (!left.contains(x)) continue;
    for (int y = 0; y < g.universe(); ++y) {
      if (!right.contains(y)) continue;
      if (g.arena().owner(x) == g.arena().owner(y)) continue;
      if (!cross_adjacent(g, x, y))
        throw InputError("join decomposition: cross pair (" +
                         std::to_string(x) + ", " + std::to_string(y) +
                         ") is not adjacent");
    }
  }
}

void GJoinDecomposition::validate(const SubgameMask& g) const {
  check_partition(g, single_side, class_side, "g-join decomposition");
  const Player opp = opponent(single_owner);
  for (int v = 0; v < g.universe(); ++v) {
    if (single_side.contains(v) && g.arena().owner(v) != single_owner)
      throw InputError("g-join decomposition: vertex " + std::to_string(v) +
                       " on the single side is not owned by its player");
    if (m_set.contains(v)) {
      if (!class_side.contains(v))
        throw InputError("g-join decomposition: M-vertex " +
                         std::to_string(v) + " outside the class side");
      if (g.arena().owner(v) != opp)
        throw InputError("g-join decomposition: M-vertex " +
                         std::to_string(v) +
                         " not owned by the single side's opponent");
    }
  }
  for (int x = 0; x < g.universe(); ++x) {
    if (!m_set.contains(x)) continue;
    for (int y = 0; y < g.universe(); ++y) {
      if (!single_side.contains(y)) continue;
      if (!cross_adjacent(g, x, y))
        throw InputError("g-join decomposition: hub pair (" +
                         std::to_string(x) + ", " + std::to_string(y) +
                         ") is not adjacent");
    }
  }
  // No cross arcs may bypass the hub.
  for (int x = 0; x < g.universe(); ++x) {
    if (!g.alive(x)) continue;
    const bool x_single = single_side.contains(x);
    for (int w : g.arena().successors(x)) {
      if (!g.alive(w)) continue;
      const bool w_single = single_side.contains(w);
      if (x_single == w_single) continue;
      const int class_end = x_single ? w : x;
      if (!m_set.contains(class_end))
        throw InputError("g-join decomposition: cross arc (" +
                         std::to_string(x) + ", " + std::to_string(w) +
                         ") misses the M hub");
    }
  }
}

bool is_weak_tournament(const SubgameMask& g) {
  const UndirectedView u = underlying_undirected(g);
  const Arena& a = g.arena();
  int odd_total = 0;
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v) && a.owner(v) == Player::Odd) ++odd_total;
  for (int v = 0; v < g.universe(); ++v) {
    if (!g.alive(v) || a.owner(v) != Player::Even) continue;
    int odd_neighbors = 0;
    for (int w : u.neighbors[static_cast<size_t>(v)])
      if (a.owner(w) == Player::Odd) ++odd_neighbors;
    if (odd_neighbors != odd_total) return false;
  }
  return true;
}

std::optional<HalfJoinDecomposition> detect_half_join(const SubgameMask& g,
                                                      Player i) {
  const UndirectedView u = underlying_undirected(g);
  const Arena& a = g.arena();
  const Player opp = opponent(i);
  int opp_total = 0;
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v) && a.owner(v) == opp) ++opp_total;

  HalfJoinDecomposition dec{VertexSet(g.universe()), VertexSet(g.universe()), i};
  for (int v = 0; v < g.universe(); ++v) {
    if (!g.alive(v)) continue;
    if (a.owner(v) == i) {
      int opp_neighbors = 0;
      for (int w : u.neighbors[static_cast<size_t>(v)])
        if (a.owner(w) == opp) ++opp_neighbors;
      if (opp_neighbors == opp_total) {
        dec.single_side.insert(v);
        continue;
      }
    }
    dec.class_side.insert(v);
  }
  if (dec.single_side.empty()) return std::nullopt;
  return dec;
}

HalfSolveOutcome half_solve_half_join(const SubgameMask& g,
                                      const HalfJoinDecomposition& dec,
                                      const ClassSolver& inner) {
#ifndef NDEBUG
  dec.validate(g);
#endif
  const int n = g.universe();
  if (g.empty()) return Solved{Regions(n)};

  const Player s = dec.single_owner;
  const Player i = opponent(s);

  // First probe: strip the i-attractor of every i-vertex; what remains is a
  // single-player game of the single side's owner.
  const AttractorResult a1 = attract(g, i, alive_owned(g, i));
  SubgameMask p1 = g;
  p1.remove_all(a1.attracted);
  const Regions r1 = solve_single_player(p1, s);
  if (r1.count(s) > 0)
    return reduce_by(g, attract(g, s, r1.region(s)).attracted, s);

  // Second probe: strip the single side with its attractor; the remainder
  // is a subgame of the class side.
  const AttractorResult a2 =
      attract(g, s, alive_intersection(g, dec.single_side));
  SubgameMask p2 = g;
  p2.remove_all(a2.attracted);
  const Regions r2 = inner.solve(p2);
  if (r2.count(i) > 0)
    return reduce_by(g, attract(g, i, r2.region(i)).attracted, i);

  return Whole{};
}

HalfSolveOutcome half_solve_join(const SubgameMask& g,
                                 const JoinDecomposition& dec,
                                 const ClassSolver& left_solver,
                                 const ClassSolver& right_solver) {
#ifndef NDEBUG
  dec.validate(g);
#endif
  const int n = g.universe();
  if (g.empty()) return Solved{Regions(n)};

  // Probe the half join made of the left side and right's Odd remainder.
  {
    VertexSet t(n);
    for (int v = 0; v < n; ++v)
      if (g.alive(v) && dec.right.contains(v) &&
          g.arena().owner(v) == Player::Even)
        t.insert(v);
    const AttractorResult a = attract(g, Player::Even, t);
    SubgameMask p1 = g;
    p1.remove_all(a.attracted);
    const Regions r1 = generic_solve(
        p1, make_half_join_half_solver(
                HalfJoinDecomposition{dec.right, dec.left, Player::Odd},
                left_solver));
    if (r1.count(Player::Odd) > 0)
      return reduce_by(
          g, attract(g, Player::Odd, r1.region(Player::Odd)).attracted,
          Player::Odd);
  }

  // Symmetric probe: right side joined with left's Even remainder.
  {
    VertexSet t(n);
    for (int v = 0; v < n; ++v)
      if (g.alive(v) && dec.left.contains(v) &&
          g.arena().owner(v) == Player::Odd)
        t.insert(v);
    const AttractorResult a = attract(g, Player::Odd, t);
    SubgameMask p2 = g;
    p2.remove_all(a.attracted);
    const Regions r2 = generic_solve(
        p2, make_half_join_half_solver(
                HalfJoinDecomposition{dec.left, dec.right, Player::Even},
                right_solver));
    if (r2.count(Player::Even) > 0)
      return reduce_by(
          g, attract(g, Player::Even, r2.region(Player::Even)).attracted,
          Player::Even);
  }

  return Whole{};
}

HalfSolveOutcome half_solve_g_join(const SubgameMask& g,
                                   const GJoinDecomposition& dec,
                                   const ClassSolver& inner) {
#ifndef NDEBUG
  dec.validate(g);
#endif
  const int n = g.universe();
  if (g.empty()) return Solved{Regions(n)};

  const Player i = dec.single_owner;
  const Player o = opponent(i);

  const AttractorResult a1 = attract(g, o, alive_owned(g, o));
  SubgameMask p1 = g;
  p1.remove_all(a1.attracted);
  const Regions r1 = solve_single_player(p1, i);
  if (r1.count(i) > 0)
    return reduce_by(g, attract(g, i, r1.region(i)).attracted, i);

  const AttractorResult a2 =
      attract(g, i, alive_intersection(g, dec.single_side));
  SubgameMask p2 = g;
  p2.remove_all(a2.attracted);
  const Regions r2 = inner.solve(p2);
  if (r2.count(o) > 0)
    return reduce_by(g, attract(g, o, r2.region(o)).attracted, o);

  // Third probe: the class side on its own. Once the first two probes come
  // up empty, either the whole single side is winning for its owner (making
  // any credit to that owner sound) or the class side's own regions carry
  // over through the hub-free part.
  const SubgameMask p3 = restrict(g, alive_intersection(g, dec.class_side));
  const Regions r3 = inner.solve(p3);
  if (r3.count(i) > 0)
    return reduce_by(g, attract(g, i, r3.region(i)).attracted, i);

  return Whole{};
}

Regions solve_weak_tournament(const SubgameMask& g, GenericSolveStats* stats) {
  if (!is_weak_tournament(g))
    throw InputError("solve_weak_tournament: view is not a weak tournament");
  return generic_solve(g, make_weak_tournament_half_solver(), stats);
}

HalfSolver make_weak_tournament_half_solver() {
  return {"weak-tournament", [](const SubgameMask& m) {
            HalfJoinDecomposition dec{alive_owned(m, Player::Odd),
                                      alive_owned(m, Player::Even),
                                      Player::Odd};
            return half_solve_half_join(m, dec, single_player_solver());
          }};
}

HalfSolver make_half_join_half_solver(HalfJoinDecomposition base,
                                      ClassSolver inner) {
  return {"half-join(" + inner.name + ")",
          [base = std::move(base), inner = std::move(inner)](const SubgameMask& m) {
            HalfJoinDecomposition dec{alive_intersection(m, base.single_side),
                                      VertexSet(m.universe()),
                                      base.single_owner};
            for (int v = 0; v < m.universe(); ++v)
              if (m.alive(v) && !dec.single_side.contains(v))
                dec.class_side.insert(v);
            return half_solve_half_join(m, dec, inner);
          }};
}

HalfSolver make_join_half_solver(JoinDecomposition base, ClassSolver left_solver,
                                 ClassSolver right_solver) {
  return {"join(" + left_solver.name + "," + right_solver.name + ")",
          [base = std::move(base), left_solver = std::move(left_solver),
           right_solver = std::move(right_solver)](const SubgameMask& m) {
            JoinDecomposition dec{alive_intersection(m, base.left),
                                  alive_intersection(m, base.right)};
            return half_solve_join(m, dec, left_solver, right_solver);
          }};
}

HalfSolver make_g_join_half_solver(GJoinDecomposition base, ClassSolver inner) {
  return {"g-join(" + inner.name + ")",
          [base = std::move(base), inner = std::move(inner)](const SubgameMask& m) {
            GJoinDecomposition dec{alive_intersection(m, base.single_side),
                                   alive_intersection(m, base.class_side),
                                   alive_intersection(m, base.m_set),
                                   base.single_owner};
            return half_solve_g_join(m, dec, inner);
          }};
}

}  // namespace pgcomp
