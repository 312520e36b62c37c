#pragma once

#include <optional>

#include "pgcomp/half_solve.hpp"
#include "pgcomp/subgame.hpp"
#include "pgcomp/vertex_set.hpp"

namespace pgcomp {

/// Split of a game into a single-player side and a class side, where every
/// single-side vertex is adjacent (in at least one direction) to every
/// opposite-owner vertex of the class side.
struct HalfJoinDecomposition {
  VertexSet single_side;
  VertexSet class_side;
  Player single_owner = Player::Odd;

  void validate(const SubgameMask& g) const;  // throws InputError
};

/// Split into two sides with at least one arc between every opposite-owner
/// cross pair.
struct JoinDecomposition {
  VertexSet left;
  VertexSet right;

  void validate(const SubgameMask& g) const;
};

/// Like a half join, but all cross arcs run between the single side and a
/// hub set M of opposite-owner class vertices, with full adjacency between
/// M and the single side.
struct GJoinDecomposition {
  VertexSet single_side;
  VertexSet class_side;
  VertexSet m_set;
  Player single_owner = Player::Odd;

  void validate(const SubgameMask& g) const;
};

/// True iff every alive Even/Odd vertex pair is adjacent in some direction.
bool is_weak_tournament(const SubgameMask& g);

/// Linear-time split: the single side collects the i-vertices adjacent to
/// every opposite vertex; absent when that set is empty. Whether the class
/// side lies in a solvable class is the caller's business.
std::optional<HalfJoinDecomposition> detect_half_join(const SubgameMask& g,
                                                      Player i);

/// Half-solver step for a half join: probe the single-player remainder
/// (after stripping the opponent's attractor of all its vertices), then the
/// class remainder. A win found in either probe is returned as a reduction;
/// otherwise one true region is empty and the game comes back Whole.
HalfSolveOutcome half_solve_half_join(const SubgameMask& g,
                                      const HalfJoinDecomposition& dec,
                                      const ClassSolver& inner);

/// Half-solver step for a join of two classes. Each probe strips one side's
/// opposite-owner vertices, leaving a half join solved in full with the
/// matching side solver.
HalfSolveOutcome half_solve_join(const SubgameMask& g,
                                 const JoinDecomposition& dec,
                                 const ClassSolver& left_solver,
                                 const ClassSolver& right_solver);

/// Half-solver step for a G-join: the two half-join probes plus a third
/// probe solving the class side standalone, sound because cross arcs are
/// confined to the M hub.
HalfSolveOutcome half_solve_g_join(const SubgameMask& g,
                                   const GJoinDecomposition& dec,
                                   const ClassSolver& inner);

/// Full solver for weak tournaments: the Odd vertices form the single side,
/// the Even vertices the class side (a single-player game), and the generic
/// wrapper does the rest. Throws InputError when the view is not a weak
/// tournament.
Regions solve_weak_tournament(const SubgameMask& g,
                              GenericSolveStats* stats = nullptr);

// Packaged half-solvers for generic_solve. Each closure re-derives its
// decomposition on the current subgame (the captured sets intersected with
// the alive vertices), which keeps it valid on every subgame of a
// hereditary class.
HalfSolver make_weak_tournament_half_solver();
HalfSolver make_half_join_half_solver(HalfJoinDecomposition base,
                                      ClassSolver inner);
HalfSolver make_join_half_solver(JoinDecomposition base, ClassSolver left_solver,
                                 ClassSolver right_solver);
HalfSolver make_g_join_half_solver(GJoinDecomposition base, ClassSolver inner);

}  // namespace pgcomp
