#pragma once

#include <optional>
#include <string>

#include "pgcomp/classes.hpp"
#include "pgcomp/half_solve.hpp"
#include "pgcomp/subgame.hpp"

namespace pgcomp {

/// Witness that the game minus one vertex passes a class membership test.
struct ApexCertificate {
  int apex = -1;
  std::string residual_class;
};

/// First vertex (ascending id) whose removal satisfies the membership test,
/// or absent. O(n) membership calls.
std::optional<ApexCertificate> find_removable_vertex(const SubgameMask& g,
                                                     const MembershipTest& member);

/// Half-solver step for a game that is one vertex away from the inner
/// solver's class: solve the two probes obtained by stripping each player's
/// attractor of the apex; a win for the stripping player's opponent reduces
/// the game, otherwise one true region is empty.
HalfSolveOutcome half_solve_add_vertex(const SubgameMask& g, int apex,
                                       const ClassSolver& inner);

/// Packaged for generic_solve: once the apex drops out of the subgame, the
/// whole view lies in the inner class and is solved directly.
HalfSolver make_add_vertex_half_solver(int apex, ClassSolver inner);

}  // namespace pgcomp
