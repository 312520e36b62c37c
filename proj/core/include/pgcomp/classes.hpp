#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pgcomp/half_solve.hpp"
#include "pgcomp/subgame.hpp"

namespace pgcomp {

bool is_edgeless(const SubgameMask& g);
bool is_single_player(const SubgameMask& g);

struct MembershipTest {
  std::string name;
  std::function<bool(const SubgameMask&)> test;
};

/// Decision procedures for the classes with shipped solvers, in the order
/// detection code tries them: edgeless, single-player, tournament.
const std::vector<MembershipTest>& shipped_membership_tests();

ClassSolver edgeless_solver();
ClassSolver single_player_solver();
ClassSolver weak_tournament_solver();
ClassSolver zielonka_solver();

/// Lookup by name ("edgeless", "single-player", "tournament", "zielonka").
/// Throws InputError for anything else.
ClassSolver solver_for_class(const std::string& name);

}  // namespace pgcomp
