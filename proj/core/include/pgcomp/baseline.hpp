#pragma once

#include <cstdint>
#include <string>

#include "pgcomp/attractor.hpp"
#include "pgcomp/regions.hpp"
#include "pgcomp/subgame.hpp"

namespace pgcomp {

struct SolverReport {
  Regions regions;
  bool strategy_present = false;
  int recursion_depth = 0;
  std::uint64_t attractor_arc_touches = 0;
};

/// Solves a game whose alive vertices all belong to `owner`, in O(n*m).
/// The owner wins exactly the vertices from which a cycle whose maximum
/// priority has the owner's parity is reachable; dead ends and bad cycles
/// fall to the opponent. Regions carry no strategy. Throws InputError on
/// mixed ownership.
Regions solve_single_player(const SubgameMask& g, Player owner);

/// Recursive attractor-decomposition solver. Exact winning regions with
/// positional strategies for both players; the project-wide reference for
/// games too large to enumerate.
SolverReport solve_zielonka(const SubgameMask& g);

/// Enumerates all positional strategy pairs and simulates the unique play of
/// each pair from each start. A vertex is winning for a player iff some own
/// strategy beats every opposing one; the two quantifier orders are checked
/// against each other and a disagreement throws ContractViolation.
/// Throws SizeError when the alive count exceeds `cap`.
Regions solve_brute_force(const SubgameMask& g, int cap = 8);

/// Fills in positional strategies for regions computed by a winner-only
/// solver: each region, restricted to itself, is a game its claimant wins
/// everywhere, so the reference solver on the restriction yields a strategy
/// that never leaves the region. Throws ContractViolation if a claimed
/// region turns out not to be winning.
void synthesize_strategies(const SubgameMask& g, Regions& r);

struct VerificationResult {
  bool ok = true;
  int witness = -1;        // offending vertex when !ok
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Checks that `r` covers the view, that each region is closed under its
/// winner's strategy and the opponent's moves, and that fixing the winner's
/// strategy leaves the opponent with no winning vertex inside either region.
VerificationResult verify_solution(const SubgameMask& g, const Regions& r);

}  // namespace pgcomp
