#pragma once

#include <cstdint>
#include <vector>

#include "pgcomp/subgame.hpp"
#include "pgcomp/vertex_set.hpp"

namespace pgcomp {

struct AttractorResult {
  VertexSet attracted;
  /// strategy[v] is a successor one step closer to the target, set exactly
  /// for attracting-player vertices in attracted minus the target.
  std::vector<int> strategy;
  std::uint64_t arcs_touched = 0;
};

/// Least set containing `target` such that player i can force entering it:
/// an i-vertex joins when some successor is in the set, an opponent vertex
/// joins when its last alive successor joins. Opponent-owned dead ends
/// satisfy the latter vacuously and are always included, target or not;
/// this matches play semantics (a stuck player loses on the spot).
///
/// Runs in time proportional to the arcs incident to the result plus one
/// scan of the alive vertices. Throws InputError if the target contains a
/// dead vertex.
AttractorResult attract(const SubgameMask& g, Player i, const VertexSet& target);

/// True iff every i-vertex of A has an alive successor in A and every
/// opponent vertex of A has all alive successors in A.
bool is_closed(const SubgameMask& g, Player i, const VertexSet& set);

struct DeadEndResult {
  VertexSet won_even;
  VertexSet won_odd;
  std::vector<int> strategy;  // winner-owned vertices of the credited regions
  std::uint64_t arcs_touched = 0;
};

/// Repeatedly credits each player with the attractor of the opponent's dead
/// ends and removes it, until the residual game is total. The mask is
/// reduced in place; the returned regions are exact on the removed part.
DeadEndResult eliminate_dead_ends(SubgameMask& g);

}  // namespace pgcomp
