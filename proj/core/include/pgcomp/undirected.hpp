#pragma once

#include <vector>

#include "pgcomp/subgame.hpp"

namespace pgcomp {

/// Symmetric adjacency of the alive part of a game: u and w are neighbours
/// iff at least one of the arcs (u,w), (w,u) is alive. Self-loops do not
/// produce a self-adjacency; they are recorded in a separate flag so that
/// biconnectivity code can ignore them.
struct UndirectedView {
  std::vector<std::vector<int>> neighbors;  // ascending, deduplicated, no self
  std::vector<bool> self_loop;

  bool adjacent(int u, int w) const;
};

UndirectedView underlying_undirected(const SubgameMask& g);

}  // namespace pgcomp
