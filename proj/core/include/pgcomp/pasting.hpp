#pragma once

#include <utility>
#include <vector>

#include "pgcomp/half_solve.hpp"
#include "pgcomp/subgame.hpp"

namespace pgcomp {

/// Biconnected blocks of the underlying undirected graph, with the cut
/// vertices linking them. Every alive arc lies in exactly one block; two
/// distinct blocks share at most one vertex; isolated vertices become
/// singleton blocks.
struct BlockCutTree {
  std::vector<std::vector<int>> blocks;             // each sorted ascending
  std::vector<int> cut_vertices;                    // sorted ascending
  std::vector<std::vector<int>> block_cuts;         // per block, its cuts
  std::vector<std::pair<int, int>> block_adjacency; // blocks sharing a cut
};

/// Lowpoint decomposition of the alive part, linear in the arcs.
BlockCutTree biconnected_components(const SubgameMask& g);

/// Solves a game whose blocks (and their subgames) the component solver can
/// handle: dead ends are eliminated first, disconnected parts are solved
/// separately, and connected multi-block games fall to leaf-block
/// elimination over the block-cut tree. The returned regions carry no
/// strategies.
Regions solve_pasted(const SubgameMask& g, const ClassSolver& component_solver);

}  // namespace pgcomp
