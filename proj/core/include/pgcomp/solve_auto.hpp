#pragma once

#include <string>

#include "pgcomp/regions.hpp"
#include "pgcomp/subgame.hpp"

namespace pgcomp {

struct AutoResult {
  Regions regions;
  std::string method;  // which pipeline stage resolved the game
};

/// Tries in order: dead-end elimination, weak-tournament solving, half-join
/// detection for both players against the shipped class tests, block
/// decomposition with per-block auto solving, apex search, and finally the
/// Zielonka reference. Always exact; only the speed depends on the match.
AutoResult solve_auto(const SubgameMask& g);

}  // namespace pgcomp
