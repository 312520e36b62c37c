#pragma once

#include <functional>
#include <vector>

#include "pgcomp/arena.hpp"
#include "pgcomp/regions.hpp"
#include "pgcomp/subgame.hpp"

namespace pgcomp {

/// The pinned gadget built around a game and a pin vertex s: every arc out
/// of an Even vertex is subdivided through a fresh Odd vertex carrying the
/// source's priority, every Odd vertex (old and new) gains an arc to a
/// fresh Even hub whose priority is the smallest even number above all
/// original ones, and the hub's only arc returns to s. Odd wins the gadget
/// everywhere iff Odd wins s in the original game.
struct PinnedGame {
  Arena gadget;
  std::vector<int> to_original;  // gadget id -> original id, -1 for new ones
  int pin = -1;                  // original id of s
  int pin_gadget = -1;           // gadget id of s
  int hub = -1;                  // gadget id of the hub
  int subdivision_begin = -1;    // first subdivision gadget id
};

/// Deterministic numbering: alive originals ascending, then subdivision
/// vertices in arc order, hub last. Throws InputError when s is dead.
PinnedGame build_pinned_game(const SubgameMask& g, int s);

/// Decides whether Odd wins every vertex of a game.
using GlobalRecognizer = std::function<bool(const Arena&)>;

GlobalRecognizer zielonka_global_recognizer();

/// Full regions via one recognizer call per vertex on its pinned gadget.
Regions solve_via_global_recognizer(const SubgameMask& g,
                                    const GlobalRecognizer& recognizer);

/// True iff the set equals Odd's winning region. There is no shortcut past
/// solving: the pinned-game reduction is the very reason this module exists.
bool recognize_region(const SubgameMask& g, const VertexSet& candidate);

}  // namespace pgcomp
