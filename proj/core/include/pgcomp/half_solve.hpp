#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "pgcomp/regions.hpp"
#include "pgcomp/subgame.hpp"

namespace pgcomp {

/// The three-way result of a half-solver: either the full regions, a sound
/// strict reduction with the removed part already credited, or the game
/// handed back whole with the guarantee that one true region is empty.
struct Solved {
  Regions regions;
};

struct Reduced {
  SubgameMask remaining;     // proper subgame of the input view
  VertexSet won_even_star;   // removed vertices credited to Even
  VertexSet won_odd_star;    // removed vertices credited to Odd
};

struct Whole {};

using HalfSolveOutcome = std::variant<Solved, Reduced, Whole>;

struct HalfSolver {
  std::string name;
  std::function<HalfSolveOutcome(const SubgameMask&)> run;
};

/// A full solver for some hereditary class of games.
struct ClassSolver {
  std::string name;
  std::function<Regions(const SubgameMask&)> solve;
};

struct GenericSolveStats {
  /// Number of half-solver invocations along the episode (each one sees a
  /// strictly smaller game, so this is at most the initial vertex count).
  int depth = 0;
  /// Arcs touched by the attractor computations and vertex removals the
  /// framework itself performs (half-solver internals are not counted).
  std::uint64_t framework_arc_touches = 0;
  std::uint64_t initial_arc_count = 0;
};

/// Lifts a half-solver into a full solver: eliminate dead ends, consult the
/// half-solver, recurse on reductions, and resolve a Whole answer by
/// stripping the attractor of the top priority and checking whether the
/// opponent of its parity wins anywhere in the remainder.
///
/// Requires the half-solver to be valid on a hereditary class containing
/// the view and every subgame produced along the way. Contract breaches
/// (non-proper reduction, non-determinate Solved regions) throw
/// ContractViolation. The returned regions carry no strategies.
Regions generic_solve(const SubgameMask& g, const HalfSolver& h,
                      GenericSolveStats* stats = nullptr);

/// Winner-only merge used when composing sub-results.
inline void merge_winners(Regions& out, const Regions& in) {
  for (int v = 0; v < in.universe(); ++v)
    if (in.covered(v)) out.assign(v, in.winner(v));
}

}  // namespace pgcomp
