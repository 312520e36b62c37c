#include <utility>
#include <vector>

#include "pgcomp/attractor.hpp"
#include "pgcomp/errors.hpp"
#include "pgcomp/half_solve.hpp"

namespace pgcomp {

namespace {

void check_solved(const SubgameMask& cur, const Regions& regions,
                  const std::string& who) {
  for (int v = 0; v < cur.universe(); ++v) {
    if (cur.alive(v) && !regions.covered(v))
      throw ContractViolation(who + ": Solved regions miss vertex " +
                              std::to_string(v));
    if (!cur.alive(v) && regions.covered(v))
      throw ContractViolation(who + ": Solved regions cover dead vertex " +
                              std::to_string(v));
  }
}

void check_reduced(const SubgameMask& cur, const Reduced& red,
                   const std::string& who) {
  if (red.remaining.alive_count() >= cur.alive_count())
    throw ContractViolation(who + ": Reduced did not shrink the game");
  for (int v = 0; v < cur.universe(); ++v) {
    const bool was = cur.alive(v);
    const bool is = red.remaining.alive(v);
    if (is && !was)
      throw ContractViolation(who + ": Reduced resurrected vertex " +
                              std::to_string(v));
    const bool starred =
        red.won_even_star.contains(v) || red.won_odd_star.contains(v);
    if (red.won_even_star.contains(v) && red.won_odd_star.contains(v))
      throw ContractViolation(who + ": vertex " + std::to_string(v) +
                              " credited to both players");
    if ((was && !is) != starred)
      throw ContractViolation(who +
                              ": starred sets do not partition the removed "
                              "vertices (vertex " +
                              std::to_string(v) + ")");
  }
}

}  // namespace

Regions generic_solve(const SubgameMask& g, const HalfSolver& h,
                      GenericSolveStats* stats) {
  GenericSolveStats local;
  GenericSolveStats& st = stats ? *stats : local;
  st.depth = 0;
  st.framework_arc_touches = 0;
  st.initial_arc_count = g.alive_arc_count();

  const int n = g.universe();
  Regions out(n);

  // One pending frame per Whole answer; resolved innermost-first once the
  // reduction chain bottoms out.
  struct WholeFrame {
    std::vector<int> alive_snapshot;
    Player favourite;  // parity owner of the stripped top priority
    int even_before;
    int odd_before;
  };
  std::vector<WholeFrame> frames;

  SubgameMask cur = g;
  while (true) {
    const DeadEndResult ded = eliminate_dead_ends(cur);
    st.framework_arc_touches += ded.arcs_touched;
    for (int v = 0; v < n; ++v) {
      if (ded.won_even.contains(v)) out.assign(v, Player::Even);
      if (ded.won_odd.contains(v)) out.assign(v, Player::Odd);
    }
    if (cur.empty()) break;

    ++st.depth;
    HalfSolveOutcome res = h.run(cur);

    if (auto* solved = std::get_if<Solved>(&res)) {
      check_solved(cur, solved->regions, h.name);
      merge_winners(out, solved->regions);
      break;
    }
    if (auto* red = std::get_if<Reduced>(&res)) {
      check_reduced(cur, *red, h.name);
      for (int v = 0; v < n; ++v) {
        if (red->won_even_star.contains(v)) out.assign(v, Player::Even);
        if (red->won_odd_star.contains(v)) out.assign(v, Player::Odd);
      }
      cur = std::move(red->remaining);
      continue;
    }

    // Whole: one true region is empty. Strip the attractor of the top
    // priority and continue in the remainder; which side owns everything
    // is decided at unwind time from the remainder's regions.
    const PriorityLevel lvl = priority_level(cur);
    const Player i = parity_owner(lvl.priority);
    frames.push_back({cur.alive_vertices(), i, out.count(Player::Even),
                      out.count(Player::Odd)});
    const AttractorResult att = attract(cur, i, lvl.vertices);
    st.framework_arc_touches += att.arcs_touched;
    st.framework_arc_touches += cur.remove_all(att.attracted);
  }

  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    const Player challenger = opponent(it->favourite);
    const int before =
        challenger == Player::Even ? it->even_before : it->odd_before;
    const Player winner =
        out.count(challenger) > before ? challenger : it->favourite;
    for (int v : it->alive_snapshot) out.assign(v, winner);
  }
  return out;
}

}  // namespace pgcomp
