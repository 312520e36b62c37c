#include <algorithm>

#include "pgcomp/baseline.hpp"

namespace pgcomp {

namespace {

struct ZielonkaStats {
  int max_depth = 0;
  std::uint64_t arc_touches = 0;
};

void merge_dead_end_credits(const DeadEndResult& ded, Regions& out) {
  const int n = ded.won_even.universe();
  for (int v = 0; v < n; ++v) {
    if (ded.won_even.contains(v)) out.assign(v, Player::Even);
    if (ded.won_odd.contains(v)) out.assign(v, Player::Odd);
    if (ded.strategy[static_cast<size_t>(v)] >= 0)
      out.set_strategy(v, ded.strategy[static_cast<size_t>(v)]);
  }
}

void zielonka_rec(SubgameMask g, Regions& out, ZielonkaStats& st, int depth) {
  st.max_depth = std::max(st.max_depth, depth);
  const DeadEndResult ded = eliminate_dead_ends(g);
  st.arc_touches += ded.arcs_touched;
  merge_dead_end_credits(ded, out);
  if (g.empty()) return;

  const Arena& a = g.arena();
  const int n = g.universe();
  const auto [d, top] = priority_level(g);
  const Player i = parity_owner(d);

  AttractorResult att = attract(g, i, top);
  st.arc_touches += att.arcs_touched;
  SubgameMask sub = g;
  st.arc_touches += sub.remove_all(att.attracted);

  Regions subr(n);
  zielonka_rec(sub, subr, st, depth + 1);

  if (subr.count(opponent(i)) == 0) {
    // i wins the whole remaining view: sub-strategy inside the subgame,
    // attractor strategy toward the top priority, any move on the top.
    for (int v = 0; v < n; ++v) {
      if (!g.alive(v)) continue;
      out.assign(v, i);
      if (a.owner(v) != i) continue;
      if (subr.covered(v)) {
        if (subr.has_strategy(v)) out.set_strategy(v, subr.strategy(v));
      } else if (top.contains(v)) {
        for (int w : a.successors(v)) {
          if (g.alive(w)) {
            out.set_strategy(v, w);
            break;
          }
        }
      } else {
        out.set_strategy(v, att.strategy[static_cast<size_t>(v)]);
      }
    }
    return;
  }

  const Player o = opponent(i);
  AttractorResult back = attract(g, o, subr.region(o));
  st.arc_touches += back.arcs_touched;
  for (int v = 0; v < n; ++v) {
    if (!back.attracted.contains(v)) continue;
    out.assign(v, o);
    if (a.owner(v) != o) continue;
    if (subr.covered(v) && subr.winner(v) == o) {
      if (subr.has_strategy(v)) out.set_strategy(v, subr.strategy(v));
    } else {
      out.set_strategy(v, back.strategy[static_cast<size_t>(v)]);
    }
  }

  SubgameMask rest = g;
  st.arc_touches += rest.remove_all(back.attracted);
  zielonka_rec(rest, out, st, depth + 1);
}

}  // namespace

SolverReport solve_zielonka(const SubgameMask& g) {
  SolverReport report;
  report.regions = Regions(g.universe());
  ZielonkaStats st;
  zielonka_rec(g, report.regions, st, 1);
  report.strategy_present = true;
  report.recursion_depth = st.max_depth;
  report.attractor_arc_touches = st.arc_touches;
  return report;
}

}  // namespace pgcomp
