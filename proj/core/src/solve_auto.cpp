#include "pgcomp/solve_auto.hpp"

#include "pgcomp/add_vertex.hpp"
#include "pgcomp/attractor.hpp"
#include "pgcomp/baseline.hpp"
#include "pgcomp/classes.hpp"
#include "pgcomp/join.hpp"
#include "pgcomp/pasting.hpp"

namespace pgcomp {

AutoResult solve_auto(const SubgameMask& g0) {
  const int n = g0.universe();
  Regions out(n);

  SubgameMask g = g0;
  const DeadEndResult ded = eliminate_dead_ends(g);
  for (int v = 0; v < n; ++v) {
    if (ded.won_even.contains(v)) out.assign(v, Player::Even);
    if (ded.won_odd.contains(v)) out.assign(v, Player::Odd);
  }
  if (g.empty()) return {std::move(out), "dead-end-elimination"};

  if (is_weak_tournament(g)) {
    merge_winners(out, solve_weak_tournament(g));
    return {std::move(out), "weak-tournament"};
  }

  for (Player i : {Player::Even, Player::Odd}) {
    const auto dec = detect_half_join(g, i);
    if (!dec) continue;
    for (const auto& mt : shipped_membership_tests()) {
      if (!mt.test(restrict(g, dec->class_side))) continue;
      merge_winners(
          out, generic_solve(
                   g, make_half_join_half_solver(*dec, solver_for_class(mt.name))));
      return {std::move(out), std::string("half-join(") + player_name(i) +
                                  "," + mt.name + ")"};
    }
  }

  if (biconnected_components(g).blocks.size() > 1) {
    const ClassSolver per_block{
        "auto", [](const SubgameMask& m) { return solve_auto(m).regions; }};
    merge_winners(out, solve_pasted(g, per_block));
    return {std::move(out), "pasting"};
  }

  for (const auto& mt : shipped_membership_tests()) {
    if (const auto cert = find_removable_vertex(g, mt)) {
      merge_winners(
          out, generic_solve(g, make_add_vertex_half_solver(
                                    cert->apex, solver_for_class(mt.name))));
      return {std::move(out), "add-vertex(" + mt.name + ")"};
    }
  }

  merge_winners(out, solve_zielonka(g).regions);
  return {std::move(out), "zielonka"};
}

}  // namespace pgcomp
