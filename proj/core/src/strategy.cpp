#include "pgcomp/baseline.hpp"
#include "pgcomp/errors.hpp"

namespace pgcomp {

void synthesize_strategies(const SubgameMask& g, Regions& r) {
  for (Player p : {Player::Even, Player::Odd}) {
    VertexSet reg(g.universe());
    for (int v = 0; v < g.universe(); ++v)
      if (g.alive(v) && r.covered(v) && r.winner(v) == p) reg.insert(v);
    if (reg.empty()) continue;

    const SubgameMask sub = restrict(g, reg);
    const SolverReport rep = solve_zielonka(sub);
    if (rep.regions.count(opponent(p)) != 0)
      throw ContractViolation(
          "synthesize_strategies: claimed region is not winning for its "
          "player");
    for (int v = 0; v < g.universe(); ++v)
      if (reg.contains(v) && g.arena().owner(v) == p)
        r.set_strategy(v, rep.regions.strategy(v));
  }
}

}  // namespace pgcomp
