#include "pgcomp/baseline.hpp"

namespace pgcomp {

namespace {

VerificationResult fail(int witness, std::string reason) {
  return {false, witness, std::move(reason)};
}

}  // namespace

VerificationResult verify_solution(const SubgameMask& g, const Regions& r) {
  const Arena& a = g.arena();
  const int n = g.universe();
  if (r.universe() != n) return fail(-1, "regions universe mismatch");

  for (int v = 0; v < n; ++v)
    if (g.alive(v) && !r.covered(v)) return fail(v, "vertex not covered");

  for (Player p : {Player::Even, Player::Odd}) {
    VertexSet reg(n);
    for (int v = 0; v < n; ++v)
      if (g.alive(v) && r.covered(v) && r.winner(v) == p) reg.insert(v);

    // Closure: the winner's strategy stays inside, the opponent cannot leave.
    for (int v = 0; v < n; ++v) {
      if (!reg.contains(v)) continue;
      if (a.owner(v) == p) {
        const int s = r.strategy(v);
        if (s < 0) return fail(v, "winner-owned vertex without strategy");
        if (!g.alive(s) || !a.has_arc(v, s))
          return fail(v, "strategy edge is not an alive arc");
        if (!reg.contains(s)) return fail(v, "strategy edge leaves region");
      } else {
        for (int w : a.successors(v))
          if (g.alive(w) && !reg.contains(w))
            return fail(v, "opponent can escape the region");
      }
    }

    // Fix the winner's moves and let the opponent range over the rest:
    // the opponent must win nowhere in the resulting one-player game.
    const std::vector<int> members = reg.to_vector();
    std::vector<int> local(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < members.size(); ++i)
      local[static_cast<size_t>(members[i])] = static_cast<int>(i);
    const Player opp = opponent(p);
    ArenaBuilder b(static_cast<int>(members.size()));
    for (int v : members) b.add_vertex(opp, a.priority(v));
    for (int v : members) {
      if (a.owner(v) == p) {
        b.add_arc(local[static_cast<size_t>(v)],
                  local[static_cast<size_t>(r.strategy(v))]);
      } else {
        for (int w : a.successors(v))
          if (g.alive(w))
            b.add_arc(local[static_cast<size_t>(v)], local[static_cast<size_t>(w)]);
      }
    }
    const Arena fixed = b.build();
    const SubgameMask fixed_mask(fixed);
    const Regions opp_view = solve_single_player(fixed_mask, opp);
    for (size_t i = 0; i < members.size(); ++i) {
      if (opp_view.covered(static_cast<int>(i)) &&
          opp_view.winner(static_cast<int>(i)) == opp)
        return fail(members[i], "opponent wins inside the region");
    }
  }
  return {};
}

}  // namespace pgcomp
