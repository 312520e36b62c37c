#include <utility>

#include "pgcomp/add_vertex.hpp"
#include "pgcomp/attractor.hpp"
#include "pgcomp/errors.hpp"

namespace pgcomp {

std::optional<ApexCertificate> find_removable_vertex(
    const SubgameMask& g, const MembershipTest& member) {
  for (int v = 0; v < g.universe(); ++v) {
    if (!g.alive(v)) continue;
    SubgameMask sub = g;
    sub.remove(v);
    if (member.test(sub)) return ApexCertificate{v, member.name};
  }
  return std::nullopt;
}

namespace {

HalfSolveOutcome reduce_by(const SubgameMask& g, const VertexSet& removed,
                           Player credit) {
  SubgameMask remaining = g;
  remaining.remove_all(removed);
  VertexSet even(g.universe()), odd(g.universe());
  (credit == Player::Even ? even : odd) = removed;
  return Reduced{std::move(remaining), std::move(even), std::move(odd)};
}

}  // namespace

HalfSolveOutcome half_solve_add_vertex(const SubgameMask& g, int apex,
                                       const ClassSolver& inner) {
  if (apex < 0 || apex >= g.universe() || !g.alive(apex))
    throw InputError("half_solve_add_vertex: apex is not alive");

  const VertexSet pin = VertexSet::of(g.universe(), {apex});

  const AttractorResult a1 = attract(g, Player::Even, pin);
  SubgameMask p1 = g;
  p1.remove_all(a1.attracted);
  const Regions r1 = inner.solve(p1);
  if (r1.count(Player::Odd) > 0)
    return reduce_by(g,
                     attract(g, Player::Odd, r1.region(Player::Odd)).attracted,
                     Player::Odd);

  const AttractorResult a2 = attract(g, Player::Odd, pin);
  SubgameMask p2 = g;
  p2.remove_all(a2.attracted);
  const Regions r2 = inner.solve(p2);
  if (r2.count(Player::Even) > 0)
    return reduce_by(
        g, attract(g, Player::Even, r2.region(Player::Even)).attracted,
        Player::Even);

  return Whole{};
}

HalfSolver make_add_vertex_half_solver(int apex, ClassSolver inner) {
  return {"add-vertex(" + inner.name + ")",
          [apex, inner = std::move(inner)](const SubgameMask& m) -> HalfSolveOutcome {
            if (m.alive(apex)) return half_solve_add_vertex(m, apex, inner);
            // Apex already gone: the subgame sits in the inner class.
            return Solved{inner.solve(m)};
          }};
}

}  // namespace pgcomp
