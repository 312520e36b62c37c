#include "pgcomp/classes.hpp"

#include "pgcomp/baseline.hpp"
#include "pgcomp/errors.hpp"
#include "pgcomp/join.hpp"

namespace pgcomp {

bool is_edgeless(const SubgameMask& g) {
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v) && g.alive_out_degree(v) > 0) return false;
  return true;
}

bool is_single_player(const SubgameMask& g) {
  const int first = g.first_alive();
  if (first < 0) return true;
  const Player owner = g.arena().owner(first);
  for (int v = first + 1; v < g.universe(); ++v)
    if (g.alive(v) && g.arena().owner(v) != owner) return false;
  return true;
}

ClassSolver edgeless_solver() {
  return {"edgeless", [](const SubgameMask& m) {
            if (!is_edgeless(m))
              throw InputError("edgeless solver: view has arcs");
            // Every vertex is a dead end, so its owner is stuck and loses.
            Regions r(m.universe());
            for (int v = 0; v < m.universe(); ++v)
              if (m.alive(v)) r.assign(v, opponent(m.arena().owner(v)));
            return r;
          }};
}

ClassSolver single_player_solver() {
  return {"single-player", [](const SubgameMask& m) {
            const int first = m.first_alive();
            if (first < 0) return Regions(m.universe());
            return solve_single_player(m, m.arena().owner(first));
          }};
}

ClassSolver weak_tournament_solver() {
  return {"tournament",
          [](const SubgameMask& m) { return solve_weak_tournament(m); }};
}

ClassSolver zielonka_solver() {
  return {"zielonka",
          [](const SubgameMask& m) { return solve_zielonka(m).regions; }};
}

const std::vector<MembershipTest>& shipped_membership_tests() {
  static const std::vector<MembershipTest> tests = {
      {"edgeless", [](const SubgameMask& m) { return is_edgeless(m); }},
      {"single-player",
       [](const SubgameMask& m) { return is_single_player(m); }},
      {"tournament",
       [](const SubgameMask& m) { return is_weak_tournament(m); }},
  };
  return tests;
}

ClassSolver solver_for_class(const std::string& name) {
  if (name == "edgeless") return edgeless_solver();
  if (name == "single-player") return single_player_solver();
  if (name == "tournament") return weak_tournament_solver();
  if (name == "zielonka") return zielonka_solver();
  throw InputError("unknown class name: " + name);
}

}  // namespace pgcomp
