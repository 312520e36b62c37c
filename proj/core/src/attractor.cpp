#include "pgcomp/attractor.hpp"

namespace pgcomp {

AttractorResult attract(const SubgameMask& g, Player i, const VertexSet& target) {
  const Arena& a = g.arena();
  const int n = a.size();
  AttractorResult res{VertexSet(n), std::vector<int>(static_cast<size_t>(n), -1), 0};

  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(g.alive_count()));
  for (int v = 0; v < n; ++v) {
    if (!target.contains(v)) continue;
    if (!g.alive(v))
      throw InputError("attract: target vertex " + std::to_string(v) +
                       " is not alive");
    res.attracted.insert(v);
    queue.push_back(v);
  }

  const Player opp = opponent(i);
  for (int v = 0; v < n; ++v) {
    if (g.alive(v) && a.owner(v) == opp && g.alive_out_degree(v) == 0 &&
        !res.attracted.contains(v)) {
      res.attracted.insert(v);
      queue.push_back(v);
    }
  }

  // remaining[u]: alive successors of opponent vertex u not yet attracted,
  // initialised lazily on first contact.
  std::vector<std::int32_t> remaining(static_cast<size_t>(n), -1);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    for (int u : a.predecessors(v)) {
      ++res.arcs_touched;
      if (!g.alive(u) || res.attracted.contains(u)) continue;
      if (a.owner(u) == i) {
        res.attracted.insert(u);
        res.strategy[static_cast<size_t>(u)] = v;
        queue.push_back(u);
      } else {
        auto& r = remaining[static_cast<size_t>(u)];
        if (r < 0) r = g.alive_out_degree(u);
        if (--r == 0) {
          res.attracted.insert(u);
          queue.push_back(u);
        }
      }
    }
  }
  return res;
}

bool is_closed(const SubgameMask& g, Player i, const VertexSet& set) {
  const Arena& a = g.arena();
  for (int v = 0; v < g.universe(); ++v) {
    if (!set.contains(v)) continue;
    if (a.owner(v) == i) {
      bool has_inside = false;
      for (int w : a.successors(v)) {
        if (g.alive(w) && set.contains(w)) {
          has_inside = true;
          break;
        }
      }
      if (!has_inside) return false;
    } else {
      for (int w : a.successors(v))
        if (g.alive(w) && !set.contains(w)) return false;
    }
  }
  return true;
}

DeadEndResult eliminate_dead_ends(SubgameMask& g) {
  const int n = g.universe();
  DeadEndResult res{VertexSet(n), VertexSet(n),
                    std::vector<int>(static_cast<size_t>(n), -1), 0};
  const VertexSet empty(n);
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (Player winner : {Player::Even, Player::Odd}) {
      AttractorResult att = attract(g, winner, empty);
      res.arcs_touched += att.arcs_touched;
      if (att.attracted.empty()) continue;
      progressed = true;
      VertexSet& credit =
          winner == Player::Even ? res.won_even : res.won_odd;
      for (int v = 0; v < n; ++v) {
        if (!att.attracted.contains(v)) continue;
        credit.insert(v);
        if (att.strategy[static_cast<size_t>(v)] >= 0)
          res.strategy[static_cast<size_t>(v)] = att.strategy[static_cast<size_t>(v)];
        res.arcs_touched += g.remove(v);
      }
    }
  }
  return res;
}

}  // namespace pgcomp
