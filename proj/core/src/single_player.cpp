#include <algorithm>
#include <vector>

#include "pgcomp/baseline.hpp"

namespace pgcomp {

namespace {

/// Iterative Tarjan over the subgraph of alive vertices with priority <= cap.
/// Marks in `on_good_cycle` every vertex of priority == cap that sits in a
/// non-trivial strongly connected component or carries a self-loop.
void mark_cycle_anchors(const SubgameMask& g, int cap, VertexSet& anchors) {
  const Arena& a = g.arena();
  const int n = a.size();
  auto in_sub = [&](int v) {
    return g.alive(v) && a.priority(v) <= cap;
  };

  std::vector<int> index(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<std::uint8_t> on_stack(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (!in_sub(root) || index[static_cast<size_t>(root)] >= 0) continue;
    call.push_back({root, 0});
    index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = 1;

    while (!call.empty()) {
      Frame& f = call.back();
      const auto succs = a.successors(f.v);
      bool descended = false;
      while (f.edge < succs.size()) {
        const int w = succs[f.edge++];
        if (!in_sub(w)) continue;
        if (index[static_cast<size_t>(w)] < 0) {
          index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = 1;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<size_t>(w)])
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
      }
      if (descended) continue;

      const int v = f.v;
      call.pop_back();
      if (!call.empty())
        low[static_cast<size_t>(call.back().v)] =
            std::min(low[static_cast<size_t>(call.back().v)], low[static_cast<size_t>(v)]);
      if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
        // pop one component
        std::vector<int> comp;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = 0;
          comp.push_back(w);
          if (w == v) break;
        }
        const bool cyclic = comp.size() > 1;
        for (int w : comp) {
          if (a.priority(w) != cap) continue;
          if (cyclic || a.has_arc(w, w)) anchors.insert(w);
        }
      }
    }
  }
}

}  // namespace

Regions solve_single_player(const SubgameMask& g, Player owner) {
  const Arena& a = g.arena();
  const int n = a.size();
  for (int v = 0; v < n; ++v)
    if (g.alive(v) && a.owner(v) != owner)
      throw InputError("solve_single_player: vertex " + std::to_string(v) +
                       " is not owned by the declared player");

  // Anchor = vertex of the owner's parity lying on a cycle among vertices of
  // no larger priority; such a cycle's maximum is the anchor's priority.
  std::vector<int> prios;
  for (int v = 0; v < n; ++v)
    if (g.alive(v) && parity_owner(a.priority(v)) == owner)
      prios.push_back(a.priority(v));
  std::sort(prios.begin(), prios.end());
  prios.erase(std::unique(prios.begin(), prios.end()), prios.end());

  VertexSet anchors(n);
  for (int p : prios) mark_cycle_anchors(g, p, anchors);

  // The owner wins exactly where an anchor is reachable.
  VertexSet winning(n);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (anchors.contains(v)) {
      winning.insert(v);
      queue.push_back(v);
    }
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (int u : a.predecessors(queue[qi])) {
      if (g.alive(u) && !winning.contains(u)) {
        winning.insert(u);
        queue.push_back(u);
      }
    }
  }

  Regions r(n);
  const Player opp = opponent(owner);
  for (int v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    r.assign(v, winning.contains(v) ? owner : opp);
  }
  return r;
}

}  // namespace pgcomp
