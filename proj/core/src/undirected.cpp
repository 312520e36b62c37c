#include "pgcomp/undirected.hpp"

#include <algorithm>

namespace pgcomp {

bool UndirectedView::adjacent(int u, int w) const {
  const auto& row = neighbors[static_cast<size_t>(u)];
  return std::binary_search(row.begin(), row.end(), w);
}

UndirectedView underlying_undirected(const SubgameMask& g) {
  const int n = g.universe();
  UndirectedView view;
  view.neighbors.resize(static_cast<size_t>(n));
  view.self_loop.assign(static_cast<size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    for (int w : g.arena().successors(v)) {
      if (!g.alive(w)) continue;
      if (w == v) {
        view.self_loop[static_cast<size_t>(v)] = true;
      } else {
        view.neighbors[static_cast<size_t>(v)].push_back(w);
        view.neighbors[static_cast<size_t>(w)].push_back(v);
      }
    }
  }
  for (auto& row : view.neighbors) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return view;
}

}  // namespace pgcomp
