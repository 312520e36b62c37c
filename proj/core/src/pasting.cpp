#include <algorithm>

#include "pgcomp/attractor.hpp"
#include "pgcomp/pasting.hpp"
#include "pgcomp/undirected.hpp"

namespace pgcomp {

namespace {

struct DfsFrame {
  int v;
  int parent;
  size_t edge;
};

}  // namespace

BlockCutTree biconnected_components(const SubgameMask& g) {
  const int n = g.universe();
  const UndirectedView u = underlying_undirected(g);
  BlockCutTree tree;

  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<std::uint8_t> is_cut(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  auto pop_block = [&](int a, int b) {
    std::vector<int> block;
    auto add = [&](int x) {
      if (std::find(block.begin(), block.end(), x) == block.end())
        block.push_back(x);
    };
    while (!edge_stack.empty()) {
      auto [x, y] = edge_stack.back();
      edge_stack.pop_back();
      add(x);
      add(y);
      if (x == a && y == b) break;
    }
    std::sort(block.begin(), block.end());
    tree.blocks.push_back(std::move(block));
  };

  std::vector<DfsFrame> stack;
  for (int root = 0; root < n; ++root) {
    if (!g.alive(root) || disc[static_cast<size_t>(root)] >= 0) continue;
    if (u.neighbors[static_cast<size_t>(root)].empty()) {
      disc[static_cast<size_t>(root)] = timer++;
      tree.blocks.push_back({root});
      continue;
    }

    int root_children = 0;
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      DfsFrame& f = stack.back();
      const auto& row = u.neighbors[static_cast<size_t>(f.v)];
      if (f.edge < row.size()) {
        const int w = row[f.edge++];
        if (disc[static_cast<size_t>(w)] < 0) {
          if (f.v == root) ++root_children;
          edge_stack.emplace_back(f.v, w);
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent &&
                   disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
        }
        continue;
      }
      const int v = f.v;
      const int parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[static_cast<size_t>(parent)] =
          std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
      if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(parent)]) {
        if (parent != root || root_children > 1)
          is_cut[static_cast<size_t>(parent)] = 1;
        pop_block(parent, v);
      }
    }
  }

  for (int v = 0; v < n; ++v)
    if (is_cut[static_cast<size_t>(v)]) tree.cut_vertices.push_back(v);

  tree.block_cuts.resize(tree.blocks.size());
  std::vector<std::vector<int>> blocks_of_cut;
  for (int c : tree.cut_vertices) {
    std::vector<int> owners;
    for (size_t b = 0; b < tree.blocks.size(); ++b) {
      if (std::binary_search(tree.blocks[b].begin(), tree.blocks[b].end(), c)) {
        tree.block_cuts[b].push_back(c);
        owners.push_back(static_cast<int>(b));
      }
    }
    for (size_t i = 0; i < owners.size(); ++i)
      for (size_t j = i + 1; j < owners.size(); ++j)
        tree.block_adjacency.emplace_back(owners[i], owners[j]);
  }
  return tree;
}

namespace {

std::vector<VertexSet> connected_components(const SubgameMask& g) {
  const int n = g.universe();
  const UndirectedView u = underlying_undirected(g);
  std::vector<std::uint8_t> seen(static_cast<size_t>(n), 0);
  std::vector<VertexSet> comps;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (!g.alive(s) || seen[static_cast<size_t>(s)]) continue;
    VertexSet comp(n);
    queue.assign(1, s);
    seen[static_cast<size_t>(s)] = 1;
    comp.insert(s);
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int w : u.neighbors[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          comp.insert(w);
          queue.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

VertexSet as_set(int universe, const std::vector<int>& vs) {
  VertexSet s(universe);
  for (int v : vs) s.insert(v);
  return s;
}

}  // namespace

Regions solve_pasted(const SubgameMask& g0, const ClassSolver& component_solver) {
  const int n = g0.universe();
  Regions out(n);

  SubgameMask g = g0;
  const DeadEndResult ded = eliminate_dead_ends(g);
  for (int v = 0; v < n; ++v) {
    if (ded.won_even.contains(v)) out.assign(v, Player::Even);
    if (ded.won_odd.contains(v)) out.assign(v, Player::Odd);
  }
  if (g.empty()) return out;

  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps)
      merge_winners(out, solve_pasted(restrict(g, comp), component_solver));
    return out;
  }

  const BlockCutTree tree = biconnected_components(g);
  if (tree.blocks.size() == 1) {
    merge_winners(out, component_solver.solve(g));
    return out;
  }

  // Leaf-block elimination: a leaf touches the rest through one cut vertex.
  size_t leaf = tree.blocks.size();
  for (size_t b = 0; b < tree.blocks.size(); ++b) {
    if (tree.block_cuts[b].size() <= 1) {
      leaf = b;
      break;
    }
  }
  const int v = tree.block_cuts[leaf][0];
  const Player o = g.arena().owner(v);
  const VertexSet leaf_set = as_set(n, tree.blocks[leaf]);

  const Regions leaf_regions = component_solver.solve(restrict(g, leaf_set));

  // The game with the leaf's interior removed (the cut vertex stays).
  SubgameMask rest = g;
  for (int x : tree.blocks[leaf])
    if (x != v) rest.remove(x);

  if (leaf_regions.winner(v) == o) {
    // The owner of the cut vertex wins it locally: everything the owner can
    // attract to it in the remainder joins the owner's region.
    const AttractorResult att = attract(rest, o, VertexSet::of(n, {v}));
    SubgameMask beyond = rest;
    beyond.remove_all(att.attracted);
    const Regions rec = solve_pasted(beyond, component_solver);
    merge_winners(out, leaf_regions);
    for (int x = 0; x < n; ++x)
      if (att.attracted.contains(x)) out.assign(x, o);
    merge_winners(out, rec);
    return out;
  }

  const Regions rec = solve_pasted(rest, component_solver);
  if (rec.winner(v) != o) {
    // Both sides agree the opponent keeps the cut vertex.
    merge_winners(out, leaf_regions);
    merge_winners(out, rec);
    return out;
  }

  // The remainder flips the cut vertex to its owner: re-solve the leaf with
  // the owner's local attractor of the cut vertex carved out.
  SubgameMask leaf_mask = restrict(g, leaf_set);
  const AttractorResult att = attract(leaf_mask, o, VertexSet::of(n, {v}));
  leaf_mask.remove_all(att.attracted);
  const Regions leaf_rest = component_solver.solve(leaf_mask);
  merge_winners(out, leaf_rest);
  for (int x = 0; x < n; ++x)
    if (att.attracted.contains(x)) out.assign(x, o);
  merge_winners(out, rec);
  return out;
}

}  // namespace pgcomp
