#include "pgcomp/subgame.hpp"

namespace pgcomp {

SubgameMask::SubgameMask(const Arena& arena)
    : arena_(&arena),
      alive_(static_cast<size_t>(arena.size()), 1),
      alive_out_(static_cast<size_t>(arena.size()), 0),
      alive_count_(arena.size()) {
  for (int v = 0; v < arena.size(); ++v)
    alive_out_[static_cast<size_t>(v)] = arena.out_degree(v);
}

SubgameMask::SubgameMask(const Arena& arena, const VertexSet& keep)
    : arena_(&arena),
      alive_(static_cast<size_t>(arena.size()), 0),
      alive_out_(static_cast<size_t>(arena.size()), 0),
      alive_count_(0) {
  if (keep.universe() != arena.size())
    throw InputError("restriction set universe does not match the arena");
  for (int v = 0; v < arena.size(); ++v) {
    if (keep.contains(v)) {
      alive_[static_cast<size_t>(v)] = 1;
      ++alive_count_;
    }
  }
  for (int v = 0; v < arena.size(); ++v) {
    if (!alive_[static_cast<size_t>(v)]) continue;
    int deg = 0;
    for (int w : arena.successors(v))
      if (alive_[static_cast<size_t>(w)]) ++deg;
    alive_out_[static_cast<size_t>(v)] = deg;
  }
}

std::uint64_t SubgameMask::remove(int v) {
  if (v < 0 || v >= universe() || !alive(v))
    throw InputError("remove: vertex " + std::to_string(v) + " is not alive");
  alive_[static_cast<size_t>(v)] = 0;
  --alive_count_;
  std::uint64_t touched = 0;
  for (int u : arena_->predecessors(v)) {
    if (alive_[static_cast<size_t>(u)]) {
      --alive_out_[static_cast<size_t>(u)];
      ++touched;
    }
  }
  return touched;
}

std::uint64_t SubgameMask::remove_all(const VertexSet& vs) {
  std::uint64_t touched = 0;
  for (int v = 0; v < universe(); ++v)
    if (vs.contains(v) && alive(v)) touched += remove(v);
  return touched;
}

std::vector<int> SubgameMask::alive_vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(alive_count_));
  for (int v = 0; v < universe(); ++v)
    if (alive(v)) out.push_back(v);
  return out;
}

int SubgameMask::first_alive() const {
  for (int v = 0; v < universe(); ++v)
    if (alive(v)) return v;
  return -1;
}

std::uint64_t SubgameMask::alive_arc_count() const {
  std::uint64_t m = 0;
  for (int v = 0; v < universe(); ++v)
    if (alive(v)) m += static_cast<std::uint64_t>(alive_out_degree(v));
  return m;
}

SubgameMask restrict(const SubgameMask& g, const VertexSet& keep) {
  if (keep.universe() != g.universe())
    throw InputError("restriction set universe does not match the arena");
  for (int v = 0; v < g.universe(); ++v)
    if (keep.contains(v) && !g.alive(v))
      throw InputError("restrict: vertex " + std::to_string(v) +
                       " is not alive in the view");
  return SubgameMask(g.arena(), keep);
}

SubgameMask restrict(const Arena& arena, const VertexSet& keep) {
  return SubgameMask(arena, keep);
}

PriorityLevel priority_level(const SubgameMask& g) {
  if (g.empty()) throw InputError("priority_level: empty game");
  int best = -1;
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v)) best = std::max(best, g.arena().priority(v));
  PriorityLevel lvl{best, VertexSet(g.universe())};
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v) && g.arena().priority(v) == best) lvl.vertices.insert(v);
  return lvl;
}

VertexSet alive_set(const SubgameMask& g) {
  VertexSet s(g.universe());
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v)) s.insert(v);
  return s;
}

VertexSet alive_owned(const SubgameMask& g, Player p) {
  VertexSet s(g.universe());
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v) && g.arena().owner(v) == p) s.insert(v);
  return s;
}

VertexSet alive_intersection(const SubgameMask& g, const VertexSet& s) {
  VertexSet out(g.universe());
  for (int v = 0; v < g.universe(); ++v)
    if (g.alive(v) && s.contains(v)) out.insert(v);
  return out;
}

}  // namespace pgcomp
