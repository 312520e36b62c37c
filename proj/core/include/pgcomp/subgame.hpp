#pragma once

#include <cstdint>
#include <vector>

#include "pgcomp/arena.hpp"
#include "pgcomp/vertex_set.hpp"

namespace pgcomp {

/// A live view over an Arena: the induced subgame on the alive vertices,
/// containing exactly the arcs with both endpoints alive. Removal is
/// monotone -- vertices are never resurrected within one view -- which keeps
/// per-vertex alive out-degrees maintainable in time proportional to the
/// arcs incident to the removed vertices.
///
/// Masks are cheap value types over a shared Arena: copying one branches the
/// view. A single mask must only be written from one thread at a time;
/// distinct masks over one Arena are independent.
class SubgameMask {
 public:
  explicit SubgameMask(const Arena& arena);
  SubgameMask(const Arena& arena, const VertexSet& keep);

  const Arena& arena() const { return *arena_; }
  int universe() const { return arena_->size(); }

  bool alive(int v) const { return alive_[static_cast<size_t>(v)] != 0; }
  int alive_count() const { return alive_count_; }
  bool empty() const { return alive_count_ == 0; }

  /// Number of successors of v that are still alive.
  int alive_out_degree(int v) const { return alive_out_[static_cast<size_t>(v)]; }

  /// Removes an alive vertex. Returns the number of predecessor arcs
  /// touched while updating alive out-degrees.
  std::uint64_t remove(int v);
  std::uint64_t remove_all(const VertexSet& vs);

  std::vector<int> alive_vertices() const;
  int first_alive() const;

  /// Counts arcs with both endpoints alive. O(arcs).
  std::uint64_t alive_arc_count() const;

 private:
  const Arena* arena_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::int32_t> alive_out_;
  int alive_count_ = 0;
};

/// View of the subgame induced by `keep`. The input view is unmodified.
/// Requires keep to be a subset of the alive vertices.
SubgameMask restrict(const SubgameMask& g, const VertexSet& keep);
SubgameMask restrict(const Arena& arena, const VertexSet& keep);

struct PriorityLevel {
  int priority;        // maximum alive priority
  VertexSet vertices;  // alive vertices carrying it
};

/// Maximum alive priority and its carriers. Throws InputError on an empty view.
PriorityLevel priority_level(const SubgameMask& g);

VertexSet alive_set(const SubgameMask& g);
VertexSet alive_owned(const SubgameMask& g, Player p);
VertexSet alive_intersection(const SubgameMask& g, const VertexSet& s);

}  // namespace pgcomp
