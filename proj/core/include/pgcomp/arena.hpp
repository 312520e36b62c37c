#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgcomp/errors.hpp"

namespace pgcomp {

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) {
  return p == Player::Even ? Player::Odd : Player::Even;
}

/// The player whose parity the priority favours.
constexpr Player parity_owner(int priority) {
  return priority % 2 == 0 ? Player::Even : Player::Odd;
}

constexpr int player_index(Player p) { return static_cast<int>(p); }

inline const char* player_name(Player p) {
  return p == Player::Even ? "even" : "odd";
}

/// An immutable parity game: per-vertex owner and priority plus arcs over
/// dense vertex ids 0..size()-1. Successor and predecessor lists are stored
/// in compressed rows, sorted ascending, with parallel arcs removed.
/// Self-loops are allowed. An Arena never changes once built and is safe to
/// share across threads.
class Arena {
 public:
  Arena() = default;

  int size() const { return static_cast<int>(owner_.size()); }
  std::uint64_t arc_count() const { return succ_.size(); }

  Player owner(int v) const { return owner_[static_cast<size_t>(v)]; }
  int priority(int v) const { return priority_[static_cast<size_t>(v)]; }
  const std::string& name(int v) const { return name_[static_cast<size_t>(v)]; }

  std::span<const int> successors(int v) const {
    return {succ_.data() + succ_off_[static_cast<size_t>(v)],
            succ_.data() + succ_off_[static_cast<size_t>(v) + 1]};
  }

  std::span<const int> predecessors(int v) const {
    return {pred_.data() + pred_off_[static_cast<size_t>(v)],
            pred_.data() + pred_off_[static_cast<size_t>(v) + 1]};
  }

  int out_degree(int v) const {
    return static_cast<int>(succ_off_[static_cast<size_t>(v) + 1] -
                            succ_off_[static_cast<size_t>(v)]);
  }

  bool has_arc(int from, int to) const;

  /// Largest priority over all vertices; -1 for the empty arena.
  int max_priority() const;

 private:
  friend class ArenaBuilder;

  std::vector<Player> owner_;
  std::vector<int> priority_;
  std::vector<std::string> name_;
  std::vector<int> succ_;
  std::vector<std::uint32_t> succ_off_{0};
  std::vector<int> pred_;
  std::vector<std::uint32_t> pred_off_{0};
};

/// Accumulates vertices and arcs, then freezes them into an Arena.
/// Arcs may reference vertices added later; every endpoint is checked in
/// build(), which also sorts adjacency rows and drops duplicate arcs.
class ArenaBuilder {
 public:
  ArenaBuilder() = default;
  explicit ArenaBuilder(int reserve_vertices);

  /// Returns the id of the new vertex (ids are assigned sequentially).
  int add_vertex(Player owner, int priority, std::string name = {});

  ArenaBuilder& add_arc(int from, int to);

  int vertex_count() const { return static_cast<int>(owner_.size()); }

  Arena build();

 private:
  std::vector<Player> owner_;
  std::vector<int> priority_;
  std::vector<std::string> name_;
  std::vector<std::pair<int, int>> arcs_;
};

}  // namespace pgcomp
