#pragma once

#include <cstdint>
#include <vector>

#include "pgcomp/arena.hpp"
#include "pgcomp/vertex_set.hpp"

namespace pgcomp {

/// Winning regions over an arena's vertex universe, plus an optional
/// positional strategy. A solver assigns a winner to every vertex alive in
/// the view it solved; vertices outside that view stay unassigned. Strategy
/// entries are only meaningful on vertices owned by their winner.
class Regions {
 public:
  Regions() = default;
  explicit Regions(int universe)
      : winner_(static_cast<size_t>(universe), -1),
        strategy_(static_cast<size_t>(universe), -1) {}

  int universe() const { return static_cast<int>(winner_.size()); }

  bool covered(int v) const { return winner_[static_cast<size_t>(v)] >= 0; }

  Player winner(int v) const {
    return static_cast<Player>(winner_[static_cast<size_t>(v)]);
  }

  void assign(int v, Player p) {
    auto& slot = winner_[static_cast<size_t>(v)];
    if (slot >= 0) --count_[slot];
    slot = static_cast<std::int8_t>(p);
    ++count_[slot];
  }

  int count(Player p) const { return count_[player_index(p)]; }

  int strategy(int v) const { return strategy_[static_cast<size_t>(v)]; }
  void set_strategy(int v, int succ) { strategy_[static_cast<size_t>(v)] = succ; }
  bool has_strategy(int v) const { return strategy_[static_cast<size_t>(v)] >= 0; }

  VertexSet region(Player p) const {
    VertexSet s(universe());
    for (int v = 0; v < universe(); ++v)
      if (covered(v) && winner(v) == p) s.insert(v);
    return s;
  }

  /// Copies every assignment (and strategy entry) of `other` into this.
  void absorb(const Regions& other) {
    for (int v = 0; v < universe(); ++v) {
      if (other.covered(v)) {
        assign(v, other.winner(v));
        if (other.has_strategy(v)) set_strategy(v, other.strategy(v));
      }
    }
  }

 private:
  std::vector<std::int8_t> winner_;
  std::vector<int> strategy_;
  int count_[2] = {0, 0};
};

/// True when both cover the same vertices with the same winners
/// (strategies are not compared).
inline bool same_winners(const Regions& a, const Regions& b) {
  if (a.universe() != b.universe()) return false;
  for (int v = 0; v < a.universe(); ++v) {
    if (a.covered(v) != b.covered(v)) return false;
    if (a.covered(v) && a.winner(v) != b.winner(v)) return false;
  }
  return true;
}

}  // namespace pgcomp
