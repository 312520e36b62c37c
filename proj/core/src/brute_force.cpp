#include <cstdint>
#include <vector>

#include "pgcomp/baseline.hpp"
#include "pgcomp/errors.hpp"

namespace pgcomp {

namespace {

// Outcome of the unique play of a fixed strategy pair from every start,
// as a bitmask of starts won by Even. `next` maps each local index to its
// chosen successor, -1 at dead ends.
std::uint32_t evaluate_plays(const std::vector<int>& next,
                             const std::vector<int>& priority,
                             const std::vector<Player>& owner) {
  const int k = static_cast<int>(next.size());
  // 0 unknown, 1 on current path, 2 even wins, 3 odd wins
  std::vector<std::uint8_t> state(static_cast<size_t>(k), 0);
  std::vector<int> path;
  std::uint32_t even_mask = 0;
  for (int start = 0; start < k; ++start) {
    if (state[static_cast<size_t>(start)] >= 2) {
      if (state[static_cast<size_t>(start)] == 2) even_mask |= 1u << start;
      continue;
    }
    path.clear();
    int v = start;
    Player winner;
    while (true) {
      if (v < 0) {
        // previous path vertex is a dead end; its owner is stuck
        winner = opponent(owner[static_cast<size_t>(path.back())]);
        break;
      }
      const std::uint8_t s = state[static_cast<size_t>(v)];
      if (s == 1) {
        // closed a cycle: the maximum priority on it decides
        int best = -1;
        for (size_t j = path.size(); j-- > 0;) {
          best = std::max(best, priority[static_cast<size_t>(path[j])]);
          if (path[j] == v) break;
        }
        winner = parity_owner(best);
        break;
      }
      if (s >= 2) {
        winner = s == 2 ? Player::Even : Player::Odd;
        break;
      }
      state[static_cast<size_t>(v)] = 1;
      path.push_back(v);
      v = next[static_cast<size_t>(v)];
    }
    const std::uint8_t code = winner == Player::Even ? 2 : 3;
    for (int u : path) state[static_cast<size_t>(u)] = code;
    if (winner == Player::Even) even_mask |= 1u << start;
  }
  return even_mask;
}

}  // namespace

Regions solve_brute_force(const SubgameMask& g, int cap) {
  const int k = g.alive_count();
  if (k > cap)
    throw SizeError("brute force: " + std::to_string(k) +
                    " vertices exceed the cap of " + std::to_string(cap));
  if (k > 25)
    throw SizeError("brute force caps out at 25 vertices");

  const Arena& a = g.arena();
  Regions out(g.universe());
  if (k == 0) return out;

  const std::vector<int> verts = g.alive_vertices();
  std::vector<int> priority(static_cast<size_t>(k));
  std::vector<Player> owner(static_cast<size_t>(k));
  std::vector<std::vector<int>> succ(static_cast<size_t>(k));
  std::vector<int> local(static_cast<size_t>(g.universe()), -1);
  for (int i = 0; i < k; ++i) local[static_cast<size_t>(verts[i])] = i;
  for (int i = 0; i < k; ++i) {
    priority[static_cast<size_t>(i)] = a.priority(verts[static_cast<size_t>(i)]);
    owner[static_cast<size_t>(i)] = a.owner(verts[static_cast<size_t>(i)]);
    for (int w : a.successors(verts[static_cast<size_t>(i)]))
      if (g.alive(w)) succ[static_cast<size_t>(i)].push_back(local[static_cast<size_t>(w)]);
  }

  // Decision points: owned vertices with at least one move.
  std::vector<int> even_vars, odd_vars;
  std::uint64_t even_count = 1, odd_count = 1;
  for (int i = 0; i < k; ++i) {
    if (succ[static_cast<size_t>(i)].empty()) continue;
    if (owner[static_cast<size_t>(i)] == Player::Even) {
      even_vars.push_back(i);
      even_count *= succ[static_cast<size_t>(i)].size();
    } else {
      odd_vars.push_back(i);
      odd_count *= succ[static_cast<size_t>(i)].size();
    }
    if (even_count > (1u << 28) || odd_count > (1u << 28) ||
        even_count * odd_count > (1u << 28))
      throw SizeError("brute force: strategy space too large");
  }

  std::vector<int> next(static_cast<size_t>(k), -1);
  std::vector<int> even_pos(even_vars.size(), 0);
  std::vector<int> odd_pos(odd_vars.size(), 0);
  auto apply = [&](const std::vector<int>& vars, const std::vector<int>& pos) {
    for (size_t j = 0; j < vars.size(); ++j)
      next[static_cast<size_t>(vars[j])] =
          succ[static_cast<size_t>(vars[j])][static_cast<size_t>(pos[j])];
  };
  auto advance = [&](const std::vector<int>& vars, std::vector<int>& pos) {
    for (size_t j = 0; j < vars.size(); ++j) {
      if (++pos[j] < static_cast<int>(succ[static_cast<size_t>(vars[j])].size()))
        return true;
      pos[j] = 0;
    }
    return false;
  };

  const std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  std::uint32_t even_wins = 0;  // exists an Even strategy beating all Odd ones
  // per Odd strategy: starts where it beats every Even strategy
  std::vector<std::uint32_t> odd_beats(static_cast<size_t>(odd_count), full);

  bool more_even = true;
  while (more_even) {
    apply(even_vars, even_pos);
    std::uint32_t all_odd = full;
    std::fill(odd_pos.begin(), odd_pos.end(), 0);
    std::uint64_t odd_index = 0;
    bool more_odd = true;
    while (more_odd) {
      apply(odd_vars, odd_pos);
      const std::uint32_t w = evaluate_plays(next, priority, owner);
      all_odd &= w;
      odd_beats[static_cast<size_t>(odd_index)] &= ~w;
      ++odd_index;
      more_odd = advance(odd_vars, odd_pos);
    }
    even_wins |= all_odd;
    more_even = advance(even_vars, even_pos);
  }

  std::uint32_t odd_wins = 0;
  for (std::uint32_t m : odd_beats) odd_wins |= m;

  // Positional determinacy: the two quantifier orders must tile the board.
  if ((even_wins & odd_wins) != 0 || (even_wins | odd_wins) != full)
    throw ContractViolation("brute force: quantifier orders disagree");

  for (int i = 0; i < k; ++i)
    out.assign(verts[static_cast<size_t>(i)],
               (even_wins >> i) & 1 ? Player::Even : Player::Odd);
  return out;
}

}  // namespace pgcomp
