#include "pgcomp/arena.hpp"

#include <algorithm>

namespace pgcomp {

bool Arena::has_arc(int from, int to) const {
  auto row = successors(from);
  return std::binary_search(row.begin(), row.end(), to);
}

int Arena::max_priority() const {
  int best = -1;
  for (int p : priority_) best = std::max(best, p);
  return best;
}

ArenaBuilder::ArenaBuilder(int reserve_vertices) {
  owner_.reserve(static_cast<size_t>(reserve_vertices));
  priority_.reserve(static_cast<size_t>(reserve_vertices));
  name_.reserve(static_cast<size_t>(reserve_vertices));
}

int ArenaBuilder::add_vertex(Player owner, int priority, std::string name) {
  if (priority < 0)
    throw InputError("vertex priority must be non-negative, got " +
                     std::to_string(priority));
  owner_.push_back(owner);
  priority_.push_back(priority);
  name_.push_back(std::move(name));
  return static_cast<int>(owner_.size()) - 1;
}

ArenaBuilder& ArenaBuilder::add_arc(int from, int to) {
  arcs_.emplace_back(from, to);
  return *this;
}

Arena ArenaBuilder::build() {
  const int n = vertex_count();
  for (auto [from, to] : arcs_) {
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw InputError("arc (" + std::to_string(from) + ", " +
                       std::to_string(to) + ") out of range for " +
                       std::to_string(n) + " vertices");
  }

  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  Arena a;
  a.owner_ = std::move(owner_);
  a.priority_ = std::move(priority_);
  a.name_ = std::move(name_);

  a.succ_off_.assign(static_cast<size_t>(n) + 1, 0);
  a.pred_off_.assign(static_cast<size_t>(n) + 1, 0);
  for (auto [from, to] : arcs_) {
    ++a.succ_off_[static_cast<size_t>(from) + 1];
    ++a.pred_off_[static_cast<size_t>(to) + 1];
  }
  for (int v = 0; v < n; ++v) {
    a.succ_off_[static_cast<size_t>(v) + 1] += a.succ_off_[static_cast<size_t>(v)];
    a.pred_off_[static_cast<size_t>(v) + 1] += a.pred_off_[static_cast<size_t>(v)];
  }

  a.succ_.resize(arcs_.size());
  a.pred_.resize(arcs_.size());
  std::vector<std::uint32_t> succ_fill(a.succ_off_.begin(), a.succ_off_.end() - 1);
  std::vector<std::uint32_t> pred_fill(a.pred_off_.begin(), a.pred_off_.end() - 1);
  // arcs_ is sorted by (from, to), so successor rows come out ascending;
  // predecessor rows are ascending as well since we scan sources in order.
  for (auto [from, to] : arcs_) {
    a.succ_[succ_fill[static_cast<size_t>(from)]++] = to;
    a.pred_[pred_fill[static_cast<size_t>(to)]++] = from;
  }
  return a;
}

}  // namespace pgcomp
