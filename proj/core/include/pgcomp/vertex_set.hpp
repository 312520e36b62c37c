#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pgcomp/errors.hpp"

namespace pgcomp {

/// A set of vertex ids over a fixed universe 0..universe()-1.
/// Membership is O(1); iteration order is ascending.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<size_t>(universe), 0) {}

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int v) const {
    return v >= 0 && v < universe() && bits_[static_cast<size_t>(v)] != 0;
  }

  void insert(int v) {
    check_range(v);
    if (!bits_[static_cast<size_t>(v)]) {
      bits_[static_cast<size_t>(v)] = 1;
      ++count_;
    }
  }

  void erase(int v) {
    check_range(v);
    if (bits_[static_cast<size_t>(v)]) {
      bits_[static_cast<size_t>(v)] = 0;
      --count_;
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count_));
    for (int v = 0; v < universe(); ++v)
      if (bits_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (int v = 0; v < universe(); ++v)
      if (bits_[static_cast<size_t>(v)] && !other.contains(v)) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (int v = 0; v < universe(); ++v)
      if (bits_[static_cast<size_t>(v)] && other.contains(v)) return true;
    return false;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  void check_range(int v) const {
    if (v < 0 || v >= universe())
      throw InputError("vertex id " + std::to_string(v) +
                       " out of range for universe of size " +
                       std::to_string(universe()));
  }

  std::vector<std::uint8_t> bits_;
  int count_ = 0;
};

}  // namespace pgcomp
