#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mrr/perm.hpp"

namespace mrr {

/// A map: a connected simple graph with a rotation at every vertex.
///
/// Storage is dart-indexed (CSR). The neighbours of v are listed in rotation
/// order, so the rotation at v sends neighbour(v, i) to neighbour(v, i + 1)
/// (cyclically). back_index(v, i) is the position of v in the list of
/// neighbour(v, i), which makes the reverse dart an O(1) lookup.
class RotationMap {
 public:
  RotationMap() = default;

  /// `rotations[v]` lists the neighbours of v in cyclic order. Throws
  /// InvalidInput on loops, repeated neighbours, asymmetric adjacency,
  /// out-of-range vertices or a disconnected graph.
  static RotationMap from_rotations(const std::vector<std::vector<Index>>& rotations);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t dart_count() const { return heads_.size(); }
  std::size_t edge_count() const { return heads_.size() / 2; }

  std::size_t degree(Index v) const { return offsets_[v + 1] - offsets_[v]; }
  Index neighbor(Index v, std::size_t i) const { return heads_[offsets_[v] + i]; }
  std::size_t back_index(Index v, std::size_t i) const { return back_[offsets_[v] + i]; }
  std::span<const Index> neighbors(Index v) const {
    return {heads_.data() + offsets_[v], degree(v)};
  }

  /// Position of u in the rotation list of v, or degree(v) if not adjacent.
  std::size_t position_of(Index v, Index u) const;

  bool adjacent(Index v, Index u) const { return position_of(v, u) < degree(v); }

  /// rho_v(u). Throws InvalidInput if u is not a neighbour of v.
  Index rotate(Index v, Index u) const;

  /// The rotation at v as a CyclicOrdering of its neighbourhood.
  CyclicOrdering rotation_at(Index v) const;

  /// Neighbour lists sorted ascending (the underlying graph).
  std::vector<std::vector<Index>> adjacency() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Index> heads_;
  std::vector<std::size_t> back_;
};

}  // namespace mrr
