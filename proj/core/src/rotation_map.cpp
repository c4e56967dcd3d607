#include "mrr/rotation_map.hpp"

#include <algorithm>
#include <map>

#include "mrr/errors.hpp"

namespace mrr {

RotationMap RotationMap::from_rotations(const std::vector<std::vector<Index>>& rotations) {
  const std::size_t n = rotations.size();
  if (n == 0) throw InvalidInput("a map needs at least one vertex");

  RotationMap m;
  m.offsets_.assign(n + 1, 0);
  for (Index v = 0; v < n; ++v) {
    const auto& list = rotations[v];
    std::vector<Index> sorted(list);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("vertex " + std::to_string(v) + " lists a neighbour twice");
    }
    for (Index u : list) {
      if (u >= n) throw InvalidInput("neighbour index out of range");
      if (u == v) throw InvalidInput("loop at vertex " + std::to_string(v));
    }
    m.offsets_[v + 1] = m.offsets_[v] + list.size();
    m.heads_.insert(m.heads_.end(), list.begin(), list.end());
  }

  m.back_.assign(m.heads_.size(), 0);
  for (Index v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < m.degree(v); ++i) {
      const Index u = m.neighbor(v, i);
      const std::size_t j = m.position_of(u, v);
      if (j == m.degree(u)) {
        throw InvalidInput("adjacency is not symmetric: " + std::to_string(v) + " -> " +
                           std::to_string(u));
      }
      m.back_[m.offsets_[v] + i] = j;
    }
  }

  std::vector<bool> seen(n, false);
  std::vector<Index> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (Index u : m.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) throw InvalidInput("underlying graph is not connected");
  return m;
}

std::size_t RotationMap::position_of(Index v, Index u) const {
  const auto list = neighbors(v);
  const auto it = std::find(list.begin(), list.end(), u);
  return static_cast<std::size_t>(it - list.begin());
}

Index RotationMap::rotate(Index v, Index u) const {
  const std::size_t i = position_of(v, u);
  if (i == degree(v)) {
    throw InvalidInput(std::to_string(u) + " is not a neighbour of " + std::to_string(v));
  }
  return neighbor(v, (i + 1) % degree(v));
}

CyclicOrdering RotationMap::rotation_at(Index v) const {
  const auto list = neighbors(v);
  return CyclicOrdering::from_cycle({list.begin(), list.end()});
}

std::vector<std::vector<Index>> RotationMap::adjacency() const {
  std::vector<std::vector<Index>> adj(vertex_count());
  for (Index v = 0; v < vertex_count(); ++v) {
    adj[v].assign(neighbors(v).begin(), neighbors(v).end());
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

}  // namespace mrr
