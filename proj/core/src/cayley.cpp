#include "mrr/cayley.hpp"

#include <algorithm>
#include <numeric>

namespace mrr {

bool ConnectionSet::contains(Index x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

ConnectionSet make_connection_set(GroupPtr group, std::vector<Index> elements) {
  using Kind = ConnectionSetError::Kind;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Index x : elements) {
    if (x >= group->order()) {
      throw ConnectionSetError(Kind::OutOfRange,
                               "element " + std::to_string(x) + " is out of range");
    }
  }
  if (std::binary_search(elements.begin(), elements.end(), group->identity())) {
    throw ConnectionSetError(Kind::ContainsIdentity, "connection set contains the identity");
  }
  for (Index x : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), group->inv(x))) {
      throw ConnectionSetError(Kind::NotInverseClosed,
                               "connection set is not inverse-closed: missing inverse of " +
                                   group->name(x));
    }
  }
  if (!generates(*group, elements)) {
    throw ConnectionSetError(Kind::NotGenerating, "connection set does not generate the group");
  }
  ConnectionSet s;
  s.group_ = std::move(group);
  s.elements_ = std::move(elements);
  return s;
}

CayleyMap::CayleyMap(ConnectionSet connection_set, CyclicOrdering ordering)
    : connection_set_(std::move(connection_set)), ordering_(std::move(ordering)) {
  const auto a = connection_set_.elements();
  const auto b = ordering_.support();
  if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) {
    throw InvalidInput("cyclic ordering support differs from the connection set");
  }
}

std::vector<std::vector<Index>> cayley_graph(const ConnectionSet& s) {
  const FiniteGroup& g = *s.group();
  std::vector<std::vector<Index>> adj(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    for (Index e : s.elements()) adj[x].push_back(g.mult(e, x));
    std::sort(adj[x].begin(), adj[x].end());
  }
  return adj;
}

RotationMap build_cayley_map(const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  const std::vector<Index> cycle = m.cycle();
  std::vector<std::vector<Index>> rotations(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    rotations[x].reserve(cycle.size());
    for (Index s : cycle) rotations[x].push_back(g.mult(s, x));
  }
  return RotationMap::from_rotations(rotations);
}

std::vector<ConnectionSet> enumerate_connection_sets(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  const InverseClassPartition classes = inverse_class_partition(g);
  const std::size_t k = classes.class_count();
  if (k > 32) {
    throw BudgetExceeded("too many inverse classes (" + std::to_string(k) +
                         ") to enumerate connection sets");
  }

  std::vector<std::vector<Index>> class_members;
  for (Index x : classes.involutions) class_members.push_back({x});
  for (auto [x, y] : classes.pairs) class_members.push_back({x, y});

  std::vector<std::vector<Index>> candidates;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Index> elements;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask >> c & 1) {
        elements.insert(elements.end(), class_members[c].begin(), class_members[c].end());
      }
    }
    std::sort(elements.begin(), elements.end());
    if (generates(g, elements)) candidates.push_back(std::move(elements));
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<ConnectionSet> out;
  out.reserve(candidates.size());
  for (auto& c : candidates) out.push_back(make_connection_set(group, std::move(c)));
  return out;
}

std::vector<Index> unrank_cyclic_ordering(std::span<const Index> elements, std::uint64_t rank) {
  // Factorial number system over the non-anchor elements.
  std::vector<Index> rest(elements.begin() + 1, elements.end());
  std::vector<Index> cycle{elements.front()};
  std::uint64_t block = 1;
  for (std::size_t i = 2; i < rest.size(); ++i) block *= i;
  while (!rest.empty()) {
    const std::uint64_t digit = rank / block;
    rank %= block;
    cycle.push_back(rest[digit]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(digit));
    if (rest.size() > 1) block /= rest.size();
  }
  return cycle;
}

void for_each_cyclic_ordering(std::span<const Index> elements, std::uint64_t first,
                              std::uint64_t last,
                              const std::function<void(std::span<const Index>)>& visit) {
  if (elements.empty() || first >= last) return;
  std::vector<Index> cycle = unrank_cyclic_ordering(elements, first);
  for (std::uint64_t rank = first; rank < last; ++rank) {
    visit(cycle);
    std::next_permutation(cycle.begin() + 1, cycle.end());
  }
}

std::vector<CyclicOrdering> enumerate_cyclic_orderings(const ConnectionSet& s) {
  std::vector<CyclicOrdering> out;
  const std::uint64_t count = factorial(s.size() - 1).convert_to<std::uint64_t>();
  out.reserve(count);
  for_each_cyclic_ordering(s.elements(), 0, count, [&](std::span<const Index> cycle) {
    out.push_back(CyclicOrdering::from_cycle({cycle.begin(), cycle.end()}));
  });
  return out;
}

BigInt count_labelled_maps(const GroupPtr& group) {
  BigInt total = 0;
  for (const ConnectionSet& s : enumerate_connection_sets(group)) total += factorial(s.size() - 1);
  return total;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace mrr
