#include "mrr/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mrr/errors.hpp"

namespace mrr {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Index x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidInput("permutation image table is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Index>>& cycles) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Index x = cycle[i];
      if (x >= n || used[x]) {
        throw InvalidInput("cycles are not disjoint or index out of range");
      }
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& [len, count] : cycle_length_profile(*this)) {
    (void)count;
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  }
  return result;
}

std::string Permutation::cycle_notation() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (Index start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Index x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DomainMismatch("compose: permutations act on domains of size " +
                         std::to_string(p.size()) + " and " +
                         std::to_string(q.size()));
  }
  std::vector<Index> images(p.size());
  for (Index i = 0; i < p.size(); ++i) images[i] = q(p(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Index> images(p.size());
  for (Index i = 0; i < p.size(); ++i) images[p(i)] = i;
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result = Permutation::identity(p.size());
  Permutation base = p;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

std::map<std::size_t, std::size_t> cycle_length_profile(const Permutation& p) {
  std::map<std::size_t, std::size_t> profile;
  std::vector<bool> seen(p.size(), false);
  for (Index start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Index x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    ++profile[len];
  }
  return profile;
}

// --- CyclicOrdering ---------------------------------------------------------

CyclicOrdering CyclicOrdering::from_cycle(std::vector<Index> cycle) {
  if (cycle.empty()) throw InvalidInput("cyclic ordering of an empty set");
  std::map<Index, Index> successor;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!successor.emplace(cycle[i], cycle[(i + 1) % cycle.size()]).second) {
      throw InvalidInput("cyclic ordering lists an element twice");
    }
  }
  return from_successor(successor);
}

CyclicOrdering CyclicOrdering::from_successor(const std::map<Index, Index>& successor) {
  std::vector<Index> support;
  support.reserve(successor.size());
  for (const auto& [x, y] : successor) support.push_back(x);
  if (!is_cyclic_ordering(successor, support)) {
    throw InvalidInput("successor map is not a single cycle on its support");
  }
  CyclicOrdering c;
  c.support_ = std::move(support);
  c.successor_.reserve(successor.size());
  for (const auto& [x, y] : successor) c.successor_.push_back(y);
  return c;
}

Index CyclicOrdering::successor(Index x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x);
  if (it == support_.end() || *it != x) {
    throw InvalidInput("element " + std::to_string(x) + " is not in the support");
  }
  return successor_[static_cast<std::size_t>(it - support_.begin())];
}

std::vector<Index> CyclicOrdering::cycle() const {
  std::vector<Index> out;
  if (support_.empty()) return out;
  out.reserve(support_.size());
  Index x = support_.front();
  do {
    out.push_back(x);
    x = successor(x);
  } while (x != support_.front());
  return out;
}

Permutation CyclicOrdering::local_permutation() const {
  std::vector<Index> images(support_.size());
  for (std::size_t i = 0; i < support_.size(); ++i) {
    auto it = std::lower_bound(support_.begin(), support_.end(), successor_[i]);
    images[i] = static_cast<Index>(it - support_.begin());
  }
  return Permutation(std::move(images));
}

bool is_cyclic_ordering(const std::map<Index, Index>& successor,
                        std::span<const Index> support) {
  std::set<Index> points(support.begin(), support.end());
  if (points.size() != support.size()) {
    throw InvalidInput("support lists an element twice");
  }
  if (successor.size() != points.size()) {
    throw InvalidInput("successor map is not defined exactly on the support");
  }
  for (const auto& [x, y] : successor) {
    if (!points.contains(x) || !points.contains(y)) {
      throw InvalidInput("successor map is not closed on the support");
    }
  }
  if (points.empty()) return false;
  if (points.size() == 1) return true;  // singleton convention: identity

  // Walk from one point; a single cycle visits every point before returning.
  const Index start = *points.begin();
  std::size_t steps = 0;
  Index x = start;
  do {
    x = successor.at(x);
    ++steps;
  } while (x != start && steps <= points.size());
  return x == start && steps == points.size();
}

std::vector<Permutation> power_group(const CyclicOrdering& c) {
  std::vector<Permutation> powers;
  const Permutation gen = c.local_permutation();
  Permutation current = Permutation::identity(c.size());
  for (std::size_t k = 0; k < std::max<std::size_t>(c.size(), 1); ++k) {
    powers.push_back(current);
    current = compose(current, gen);
  }
  return powers;
}

}  // namespace mrr
