#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mrr {

/// Element and vertex indices. Groups are capped well below 2^32 elements.
using Index = std::uint32_t;

/// A bijection of {0,...,n-1}, stored as its image table.
///
/// Permutations act on the right: compose(p, q) applies p first, then q,
/// so that x^(pq) = (x^p)^q.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidInput unless `images` is a bijection of {0,...,n-1}.
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t n);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Index>>& cycles);

  std::size_t size() const { return images_.size(); }
  Index operator()(Index i) const { return images_[i]; }
  std::span<const Index> images() const { return images_; }

  bool is_identity() const;

  /// Least m >= 1 with p^m = id (the lcm of the cycle lengths).
  std::uint64_t order() const;

  /// Disjoint-cycle notation with fixed points omitted; "()" for identity.
  std::string cycle_notation() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

/// i -> q(p(i)). Throws DomainMismatch when the sizes differ.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// p^k for k >= 0.
Permutation power(const Permutation& p, std::uint64_t k);

/// Cycle length l -> number of cycles n_l. Fixed points are reported as n_1.
std::map<std::size_t, std::size_t> cycle_length_profile(const Permutation& p);

/// A cyclic ordering of a finite set of indices: a successor map that is a
/// single cycle through the whole support. On a one-point support the
/// identity is admitted as the unique cyclic ordering.
class CyclicOrdering {
 public:
  CyclicOrdering() = default;

  /// `cycle` lists the support in cyclic order: cycle[i] -> cycle[i+1] and
  /// the last element wraps to the first. Throws InvalidInput on repeats or
  /// an empty cycle.
  static CyclicOrdering from_cycle(std::vector<Index> cycle);

  /// Throws InvalidInput unless `successor` is a single cycle on its keys.
  static CyclicOrdering from_successor(const std::map<Index, Index>& successor);

  /// Sorted support.
  std::span<const Index> support() const { return support_; }
  std::size_t size() const { return support_.size(); }

  /// Throws InvalidInput when x is outside the support.
  Index successor(Index x) const;

  /// The cycle written from the minimum element of the support.
  std::vector<Index> cycle() const;

  /// The successor as a permutation of local positions 0..k-1 (positions in
  /// the sorted support).
  Permutation local_permutation() const;

  friend bool operator==(const CyclicOrdering&, const CyclicOrdering&) = default;

 private:
  std::vector<Index> support_;    // sorted
  std::vector<Index> successor_;  // successor_[i] = successor of support_[i]
};

/// True iff `successor` is a valid cyclic ordering of `support` (singleton
/// identity included). Throws InvalidInput when the map is not defined
/// exactly on the support or does not map into it.
bool is_cyclic_ordering(const std::map<Index, Index>& successor,
                        std::span<const Index> support);

/// The powers 1, c, ..., c^(k-1) of a cyclic ordering c on k points, as
/// permutations of local positions. This set is the centralizer of c in the
/// symmetric group on the support.
std::vector<Permutation> power_group(const CyclicOrdering& c);

}  // namespace mrr
