#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mrr/errors.hpp"
#include "mrr/group.hpp"
#include "mrr/perm.hpp"
#include "mrr/rotation_map.hpp"

namespace mrr {

using BigInt = boost::multiprecision::cpp_int;

/// Why a candidate connection set was rejected.
class ConnectionSetError : public ValidationError {
 public:
  enum class Kind { ContainsIdentity, NotInverseClosed, NotGenerating, OutOfRange };

  ConnectionSetError(Kind kind, const std::string& what)
      : ValidationError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// An inverse-closed generating set of non-identity elements.
class ConnectionSet {
 public:
  ConnectionSet() = default;

  const GroupPtr& group() const { return group_; }
  /// Sorted ascending.
  std::span<const Index> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Index x) const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  friend ConnectionSet make_connection_set(GroupPtr, std::vector<Index>);
  GroupPtr group_;
  std::vector<Index> elements_;
};

/// Throws ConnectionSetError (one Kind per failed condition).
ConnectionSet make_connection_set(GroupPtr group, std::vector<Index> elements);

/// A labelled Cayley map (R, S, r). Two maps are equal iff they share the
/// group and have the same S and the same cyclic ordering.
class CayleyMap {
 public:
  /// Throws InvalidInput unless the ordering's support is exactly S.
  CayleyMap(ConnectionSet connection_set, CyclicOrdering ordering);

  const FiniteGroup& group() const { return *connection_set_.group(); }
  const GroupPtr& group_ptr() const { return connection_set_.group(); }
  const ConnectionSet& connection_set() const { return connection_set_; }
  const CyclicOrdering& ordering() const { return ordering_; }

  /// S in rotation order starting at min S.
  std::vector<Index> cycle() const { return ordering_.cycle(); }

  friend bool operator==(const CayleyMap&, const CayleyMap&) = default;

 private:
  ConnectionSet connection_set_;
  CyclicOrdering ordering_;
};

/// Neighbour lists (sorted) of Cay(R, S): x ~ y iff y*x^-1 in S, so the
/// neighbours of x are s*x for s in S.
std::vector<std::vector<Index>> cayley_graph(const ConnectionSet& s);

/// The Cayley map as a RotationMap. With neighbours S*g the rotation at g is
/// rho_g(x) = r(x*g^-1)*g, so rho_e = r and every right translation
/// x -> x*g is a map automorphism.
RotationMap build_cayley_map(const CayleyMap& m);

/// Every connection set of the group, ordered by size and then
/// lexicographically on the sorted element lists. Requires order >= 2 and at
/// most 32 inverse classes (throws BudgetExceeded otherwise).
std::vector<ConnectionSet> enumerate_connection_sets(const GroupPtr& group);

/// Cyclic orderings of S, anchored at min S with the rest in lexicographic
/// permutation order. Exactly (|S|-1)! results.
std::vector<CyclicOrdering> enumerate_cyclic_orderings(const ConnectionSet& s);

/// Visits the cyclic orderings of `elements` (sorted) with ranks in
/// [first, last) in the same order as enumerate_cyclic_orderings. The
/// callback receives the cycle starting at the anchor.
void for_each_cyclic_ordering(std::span<const Index> elements, std::uint64_t first,
                              std::uint64_t last,
                              const std::function<void(std::span<const Index>)>& visit);

/// The cycle with the given rank among the (|S|-1)! anchored orderings.
std::vector<Index> unrank_cyclic_ordering(std::span<const Index> elements, std::uint64_t rank);

/// Sum over connection sets S of (|S|-1)!.
BigInt count_labelled_maps(const GroupPtr& group);

BigInt factorial(std::size_t n);

}  // namespace mrr
