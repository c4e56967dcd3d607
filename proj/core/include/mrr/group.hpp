#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mrr/perm.hpp"

namespace mrr {

/// A finite group given by its multiplication table. Immutable once built;
/// every instance has passed table validation.
class FiniteGroup {
 public:
  /// Largest order for which associativity is checked exhaustively (O(r^3)).
  static constexpr std::size_t kAssociativityCheckLimit = 256;

  /// Validates and builds a group. `table[a][b]` is the index of a*b.
  /// Throws ValidationError naming the offending elements on failure.
  static FiniteGroup from_multiplication_table(std::vector<std::vector<Index>> table,
                                               std::vector<std::string> names,
                                               std::string label = {});

  std::size_t order() const { return order_; }
  Index identity() const { return identity_; }
  Index mult(Index a, Index b) const { return table_[a * order_ + b]; }
  Index inv(Index a) const { return inverses_[a]; }
  const std::string& name(Index a) const { return names_[a]; }
  std::span<const std::string> names() const { return names_; }
  std::span<const Index> inverses() const { return inverses_; }
  /// Row-major r*r table.
  std::span<const Index> table() const { return table_; }

  /// Builtin descriptor ("cyclic:4") or a free-form label for file groups.
  const std::string& label() const { return label_; }

  /// False when the order exceeded kAssociativityCheckLimit and the
  /// associativity check was skipped.
  bool associativity_checked() const { return associativity_checked_; }

  std::uint64_t element_order(Index a) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Index identity_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverses_;
  std::vector<std::string> names_;
  std::string label_;
  bool associativity_checked_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Non-identity elements split into inverse classes: involutions {x} and
/// pairs {x, x^-1} with x < x^-1.
struct InverseClassPartition {
  std::vector<Index> involutions;
  std::vector<std::pair<Index, Index>> pairs;

  std::size_t class_count() const { return involutions.size() + pairs.size(); }
};

InverseClassPartition inverse_class_partition(const FiniteGroup& group);

/// True iff the subgroup generated by `elements` is the whole group.
/// Throws InvalidInput if `elements` contains the identity or an
/// out-of-range index.
bool generates(const FiniteGroup& group, std::span<const Index> elements);

/// x -> x*g on element indices.
Permutation right_regular_action(const FiniteGroup& group, Index g);

/// The two groups without a mapical regular representation: Z3 and Z2^2.
/// Detected by order and exponent, which is exact at orders 3 and 4.
bool is_exceptional(const FiniteGroup& group);

// --- builtin catalog -------------------------------------------------------

/// Descriptor of a catalog group.
///
///   cyclic:n        Z_n, n >= 1
///   dihedral:n      D_n of order 2n, n >= 2
///   elem2:k         Z_2^k, 1 <= k <= 8
///   quaternion:8    Q_8
///   sym:n           Sym(n), 1 <= n <= 5
///   product:A,B,... direct product of non-product factors
struct BuiltinSpec {
  enum class Family { Cyclic, Dihedral, Elem2, Quaternion, Symmetric, Product };

  Family family = Family::Cyclic;
  unsigned parameter = 0;
  std::vector<BuiltinSpec> factors;  // Product only

  friend bool operator==(const BuiltinSpec&, const BuiltinSpec&) = default;
};

/// Throws SpecError on unknown families or out-of-range parameters.
BuiltinSpec parse_builtin_spec(std::string_view text);
std::string to_string(const BuiltinSpec& spec);

FiniteGroup builtin(const BuiltinSpec& spec);
FiniteGroup builtin(std::string_view text);

}  // namespace mrr
