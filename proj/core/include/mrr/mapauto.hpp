#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/errors.hpp"
#include "mrr/perm.hpp"
#include "mrr/rotation_map.hpp"

namespace mrr {

/// An oriented edge (tail, head).
struct Dart {
  Index tail = 0;
  Index head = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct MapAutomorphism {
  Permutation vertex_map;

  friend auto operator<=>(const MapAutomorphism&, const MapAutomorphism&) = default;
};

/// Anything exposing a rotation system in the dart-indexed layout of
/// RotationMap: neighbour(v, i) is the i-th neighbour in rotation order,
/// back_index(v, i) the position of v around neighbour(v, i), and
/// position_of(v, u) the position of u around v (degree(v) if absent).
template <class M>
concept RotationSystem = requires(const M& m, Index v, std::size_t i) {
  { m.vertex_count() } -> std::convertible_to<std::size_t>;
  { m.degree(v) } -> std::convertible_to<std::size_t>;
  { m.neighbor(v, i) } -> std::convertible_to<Index>;
  { m.back_index(v, i) } -> std::convertible_to<std::size_t>;
  { m.position_of(v, v) } -> std::convertible_to<std::size_t>;
};

/// The rotation system of CM(R, S, r) computed on demand from the group
/// table, without materialising a RotationMap. Vertex g has neighbours
/// cycle[i]*g in rotation order.
class CayleyRotationView {
 public:
  /// `cycle` is S in rotation order; it must outlive the view.
  CayleyRotationView(const FiniteGroup& group, std::span<const Index> cycle);

  std::size_t vertex_count() const { return group_->order(); }
  std::size_t degree(Index) const { return cycle_.size(); }
  Index neighbor(Index v, std::size_t i) const { return group_->mult(cycle_[i], v); }
  std::size_t back_index(Index, std::size_t i) const { return back_[i]; }
  std::size_t position_of(Index v, Index u) const {
    return position_[group_->mult(u, group_->inv(v))];
  }

 private:
  const FiniteGroup* group_;
  std::span<const Index> cycle_;
  std::vector<std::size_t> back_;      // position of cycle[i]^-1 in the cycle
  std::vector<std::size_t> position_;  // element -> position in cycle, or |S|
};

/// Extends dart maps to map automorphisms by propagating rotation offsets
/// over the graph. Holds scratch buffers so repeated calls do not allocate.
class DartExtender {
 public:
  /// Returns the image table of the unique orientation-preserving map
  /// automorphism sending `base` to `image`, or nullopt if none exists.
  /// The returned span aliases internal storage and is valid until the next
  /// call. Preconditions (connected map, valid darts) are not checked here.
  template <RotationSystem M>
  std::optional<std::span<const Index>> extend(const M& m, Index base_tail, std::size_t base_pos,
                                               Index image_tail, std::size_t image_pos);

 private:
  static constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> image_;
  std::vector<std::size_t> offset_;
  std::vector<bool> used_;
  std::vector<Index> queue_;
};

/// Checks the map-automorphism condition directly: `phi` preserves
/// adjacency and rho_{phi(v)}(phi(u)) = phi(rho_v(u)) for every dart (v, u).
bool is_map_automorphism(const RotationMap& m, const Permutation& phi);

/// The automorphism sending `base` to `image`, if any. Throws InvalidInput
/// when either dart is not a dart of `m`.
std::optional<MapAutomorphism> extend_dart_map(const RotationMap& m, Dart base, Dart image);

/// All automorphisms, sorted. Every one is found by extending the dart
/// (0, neighbour(0, 0)) to each dart of the map. Requires at least one edge.
std::vector<MapAutomorphism> full_aut_group(const RotationMap& m);

/// Ground truth for small maps: filters all n! vertex permutations with
/// is_map_automorphism. Throws InvalidInput when n > 8. Sorted.
std::vector<MapAutomorphism> brute_force_aut(const RotationMap& m);

struct StabilizerResult {
  /// Order of the stabilizer of the identity vertex.
  std::size_t order = 1;
  /// Least k > 0 such that some stabilizer element restricts to r^k on S;
  /// 0 when the stabilizer is trivial.
  std::size_t generator_exponent = 0;
  /// Stabilizer elements in increasing exponent order; elements[0] is the
  /// identity.
  std::vector<MapAutomorphism> elements;
  /// Exponents k (0 <= k < |S|) whose dart map (e, s0) -> (e, r^k(s0))
  /// extends, s0 = min S.
  std::vector<std::size_t> exponents;
};

/// Vertex stabilizer of the identity. Every stabilizer element restricts to
/// a power of r on S, so only the |S| dart images (e, r^k(s0)) are tried.
StabilizerResult stabilizer_of_identity(const CayleyMap& m);

/// Trivial stabilizer test. Exploits that the successful exponents form a
/// subgroup of Z_|S|: it is nontrivial iff some k = |S|/p extends for a
/// prime p dividing |S|.
bool is_mrr(const CayleyMap& m);

/// Reusable MRR test over raw cycles of one group, for enumeration kernels.
class MrrKernel {
 public:
  explicit MrrKernel(const FiniteGroup& group) : group_(&group) {}

  /// `cycle` is S in rotation order starting at its anchor.
  bool is_mrr(std::span<const Index> cycle);

 private:
  const FiniteGroup* group_;
  DartExtender extender_;
  std::size_t cached_size_ = 0;
  std::vector<std::size_t> probe_exponents_;
};

// --- implementation --------------------------------------------------------

template <RotationSystem M>
std::optional<std::span<const Index>> DartExtender::extend(const M& m, Index base_tail,
                                                           std::size_t base_pos, Index image_tail,
                                                           std::size_t image_pos) {
  const std::size_t n = m.vertex_count();
  image_.assign(n, kUnset);
  offset_.assign(n, 0);
  used_.assign(n, false);
  queue_.clear();

  const std::size_t d0 = m.degree(base_tail);
  if (m.degree(image_tail) != d0) return std::nullopt;
  image_[base_tail] = image_tail;
  offset_[base_tail] = (image_pos + d0 - base_pos) % d0;
  used_[image_tail] = true;
  queue_.push_back(base_tail);

  // Breadth-first propagation: once v and the offset of its rotation are
  // fixed, neighbour(v, i) must go to neighbour(phi(v), i + offset).
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Index v = queue_[head];
    const Index w = image_[v];
    const std::size_t d = m.degree(v);
    const std::size_t off = offset_[v];
    for (std::size_t i = 0; i < d; ++i) {
      const Index u = m.neighbor(v, i);
      const std::size_t wi = (i + off) % d;
      const Index u_img = m.neighbor(w, wi);
      const std::size_t du = m.degree(u);
      if (m.degree(u_img) != du) return std::nullopt;
      const std::size_t u_off = (m.back_index(w, wi) + du - m.back_index(v, i)) % du;
      if (image_[u] == kUnset) {
        if (used_[u_img]) return std::nullopt;
        image_[u] = u_img;
        offset_[u] = u_off;
        used_[u_img] = true;
        queue_.push_back(u);
      } else if (image_[u] != u_img || offset_[u] != u_off) {
        return std::nullopt;
      }
    }
  }
  if (queue_.size() != n) return std::nullopt;

  // Independent re-check of rho_{phi(v)}(phi(u)) = phi(rho_v(u)) using
  // positions looked up afresh rather than the propagated offsets.
  for (Index v = 0; v < n; ++v) {
    const Index w = image_[v];
    const std::size_t d = m.degree(v);
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t p = m.position_of(w, image_[m.neighbor(v, i)]);
      if (p >= m.degree(w)) return std::nullopt;
      if (m.neighbor(w, (p + 1) % d) != image_[m.neighbor(v, (i + 1) % d)]) {
        return std::nullopt;
      }
    }
  }
  return std::span<const Index>(image_);
}

}  // namespace mrr
