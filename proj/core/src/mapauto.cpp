#include "mrr/mapauto.hpp"

#include <algorithm>
#include <numeric>

namespace mrr {

CayleyRotationView::CayleyRotationView(const FiniteGroup& group, std::span<const Index> cycle)
    : group_(&group), cycle_(cycle) {
  position_.assign(group.order(), cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) position_[cycle[i]] = i;
  back_.resize(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) back_[i] = position_[group.inv(cycle[i])];
}

bool is_map_automorphism(const RotationMap& m, const Permutation& phi) {
  const std::size_t n = m.vertex_count();
  if (phi.size() != n) return false;
  for (Index v = 0; v < n; ++v) {
    const Index w = phi(v);
    if (m.degree(w) != m.degree(v)) return false;
    for (Index u : m.neighbors(v)) {
      if (!m.adjacent(w, phi(u))) return false;
      if (m.rotate(w, phi(u)) != phi(m.rotate(v, u))) return false;
    }
  }
  return true;
}

namespace {

std::size_t dart_position(const RotationMap& m, Dart d) {
  if (d.tail >= m.vertex_count() || d.head >= m.vertex_count()) {
    throw InvalidInput("dart endpoint out of range");
  }
  const std::size_t pos = m.position_of(d.tail, d.head);
  if (pos == m.degree(d.tail)) {
    throw InvalidInput("(" + std::to_string(d.tail) + ", " + std::to_string(d.head) +
                       ") is not a dart of the map");
  }
  return pos;
}

MapAutomorphism to_automorphism(std::span<const Index> images) {
  return MapAutomorphism{Permutation(std::vector<Index>(images.begin(), images.end()))};
}

}  // namespace

std::optional<MapAutomorphism> extend_dart_map(const RotationMap& m, Dart base, Dart image) {
  const std::size_t base_pos = dart_position(m, base);
  const std::size_t image_pos = dart_position(m, image);
  DartExtender extender;
  auto result = extender.extend(m, base.tail, base_pos, image.tail, image_pos);
  if (!result) return std::nullopt;
  return to_automorphism(*result);
}

std::vector<MapAutomorphism> full_aut_group(const RotationMap& m) {
  if (m.edge_count() == 0) throw InvalidInput("map has no edges");
  DartExtender extender;
  std::vector<MapAutomorphism> out;
  for (Index w = 0; w < m.vertex_count(); ++w) {
    for (std::size_t j = 0; j < m.degree(w); ++j) {
      if (auto images = extender.extend(m, 0, 0, w, j)) out.push_back(to_automorphism(*images));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MapAutomorphism> brute_force_aut(const RotationMap& m) {
  const std::size_t n = m.vertex_count();
  if (n > 8) throw InvalidInput("brute_force_aut is limited to 8 vertices");
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  std::vector<MapAutomorphism> out;
  do {
    Permutation phi(images);
    if (is_map_automorphism(m, phi)) out.push_back(MapAutomorphism{std::move(phi)});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

StabilizerResult stabilizer_of_identity(const CayleyMap& m) {
  const FiniteGroup& g = m.group();
  const std::vector<Index> cycle = m.cycle();
  const CayleyRotationView view(g, cycle);
  const Index e = g.identity();
  DartExtender extender;

  StabilizerResult result;
  result.order = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (auto images = extender.extend(view, e, 0, e, k)) {
      result.exponents.push_back(k);
      result.elements.push_back(to_automorphism(*images));
    }
  }
  result.order = result.exponents.size();
  result.generator_exponent = result.order > 1 ? result.exponents[1] : 0;
  return result;
}

bool MrrKernel::is_mrr(std::span<const Index> cycle) {
  const std::size_t d = cycle.size();
  if (d != cached_size_) {
    cached_size_ = d;
    probe_exponents_.clear();
    std::size_t rest = d;
    for (std::size_t p = 2; p * p <= rest; ++p) {
      if (rest % p == 0) {
        probe_exponents_.push_back(d / p);
        while (rest % p == 0) rest /= p;
      }
    }
    if (rest > 1) probe_exponents_.push_back(d / rest);
  }
  if (probe_exponents_.empty()) return true;
  const CayleyRotationView view(*group_, cycle);
  const Index e = group_->identity();
  for (std::size_t k : probe_exponents_) {
    if (extender_.extend(view, e, 0, e, k)) return false;
  }
  return true;
}

bool is_mrr(const CayleyMap& m) {
  const std::vector<Index> cycle = m.cycle();
  MrrKernel kernel(m.group());
  return kernel.is_mrr(cycle);
}

}  // namespace mrr
