#pragma once

// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls into the enumeration or automorphism engines it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/group.hpp"
#include "mrr/io.hpp"

namespace mrr::testing {

/// Copies a span so gmock container matchers can inspect it.
template <class T>
std::vector<std::remove_const_t<T>> to_vector(std::span<T> s) {
  return {s.begin(), s.end()};
}

inline GroupPtr group(std::string_view spec) {
  return std::make_shared<const FiniteGroup>(builtin(spec));
}

inline GroupPtr alternating4() {
  return std::make_shared<const FiniteGroup>(
      read_group_file(std::string(MRR_DATA_DIR) + "/groups/alternating4.json"));
}

/// Catalog groups of order at most `max_order` (A4 included at order 12).
inline std::vector<GroupPtr> catalog(std::size_t max_order) {
  static const char* specs[] = {
      "cyclic:2",  "cyclic:3",  "cyclic:4",     "elem2:2",   "cyclic:5",
      "cyclic:6",  "sym:3",     "cyclic:7",     "cyclic:8",  "dihedral:4",
      "quaternion:8", "elem2:3", "product:cyclic:2,cyclic:4", "cyclic:9",
      "product:cyclic:3,cyclic:3", "cyclic:10", "dihedral:5", "cyclic:11",
      "cyclic:12", "dihedral:6", "product:cyclic:2,cyclic:6",
  };
  std::vector<GroupPtr> out;
  for (const char* s : specs) {
    auto g = group(s);
    if (g->order() <= max_order) out.push_back(std::move(g));
  }
  if (max_order >= 12) out.push_back(alternating4());
  return out;
}

/// Every labelled map of the group, built from a brute-force subset scan
/// over R \ {e} (not from the inverse-class enumeration).
inline std::vector<CayleyMap> all_maps_bruteforce(const GroupPtr& g) {
  const FiniteGroup& grp = *g;
  std::vector<Index> others;
  for (Index x = 0; x < grp.order(); ++x) {
    if (x != grp.identity()) others.push_back(x);
  }
  std::vector<CayleyMap> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << others.size()); ++mask) {
    std::vector<Index> s;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) s.push_back(others[i]);
    }
    bool closed = std::all_of(s.begin(), s.end(), [&](Index x) {
      return std::find(s.begin(), s.end(), grp.inv(x)) != s.end();
    });
    if (!closed || !generates(grp, s)) continue;
    const ConnectionSet cs = make_connection_set(g, s);
    std::vector<Index> rest(s.begin() + 1, s.end());
    do {
      std::vector<Index> cycle{s.front()};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      out.emplace_back(cs, CyclicOrdering::from_cycle(cycle));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Index> images(n);
  for (Index i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace mrr::testing
