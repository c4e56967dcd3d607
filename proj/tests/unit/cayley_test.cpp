#include "mrr/cayley.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>

#include "mrr/mapauto.hpp"
#include "test_support.hpp"

namespace mrr {
namespace {

using ::testing::ElementsAre;
using testing::group;

std::vector<std::vector<Index>> element_lists(const std::vector<ConnectionSet>& sets) {
  std::vector<std::vector<Index>> out;
  for (const auto& s : sets) out.emplace_back(s.elements().begin(), s.elements().end());
  return out;
}

ConnectionSetError::Kind rejection(const GroupPtr& g, std::vector<Index> elements) {
  try {
    make_connection_set(g, std::move(elements));
  } catch (const ConnectionSetError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected rejection";
  return ConnectionSetError::Kind::OutOfRange;
}

TEST(ConnectionSetTest, Validation) {
  const auto z4 = group("cyclic:4");
  EXPECT_THAT(testing::to_vector(make_connection_set(z4, {3, 1}).elements()), ElementsAre(1, 3));
  EXPECT_EQ(rejection(z4, {1}), ConnectionSetError::Kind::NotInverseClosed);
  EXPECT_EQ(rejection(z4, {2}), ConnectionSetError::Kind::NotGenerating);
  EXPECT_EQ(rejection(z4, {0, 1, 3}), ConnectionSetError::Kind::ContainsIdentity);
  EXPECT_EQ(rejection(z4, {1, 3, 9}), ConnectionSetError::Kind::OutOfRange);
}

TEST(CayleyGraphTest, Examples) {
  const auto z4 = group("cyclic:4");
  EXPECT_THAT(cayley_graph(make_connection_set(z4, {1, 3})),
              ElementsAre(ElementsAre(1, 3), ElementsAre(0, 2), ElementsAre(1, 3),
                          ElementsAre(0, 2)));
  const auto klein = group("elem2:2");
  const auto k4 = cayley_graph(make_connection_set(klein, {1, 2, 3}));
  for (Index v = 0; v < 4; ++v) {
    std::vector<Index> others;
    for (Index u = 0; u < 4; ++u) {
      if (u != v) others.push_back(u);
    }
    EXPECT_EQ(k4[v], others);
  }
}

TEST(CayleyGraphTest, RegularSymmetricAndRightTranslationInvariant) {
  for (const auto& g : testing::catalog(8)) {
    for (const auto& s : enumerate_connection_sets(g)) {
      const auto adj = cayley_graph(s);
      std::size_t degree_sum = 0;
      for (Index x = 0; x < g->order(); ++x) {
        ASSERT_EQ(adj[x].size(), s.size());
        degree_sum += adj[x].size();
        for (Index y : adj[x]) {
          // y x^-1 in S, and the edge set is closed under right translation.
          EXPECT_TRUE(s.contains(g->mult(y, g->inv(x))));
          EXPECT_TRUE(std::binary_search(adj[y].begin(), adj[y].end(), x));
          for (Index t = 0; t < g->order(); ++t) {
            const auto& row = adj[g->mult(x, t)];
            EXPECT_TRUE(std::binary_search(row.begin(), row.end(), g->mult(y, t)));
          }
        }
      }
      EXPECT_EQ(degree_sum / 2, g->order() * s.size() / 2);
    }
  }
}

TEST(BuildCayleyMapTest, RotationAtIdentityIsTheOrdering) {
  const auto g = group("dihedral:4");
  for (const auto& s : enumerate_connection_sets(g)) {
    for (const auto& ordering : enumerate_cyclic_orderings(s)) {
      const RotationMap m = build_cayley_map(CayleyMap(s, ordering));
      EXPECT_EQ(m.rotation_at(g->identity()), ordering);
    }
  }
}

TEST(BuildCayleyMapTest, HandEvaluatedRotation) {
  // Z4, S = {1, 3}, r = (1 3): rho_2(1) = r(1 - 2) + 2 = r(3) + 2 = 1 + 2 = 3.
  const auto z4 = group("cyclic:4");
  const RotationMap m =
      build_cayley_map(CayleyMap(make_connection_set(z4, {1, 3}), CyclicOrdering::from_cycle({1, 3})));
  EXPECT_EQ(m.rotate(2, 1), 3u);
  EXPECT_EQ(m.rotate(2, 3), 1u);
}

TEST(BuildCayleyMapTest, RotationFollowsDefiningFormula) {
  // rho_g(x) = r(x g^-1) g on every vertex of every map of D4 (non-abelian).
  const auto g = group("dihedral:4");
  for (const auto& m : testing::all_maps_bruteforce(g)) {
    const RotationMap rm = build_cayley_map(m);
    for (Index v = 0; v < g->order(); ++v) {
      for (Index x : rm.neighbors(v)) {
        const Index local = g->mult(x, g->inv(v));
        EXPECT_EQ(rm.rotate(v, x), g->mult(m.ordering().successor(local), v));
      }
    }
  }
}

TEST(BuildCayleyMapTest, RightTranslationsAreAutomorphisms) {
  for (const auto& g : testing::catalog(8)) {
    for (const auto& m : testing::all_maps_bruteforce(g)) {
      const RotationMap rm = build_cayley_map(m);
      for (Index t = 0; t < g->order(); ++t) {
        ASSERT_TRUE(is_map_automorphism(rm, right_regular_action(*g, t)))
            << g->label() << " t=" << t;
      }
    }
  }
}

TEST(EnumerateConnectionSetsTest, SmallGroups) {
  EXPECT_THAT(element_lists(enumerate_connection_sets(group("cyclic:4"))),
              ElementsAre(ElementsAre(1, 3), ElementsAre(1, 2, 3)));
  EXPECT_THAT(element_lists(enumerate_connection_sets(group("elem2:2"))),
              ElementsAre(ElementsAre(1, 2), ElementsAre(1, 3), ElementsAre(2, 3),
                          ElementsAre(1, 2, 3)));
  EXPECT_THAT(element_lists(enumerate_connection_sets(group("cyclic:3"))),
              ElementsAre(ElementsAre(1, 2)));
}

TEST(EnumerateConnectionSetsTest, MatchesBruteForceSubsetScan) {
  for (const auto& g : testing::catalog(10)) {
    std::set<std::vector<Index>> expected;
    const FiniteGroup& grp = *g;
    const std::size_t others = g->order() - 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << others); ++mask) {
      std::vector<Index> s;
      for (Index i = 0; i < others; ++i) {
        if (mask >> i & 1) s.push_back(i + 1);  // identity is 0 for builtins
      }
      const bool closed = std::all_of(s.begin(), s.end(), [&](Index x) {
        return std::find(s.begin(), s.end(), grp.inv(x)) != s.end();
      });
      if (closed && generates(grp, s)) expected.insert(s);
    }
    const auto lists = element_lists(enumerate_connection_sets(g));
    EXPECT_EQ(std::set<std::vector<Index>>(lists.begin(), lists.end()), expected) << g->label();
    EXPECT_EQ(lists.size(), expected.size());
    EXPECT_TRUE(std::is_sorted(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }));
  }
}

TEST(EnumerateCyclicOrderingsTest, Counts) {
  const auto z2 = group("cyclic:2");
  const auto single = enumerate_cyclic_orderings(make_connection_set(z2, {1}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].successor(1), 1u);

  const auto klein = group("elem2:2");
  EXPECT_EQ(enumerate_cyclic_orderings(make_connection_set(klein, {1, 2, 3})).size(), 2u);

  const auto z6 = group("cyclic:6");
  const auto five = enumerate_cyclic_orderings(make_connection_set(z6, {1, 2, 3, 4, 5}));
  ASSERT_EQ(five.size(), 24u);
  std::set<std::vector<Index>> distinct;
  for (const auto& c : five) {
    std::map<Index, Index> succ;
    for (Index x : c.support()) succ[x] = c.successor(x);
    EXPECT_TRUE(is_cyclic_ordering(succ, c.support()));
    EXPECT_EQ(c.cycle().front(), 1u);
    distinct.insert(c.cycle());
  }
  EXPECT_EQ(distinct.size(), 24u);
}

TEST(EnumerateCyclicOrderingsTest, UnrankMatchesStreamOrder) {
  const std::vector<Index> elements{2, 3, 5, 7, 11, 13};
  std::vector<std::vector<Index>> streamed;
  for_each_cyclic_ordering(elements, 0, 120, [&](std::span<const Index> c) {
    streamed.emplace_back(c.begin(), c.end());
  });
  ASSERT_EQ(streamed.size(), 120u);
  EXPECT_TRUE(std::is_sorted(streamed.begin(), streamed.end()));
  for (std::uint64_t rank = 0; rank < 120; ++rank) {
    EXPECT_EQ(unrank_cyclic_ordering(elements, rank), streamed[rank]);
  }
}

TEST(CountLabelledMapsTest, HandEnumeratedValues) {
  EXPECT_EQ(count_labelled_maps(group("cyclic:3")), 1);
  EXPECT_EQ(count_labelled_maps(group("elem2:2")), 5);
  EXPECT_EQ(count_labelled_maps(group("cyclic:4")), 3);
  EXPECT_EQ(count_labelled_maps(group("cyclic:5")), 8);
  EXPECT_EQ(count_labelled_maps(group("cyclic:2")), 1);
}

TEST(CountLabelledMapsTest, EqualsStreamLengthAndExceedsFullSetCount) {
  for (const auto& g : testing::catalog(8)) {
    const BigInt count = count_labelled_maps(g);
    EXPECT_EQ(count, BigInt(testing::all_maps_bruteforce(g).size())) << g->label();
    if (g->order() >= 3) EXPECT_GE(count, factorial(g->order() - 2));
  }
  for (const auto& g : testing::catalog(12)) {
    EXPECT_GE(count_labelled_maps(g), factorial(g->order() - 2));
  }
}

}  // namespace
}  // namespace mrr
