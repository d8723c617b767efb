#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "flag_oracle.hpp"
#include "wonderful/arrangements.hpp"
#include "wonderful/error.hpp"

namespace wonderful {
namespace {

using testing::flag_oracle_nests;
using testing::mask_of;
using testing::members_of;
using testing::NestMask;

VertexSet S(const Graph& g, std::vector<int> labels) { return g.to_set(labels); }

bool nest(const BuildingSet& b, std::vector<VertexSet> members) {
  return is_nest(b, members).is_nest;
}

TEST(BuildingSet, Examples) {
  EXPECT_EQ(building_set(builtin_graph("complete:3")).size(), 4u);
  const Graph c4 = builtin_graph("cycle:4");
  const BuildingSet bc4 = building_set(c4);
  EXPECT_EQ(bc4.size(), 5u);
  EXPECT_EQ(bc4[0], c4.all());
  EXPECT_EQ(building_set(builtin_graph("complete:4")).size(), 11u);
  try {
    building_set(testing::make({1, 2}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoEdges);
  }
}

TEST(BuildingSet, ElementsAreInducedBiconnectedAndOrdered) {
  for (const auto& ng : testing::nest_oracle_corpus()) {
    const BuildingSet b = building_set(ng.graph);
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_GE(b[i].size(), 2u);
      EXPECT_TRUE(is_biconnected(SubgraphRef::induced(ng.graph, b[i])));
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].subset_of(b[i]) && i != j) EXPECT_LT(i, j) << ng.name;
      }
    }
  }
}

TEST(BuildingSet, CompleteGraphsGiveAllSubsets) {
  for (int n = 2; n <= 6; ++n) {
    const BuildingSet b = building_set(builtin_graph("complete:" + std::to_string(n)));
    EXPECT_EQ(b.size(), (std::size_t{1} << n) - static_cast<std::size_t>(n) - 1);
  }
}

TEST(IsNest, Examples) {
  const Graph p3 = builtin_graph("path:3");
  const BuildingSet bp = building_set(p3);
  const auto t = is_nest(bp, std::vector<VertexSet>{S(p3, {1, 2}), S(p3, {2, 3})});
  ASSERT_TRUE(t.is_nest);
  ASSERT_TRUE(t.nest.has_value());
  EXPECT_TRUE(t.nest->is_antichain());
  EXPECT_EQ(t.nest->forest().roots().size(), 2u);

  const Graph k3 = builtin_graph("complete:3");
  const BuildingSet bk = building_set(k3);
  EXPECT_FALSE(nest(bk, {S(k3, {1, 2}), S(k3, {1, 3})}));
  const auto chain = is_nest(bk, std::vector<VertexSet>{S(k3, {1, 2}), k3.all()});
  ASSERT_TRUE(chain.is_nest);
  const NestForest& f = chain.nest->forest();
  EXPECT_EQ(f.roots().size(), 1u);
  const std::size_t root = f.roots().front();
  EXPECT_EQ(chain.nest->elements()[root], k3.all());
  EXPECT_EQ(f.children(root).size(), 1u);
}

TEST(IsNest, PairwiseCriterionIsOnlyADiagnostic) {
  const Graph k3 = builtin_graph("complete:3");
  const BuildingSet bk = building_set(k3);
  const std::vector<VertexSet> two_edges{S(k3, {1, 2}), S(k3, {1, 3})};
  EXPECT_TRUE(satisfies_pairwise_criterion(bk, two_edges));
  EXPECT_FALSE(divisors_intersect(bk, two_edges));
}

TEST(IsNest, Errors) {
  const Graph k3 = builtin_graph("complete:3");
  const BuildingSet bk = building_set(k3);
  try {
    is_nest(bk, std::vector<VertexSet>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  const Graph p3 = builtin_graph("path:3");
  try {
    // {1,3} is not biconnected in P3, so it cannot come from this building set
    is_nest(building_set(p3), std::vector<VertexSet>{S(p3, {1, 3})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ForeignElement);
  }
}

TEST(DivisorsIntersect, Examples) {
  const Graph k3 = builtin_graph("complete:3");
  EXPECT_FALSE(divisors_intersect(building_set(k3), std::vector<VertexSet>{S(k3, {1, 2}), S(k3, {1, 3})}));
  const Graph p3 = builtin_graph("path:3");
  EXPECT_TRUE(divisors_intersect(building_set(p3), std::vector<VertexSet>{S(p3, {1, 2}), S(p3, {2, 3})}));
  const BuildingSet b4 = building_set(builtin_graph("complete:4"));
  for (VertexSet s : b4.elements()) EXPECT_TRUE(divisors_intersect(b4, std::vector<VertexSet>{s}));
}

TEST(EnumerateNests, Counts) {
  EXPECT_EQ(enumerate_nests(building_set(builtin_graph("complete:2"))).nests.size(), 1u);
  const auto k3 = enumerate_nests(building_set(builtin_graph("complete:3")));
  EXPECT_EQ(k3.nests.size(), 7u);
  // the pairwise-only criterion additionally admits the three pairs of edges
  // and the three edges plus K3 combinations built from them
  EXPECT_GT(k3.pairwise_family_count, 7u);
  EXPECT_EQ(enumerate_nests(building_set(builtin_graph("path:3"))).nests.size(), 3u);
}

TEST(EnumerateNests, OrderIsBySizeThenIndices) {
  const auto e = enumerate_nests(building_set(builtin_graph("complete:4")));
  for (std::size_t i = 1; i < e.nests.size(); ++i) {
    const Nest& a = e.nests[i - 1];
    const Nest& b = e.nests[i];
    ASSERT_LE(a.size(), b.size());
    if (a.size() == b.size()) {
      EXPECT_TRUE(std::lexicographical_compare(a.indices().begin(), a.indices().end(),
                                               b.indices().begin(), b.indices().end()));
    }
  }
}

TEST(EnumerateNests, ExplosionGuard) {
  const BuildingSet b = building_set(builtin_graph("complete:4"));
  try {
    enumerate_nests(b, EnumerationOptions{10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExplosionGuard);
    EXPECT_NE(std::string(e.what()).find("--budget"), std::string::npos);
  }
}

TEST(EnumerateNests, AgreesWithFlagOracleOnSmallGraphs) {
  for (const auto& ng : testing::all_small_graphs(4, true)) {
    const BuildingSet b = building_set(ng.graph);
    const auto oracle = flag_oracle_nests(b);
    std::set<NestMask> fast;
    for (const Nest& n : enumerate_nests(b).nests) fast.insert(mask_of(n));
    EXPECT_EQ(fast, oracle) << ng.name;
  }
}

TEST(EnumerateNests, CompleteGraphsGiveNestedOrDisjointFamilies) {
  for (int n = 2; n <= 4; ++n) {
    const BuildingSet b = building_set(builtin_graph("complete:" + std::to_string(n)));
    std::set<NestMask> fast;
    for (const Nest& x : enumerate_nests(b).nests) fast.insert(mask_of(x));
    for (NestMask m = 1; m < (NestMask{1} << b.size()); ++m) {
      const auto members = members_of(b, m);
      bool classical = true;
      for (VertexSet x : members) {
        for (VertexSet y : members) {
          classical = classical && (x.subset_of(y) || y.subset_of(x) || !x.intersects(y));
        }
      }
      EXPECT_EQ(fast.count(m) == 1, classical) << "n=" << n << " mask " << m;
    }
  }
}

TEST(EnumerateNests, RemovingALeafKeepsANest) {
  for (const auto& ng : testing::nest_oracle_corpus()) {
    const BuildingSet b = building_set(ng.graph);
    for (const Nest& n : enumerate_nests(b).nests) {
      if (n.size() < 2) continue;
      const NestForest& f = n.forest();
      for (std::size_t pos = 0; pos < n.size(); ++pos) {
        if (!f.children(pos).empty()) continue;
        std::vector<VertexSet> rest;
        for (std::size_t k = 0; k < n.size(); ++k) {
          if (k != pos) rest.push_back(n.elements()[k]);
        }
        EXPECT_TRUE(is_nest(b, rest).is_nest) << ng.name;
      }
    }
  }
}

TEST(NestForest, ParentIsSmallestStrictSuperset) {
  for (const auto& ng : testing::nest_oracle_corpus()) {
    const BuildingSet b = building_set(ng.graph);
    for (const Nest& n : enumerate_nests(b).nests) {
      const auto el = n.elements();
      for (std::size_t i = 0; i < n.size(); ++i) {
        const auto& p = n.forest().parent[i];
        for (std::size_t j = 0; j < n.size(); ++j) {
          if (i == j || !el[i].subset_of(el[j])) continue;
          ASSERT_TRUE(p.has_value());
          EXPECT_TRUE(el[*p].subset_of(el[j]));
        }
        if (p) {
          EXPECT_TRUE(el[i].subset_of(el[*p]));
          EXPECT_NE(el[i], el[*p]);
        }
      }
    }
  }
}

TEST(NestQuotients, Examples) {
  const Graph k3 = builtin_graph("complete:3");
  const BuildingSet bk = building_set(k3);
  const auto n = is_nest(bk, std::vector<VertexSet>{S(k3, {1, 2}), k3.all()}).nest;
  ASSERT_TRUE(n);
  const NestQuotientData q = nest_quotients(bk, *n, 2);
  EXPECT_EQ(q.whole.graph.vertex_count(), 1u);
  for (const auto& e : q.per_element) {
    EXPECT_EQ(e.r, 2);
    EXPECT_EQ(e.quotient.graph.vertex_count(), 2u);
  }

  const Graph k2 = builtin_graph("complete:2");
  const BuildingSet b2 = building_set(k2);
  const NestQuotientData q2 = nest_quotients(b2, enumerate_nests(b2).nests.front(), 4);
  EXPECT_EQ(q2.whole.graph.vertex_count(), 1u);
  EXPECT_EQ(q2.per_element.front().r, 4);

  const Graph p3 = builtin_graph("path:3");
  const BuildingSet bp = building_set(p3);
  const auto np = is_nest(bp, std::vector<VertexSet>{S(p3, {1, 2}), S(p3, {2, 3})}).nest;
  const NestQuotientData q3 = nest_quotients(bp, *np, 3);
  EXPECT_EQ(q3.whole.graph.vertex_count(), 1u);
  for (const auto& e : q3.per_element) EXPECT_EQ(e.r, 3);
}

TEST(NestQuotients, JumpIsAtLeastDimension) {
  for (const auto& ng : testing::nest_oracle_corpus()) {
    const BuildingSet b = building_set(ng.graph);
    for (const Nest& n : enumerate_nests(b).nests) {
      for (int d = 1; d <= 4; ++d) {
        const NestQuotientData q = nest_quotients(b, n, d);
        for (const auto& e : q.per_element) {
          EXPECT_GE(e.r, d);
          EXPECT_EQ(e.r, d * (static_cast<int>(e.quotient.graph.vertex_count()) - 1));
        }
      }
    }
  }
}

}  // namespace
}  // namespace wonderful
