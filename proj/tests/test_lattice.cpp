#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ordifind/lattice.hpp"

using namespace ordifind;

namespace {

std::set<std::pair<std::vector<bool>, std::vector<bool>>> as_set(const ConceptLattice& lat,
                                                                 const FormalContext& ctx) {
  std::set<std::pair<std::vector<bool>, std::vector<bool>>> out;
  for (const auto& c : lat.concepts()) {
    std::vector<bool> e(ctx.num_objects()), i(ctx.num_attributes());
    c.extent.for_each([&](std::size_t g) { e[g] = true; });
    c.intent.for_each([&](std::size_t m) { i[m] = true; });
    out.emplace(e, i);
  }
  return out;
}

FormalContext contranominal(std::size_t n) {
  oracle::Small s;
  s.objects = s.attributes = n;
  s.rows.assign(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.rows[i][j] = i != j;
  return oracle::to_context(s);
}

}  // namespace

TEST(Lattice, SocmedHas41Concepts) {
  auto ctx = fixtures::socmed();
  auto lat = build_lattice(ctx);
  EXPECT_EQ(lat.size(), 41u);
  EXPECT_EQ(lat.concept_at(lat.top()).extent.count(), 10u);
  EXPECT_EQ(lat.concept_at(lat.bottom()).intent.count(), 8u);
  EXPECT_EQ(lat.bottom(), 0u);
}

TEST(Lattice, EmptyRelation) {
  auto lat = build_lattice(FormalContext({"a", "b", "c"}, {"x", "y", "z"}, Relation(3, 3)));
  ASSERT_EQ(lat.size(), 2u);
  EXPECT_EQ(lat.concept_at(lat.top()).extent.count(), 3u);
  EXPECT_EQ(lat.concept_at(lat.top()).intent.count(), 0u);
  EXPECT_EQ(lat.concept_at(lat.bottom()).extent.count(), 0u);
  EXPECT_EQ(lat.concept_at(lat.bottom()).intent.count(), 3u);
  EXPECT_EQ(lat.upper_covers(lat.bottom()), std::vector<ConceptId>{lat.top()});
}

TEST(Lattice, EmptyContextHasOneConcept) {
  auto lat = build_lattice(FormalContext({}, {}, Relation(0, 0)));
  EXPECT_EQ(lat.size(), 1u);
  EXPECT_EQ(lat.top(), lat.bottom());
}

TEST(Lattice, ContranominalIsBooleanCube) {
  auto ctx = contranominal(3);
  auto lat = build_lattice(ctx);
  auto brute = oracle::concepts(oracle::from_context(ctx));
  ASSERT_EQ(brute.size(), 8u);
  EXPECT_EQ(lat.size(), 8u);
  // Each concept of the cube has exactly (3 - |extent|) upper covers.
  for (ConceptId c = 0; c < lat.size(); ++c)
    EXPECT_EQ(lat.upper_covers(c).size(), 3 - lat.concept_at(c).extent.count());
  EXPECT_EQ(lat.num_cover_edges(), 12u);
}

TEST(Lattice, CapRaisesResourceExhausted) {
  EXPECT_THROW(build_lattice(contranominal(6), LatticeOptions{10}), ResourceExhausted);
  EXPECT_NO_THROW(build_lattice(contranominal(6), LatticeOptions{64}));
}

// Exhaustiveness, closedness and covers against brute-force closure.
TEST(Lattice, MatchesBruteForceOnRandomContexts) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 150; ++iter) {
    auto small = oracle::random_small(rng, 5, 5, 0, 0);
    auto ctx = oracle::to_context(small);
    auto lat = build_lattice(ctx);
    auto brute = oracle::concepts(small);
    ASSERT_EQ(lat.size(), brute.size());
    auto set = as_set(lat, ctx);
    for (const auto& b : brute) EXPECT_TRUE(set.count({b.extent, b.intent}));

    auto brute_up = oracle::upper_covers(brute);
    std::size_t brute_edges = 0;
    for (const auto& u : brute_up) brute_edges += u.size();
    EXPECT_EQ(lat.num_cover_edges(), brute_edges);

    for (ConceptId c = 0; c < lat.size(); ++c) {
      const auto& con = lat.concept_at(c);
      EXPECT_EQ(ctx.derive_extent(con.extent), con.intent);
      EXPECT_EQ(ctx.derive_intent(con.intent), con.extent);
      for (ConceptId d : lat.upper_covers(c)) {
        // intent(d) ⊊ intent(c)
        EXPECT_TRUE(lat.concept_at(d).intent.is_subset_of(con.intent));
        EXPECT_NE(lat.concept_at(d).intent, con.intent);
        // transitively reduced: no e with c < e < d
        for (ConceptId e = 0; e < lat.size(); ++e)
          if (e != c && e != d) EXPECT_FALSE(lat.leq(c, e) && lat.leq(e, d));
        auto& lower = lat.lower_covers(d);
        EXPECT_NE(std::find(lower.begin(), lower.end(), c), lower.end());
      }
    }
  }
}

TEST(Lattice, ReconstructsIncidence) {
  auto ctx = fixtures::socmed();
  auto lat = build_lattice(ctx);
  for (std::size_t g = 0; g < ctx.num_objects(); ++g)
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
      bool found = false;
      for (const auto& c : lat.concepts()) found |= c.extent.test(g) && c.intent.test(m);
      EXPECT_EQ(found, ctx.has(g, m));
    }
}

TEST(Lattice, DeterministicIds) {
  auto ctx = fixtures::socmed();
  auto a = build_lattice(ctx);
  auto b = build_lattice(ctx);
  for (ConceptId c = 0; c < a.size(); ++c) {
    EXPECT_EQ(a.concept_at(c).extent, b.concept_at(c).extent);
    EXPECT_EQ(a.upper_covers(c), b.upper_covers(c));
  }
}

TEST(AttributeConcept, Premium) {
  auto ctx = fixtures::socmed();
  auto lat = build_lattice(ctx);
  const auto& c = lat.concept_at(attribute_concept(ctx, lat, ctx.attribute_index("premium")));
  std::vector<std::size_t> extent{ctx.object_index("Reddit"), ctx.object_index("Twitter"),
                                  ctx.object_index("YouTube")};
  std::vector<std::size_t> intent{ctx.attribute_index("USA-based"), ctx.attribute_index("premium"),
                                  ctx.attribute_index("ads")};
  std::sort(extent.begin(), extent.end());
  std::sort(intent.begin(), intent.end());
  EXPECT_EQ(c.extent.indices(), extent);
  EXPECT_EQ(c.intent.indices(), intent);
}

TEST(AttributeConcept, EmptyAndFullColumns) {
  Relation rel(2, 2);
  rel.insert(0, 1);
  rel.insert(1, 1);
  FormalContext ctx({"a", "b"}, {"never", "always"}, rel);
  auto lat = build_lattice(ctx);
  EXPECT_EQ(attribute_concept(ctx, lat, 0), lat.bottom());
  EXPECT_EQ(lat.concept_at(attribute_concept(ctx, lat, 1)).extent.count(), 2u);
  EXPECT_THROW(attribute_concept(ctx, lat, 2), std::invalid_argument);
}

TEST(ObjectConcept, Telegram) {
  auto ctx = fixtures::socmed();
  auto lat = build_lattice(ctx);
  const auto& c = lat.concept_at(object_concept(ctx, lat, ctx.object_index("Telegram")));
  std::vector<std::size_t> intent{ctx.attribute_index("private messages"),
                                  ctx.attribute_index("group messages"),
                                  ctx.attribute_index("mobile first")};
  EXPECT_EQ(c.intent.indices(), intent);
  EXPECT_THROW(object_concept(ctx, lat, 10), std::invalid_argument);
}

TEST(ObjectConcept, EmptyAndFullRows) {
  Relation rel(3, 2);
  rel.insert(1, 0);
  rel.insert(1, 1);
  rel.insert(2, 0);
  FormalContext ctx({"none", "all", "some"}, {"m", "n"}, rel);
  auto lat = build_lattice(ctx);
  EXPECT_EQ(object_concept(ctx, lat, 0), lat.top());
  const auto& full = lat.concept_at(object_concept(ctx, lat, 1));
  EXPECT_EQ(full.extent, ctx.derive_intent(Bitset::full(2)));
}

TEST(ObjectAndAttributeConcepts, AgreeWithDerivations) {
  std::mt19937 rng(19);
  for (int iter = 0; iter < 50; ++iter) {
    auto ctx = oracle::to_context(oracle::random_small(rng, 7, 7));
    auto lat = build_lattice(ctx);
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
      EXPECT_EQ(lat.concept_at(attribute_concept(ctx, lat, m)).extent, ctx.attribute_column(m));
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
      EXPECT_EQ(lat.concept_at(object_concept(ctx, lat, g)).intent, ctx.object_row(g));
  }
}

TEST(LinearExtension, Chain) {
  Relation rel(2, 2);
  rel.insert(0, 0);
  rel.insert(1, 0);
  rel.insert(1, 1);
  FormalContext ctx({"a", "b"}, {"m", "n"}, rel);  // two nested concepts
  auto lat = build_lattice(ctx);
  auto order = linear_extension(lat);
  ASSERT_EQ(order.size(), lat.size());
  EXPECT_EQ(order.front(), lat.bottom());
  EXPECT_EQ(order.back(), lat.top());

  Relation rel3(2, 2);
  rel3.insert(1, 0);
  FormalContext three({"a", "b"}, {"m", "n"}, rel3);  // ∅ ⊂ {b} ⊂ {a,b} by extent
  auto lat3 = build_lattice(three);
  ASSERT_EQ(lat3.size(), 3u);
  auto order3 = linear_extension(lat3);
  EXPECT_EQ(lat3.concept_at(order3[0]).extent.count(), 0u);
  EXPECT_EQ(lat3.concept_at(order3[1]).extent.count(), 1u);
  EXPECT_EQ(lat3.concept_at(order3[2]).extent.count(), 2u);
}

TEST(LinearExtension, RespectsCoversOnRandomContexts) {
  auto ctx = fixtures::socmed();
  auto lat = build_lattice(ctx);
  auto order = linear_extension(lat);
  EXPECT_EQ(order.front(), lat.bottom());
  EXPECT_EQ(order.back(), lat.top());

  std::mt19937 rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    auto c = oracle::to_context(oracle::random_small(rng, 8, 8));
    auto l = build_lattice(c);
    auto ord = linear_extension(l);
    std::vector<std::size_t> rank(l.size());
    for (std::size_t i = 0; i < ord.size(); ++i) rank[ord[i]] = i;
    for (ConceptId x = 0; x < l.size(); ++x)
      for (ConceptId y : l.upper_covers(x)) EXPECT_LT(rank[x], rank[y]);
  }
}
