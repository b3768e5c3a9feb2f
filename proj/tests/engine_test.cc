#include <gtest/gtest.h>

#include "hypermim/cut_oracle.h"
#include "hypermim/engine.h"
#include "hypermim/expander.h"
#include "testing_util.h"

namespace {

using namespace hypermim;

Instance I(std::size_t n, std::vector<std::vector<VertexId>> edges, VertexSet t, std::uint32_t c) {
  return Instance{Hypergraph::from_lists(n, edges), std::move(t), c};
}

bool all_essential(const Instance &orig, const Hypergraph &h, const ContractionMap &map) {
  Instance out = apply(orig, h, map);
  for (EdgeId e : h.edge_ids()) {
    if (!hmtest::naive_essential(out, e)) return false;
  }
  return true;
}

Instance path(std::size_t n, std::uint32_t c) {
  std::vector<std::vector<VertexId>> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return I(n, edges, {0, static_cast<VertexId>(n - 1)}, c);
}

TEST(Small, PathCollapsesToOneEdge) {
  Instance p = I(3, {{0, 1}, {1, 2}}, {0, 2}, 1);
  auto [h, map] = minimal_mimicking_small(p);
  EXPECT_EQ(h.num_edges(), 1u);
  EXPECT_EQ(map.contracted_edges, (std::vector<EdgeId>{0}));
}

TEST(Small, TriangleUnchanged) {
  Instance tri = I(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}, 2);
  auto [h, map] = minimal_mimicking_small(tri);
  EXPECT_EQ(h, tri.graph);
  EXPECT_TRUE(map.empty());
}

TEST(Small, LockedEdgesSurvive) {
  Instance p = path(5, 1);
  auto [h, map] = minimal_mimicking_small(p, {0, 2});
  EXPECT_TRUE(h.has_edge(0));
  EXPECT_TRUE(h.has_edge(2));
  for (EdgeId e : map.contracted_edges) EXPECT_TRUE(e != 0 && e != 2);
}

TEST(Small, MinimalAndMimicking) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    auto s = hmtest::random_shape(rng, 2, 9, 12, 4, 4, 2);
    Instance inst = hmtest::random_instance(5100 + trial, s.n, s.m, s.r, s.k, s.c);
    auto [h, map] = minimal_mimicking_small(inst);
    EXPECT_TRUE(hmtest::naive_mimicking(inst, h, map));
    EXPECT_TRUE(all_essential(inst, h, map));
  }
}

TEST(Expander, RequiresConnectedExpander) {
  Instance two = I(4, {{0, 1}, {2, 3}}, {0, 2}, 1);
  EXPECT_THROW(minimal_mimicking_expander(two, Rational::make(1, 1)), Error);
}

TEST(Expander, MinimalAndMimicking) {
  std::mt19937_64 rng(52);
  int enumerated = 0;
  for (int trial = 0; trial < 400 && enumerated < 60; ++trial) {
    auto s = hmtest::random_shape(rng, 3, 9, 14, 3, 4, 1);
    Instance inst = hmtest::random_instance(5200 + trial, s.n, s.m, s.r, s.k, s.c);
    auto phi = hmtest::certified_phi(inst.graph);
    if (!phi) continue;
    ExpanderRunStats st;
    auto [h, map] = minimal_mimicking_expander(inst, *phi, {}, {}, &st);
    enumerated += st.used_small_mode ? 0 : 1;
    EXPECT_TRUE(hmtest::naive_mimicking(inst, h, map));
    EXPECT_TRUE(all_essential(inst, h, map));
  }
  EXPECT_GE(enumerated, 20);
}

TEST(Glue, TwoHalvesOfAPath) {
  Instance p = path(6, 1);
  std::vector<PartResult> parts;
  for (VertexSet x : {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}}) {
    Subinstance sub = subinstance(p, x);
    auto [h, map] = minimal_mimicking_small(sub.instance, {2});
    parts.push_back({std::move(sub), std::move(h), std::move(map)});
  }
  auto [h, map] = glue(parts);
  EXPECT_EQ(h.num_edges(), 1u);
  EXPECT_TRUE(h.has_edge(2));
  EXPECT_TRUE(hmtest::naive_mimicking(p, h, map));
}

TEST(Glue, RejectsOverlap) {
  Instance p = path(4, 1);
  std::vector<PartResult> parts;
  for (VertexSet x : {VertexSet{0, 1, 2}, VertexSet{2, 3}}) {
    Subinstance sub = subinstance(p, x);
    parts.push_back({sub, sub.instance.graph, ContractionMap::identity(sub.instance.graph)});
  }
  EXPECT_THROW(glue(parts), Error);
}

TEST(Glue, MatchesDirectContraction) {
  std::mt19937_64 rng(53);
  int split = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto s = hmtest::random_shape(rng, 4, 12, 16, 3, 4, 2);
    Instance inst = hmtest::random_instance(5300 + trial, s.n, s.m, s.r, s.k, s.c);
    auto dec = expander_decompose(inst.graph, Rational::make(1, 1));
    split += dec.parts.size() > 1 ? 1 : 0;
    std::vector<PartResult> parts;
    std::vector<EdgeId> order;
    for (const auto &x : dec.parts) {
      Subinstance sub = subinstance(inst, x);
      EdgeSet locked;
      for (const auto &a : sub.anchors) locked.push_back(sub.edge_map.at(a.edge));
      normalize(locked);
      auto [h, map] = minimal_mimicking_small(sub.instance, locked);
      order.insert(order.end(), map.contracted_edges.begin(), map.contracted_edges.end());
      parts.push_back({std::move(sub), std::move(h), std::move(map)});
    }
    auto [h, map] = glue(parts);
    auto [direct, dmap] = contract_sequence(inst.graph, order);
    EXPECT_EQ(h, direct);
    EXPECT_EQ(map.vertex_map, dmap.vertex_map);
    EXPECT_TRUE(hmtest::naive_mimicking(inst, h, map));
  }
  EXPECT_GT(split, 20);
}

TEST(Pass, KeepsCutEdges) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = hmtest::random_shape(rng, 4, 12, 16, 3, 4, 2);
    Instance inst = hmtest::random_instance(5400 + trial, s.n, s.m, s.r, s.k, s.c);
    EngineOptions opt;
    opt.phi = Rational::make(1, 2);
    PassStats st;
    auto [h, map] = mimicking_expander_pass(inst, opt, &st);
    auto dec = expander_decompose(inst.graph, *opt.phi);
    for (EdgeId e : dec.cut_edges) EXPECT_TRUE(h.has_edge(e));
    EXPECT_EQ(st.parts, dec.parts.size());
    EXPECT_EQ(st.edges_after, h.num_edges());
    EXPECT_TRUE(hmtest::naive_mimicking(inst, h, map));
  }
}

TEST(Sparsify, PathOfSix) {
  SparsifyResult out = sparsify(path(6, 1));
  EXPECT_EQ(out.graph.num_edges(), 1u);
  EXPECT_EQ(out.report.final_size, 1u);
  EXPECT_EQ(out.report.contractions.size(), 4u);
}

TEST(Sparsify, MinimalInputTakesOnePass) {
  Instance tri = I(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}, 2);
  SparsifyResult out = sparsify(tri);
  EXPECT_EQ(out.report.passes, 1u);
  EXPECT_EQ(out.graph, tri.graph);
}

TEST(Sparsify, RandomOutputsMimic) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 120; ++trial) {
    auto s = hmtest::random_shape(rng, 3, 10, 14, 4, 5, 2);
    Instance inst = hmtest::random_instance(5500 + trial, s.n, s.m, s.r, s.k, s.c);
    EngineOptions opt;
    if (trial % 2) opt.phi = Rational::make(1, 1 + trial % 3);
    SparsifyResult out = sparsify(inst, opt);
    EXPECT_TRUE(hmtest::naive_mimicking(inst, out.graph, out.map));
    EXPECT_TRUE(is_mimicking(inst, out.graph, out.map));
    EXPECT_LE(out.report.passes,
              std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::log2(inst.graph.num_edges())))));
  }
}

TEST(Sparsify, Deterministic) {
  Instance inst = hmtest::random_instance(77, 10, 14, 3, 4, 2);
  EngineOptions one;
  one.threads = 1;
  EngineOptions many;
  many.threads = 4;
  EXPECT_EQ(sparsify(inst, one).map.contracted_edges, sparsify(inst, many).map.contracted_edges);
}

}  // namespace
