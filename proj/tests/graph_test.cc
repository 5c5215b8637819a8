/*
 * Copyright 2026 The influrank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "influrank/centrality.h"
#include "influrank/community.h"
#include "influrank/cooc.h"
#include "influrank/error.h"
#include "influrank/graph.h"
#include "influrank/graph_features.h"
#include "oracles.h"
#include "test_util.h"

namespace influrank {
namespace {

using Streams = std::vector<TokenStream>;
using Edges = std::vector<std::pair<NodeId, NodeId>>;

CooccurrenceMatrix matrix(Streams s) { return CooccurrenceMatrix::build(s); }

TEST(Cooccurrence, Examples) {
  const CooccurrenceMatrix one = matrix({{"red", "car"}});
  EXPECT_EQ(one.num_pairs(), 1u);
  EXPECT_EQ(one.count("car", "red"), 1u);
  EXPECT_EQ(one.count("red", "car"), 1u);
  EXPECT_EQ(matrix({{"red", "car", "red", "car"}}).count("car", "red"), 3u);
  EXPECT_TRUE(matrix({{"red"}, {"car"}}).empty());
  EXPECT_TRUE(matrix({}).empty());
}

TEST(Cooccurrence, SelfPairs) {
  const CooccurrenceMatrix m = matrix({{"go", "go", "now"}});
  EXPECT_EQ(m.count("go", "go"), 1u);
  EXPECT_EQ(m.count("go", "now"), 1u);
  EXPECT_EQ(m.total(), 2u);
}

Streams random_streams(std::mt19937_64& rng, int words = 6) {
  Streams s(std::uniform_int_distribution<int>(0, 6)(rng));
  for (TokenStream& ts : s) {
    ts.resize(std::uniform_int_distribution<std::size_t>(0, 8)(rng));
    for (std::string& w : ts) w = "w" + std::to_string(rng() % words);
  }
  return s;
}

TEST(Cooccurrence, TotalCountsAdjacentPositions) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const Streams s = random_streams(rng);
    std::uint64_t expected = 0;
    for (const TokenStream& ts : s) expected += ts.size() > 1 ? ts.size() - 1 : 0;
    const CooccurrenceMatrix m = matrix(s);
    EXPECT_EQ(m.total(), expected);
    for (const auto& e : m.entries()) {
      EXPECT_LE(e.a, e.b);
      EXPECT_GE(e.count, 1u);
    }
  }
}

TEST(Distance, Examples) {
  const CooccurrenceMatrix p3 = matrix({{"p1", "p2"}, {"p1", "p2"}, {"p2", "p1"}});
  EXPECT_EQ(matrix_distance(p3, p3), 0.0);
  EXPECT_EQ(matrix_distance(p3, CooccurrenceMatrix{}), 3.0);
  // {p:1, q:2} vs {q:4, r:2}
  const CooccurrenceMatrix a = matrix({{"p1", "p2"}, {"q1", "q2"}, {"q1", "q2"}});
  const CooccurrenceMatrix b = matrix({{"q1", "q2", "q1", "q2", "q1"}, {"r1", "r2"}, {"r1", "r2"}});
  EXPECT_DOUBLE_EQ(matrix_distance(a, b), 3.0);
}

TEST(Distance, MetricProperties) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const CooccurrenceMatrix x = matrix(random_streams(rng));
    const CooccurrenceMatrix y = matrix(random_streams(rng));
    const CooccurrenceMatrix z = matrix(random_streams(rng));
    const double xy = matrix_distance(x, y);
    EXPECT_GE(xy, 0.0);
    EXPECT_EQ(xy, matrix_distance(y, x));
    EXPECT_EQ(xy == 0.0, x == y);
    EXPECT_LE(matrix_distance(x, z), xy + matrix_distance(y, z) + 1e-12);
  }
}

TEST(WordGraph, FromMatrix) {
  const CooccurrenceMatrix m = matrix({{"b", "a", "a", "c"}, {"d", "d"}});
  const WordGraph g = WordGraph::from_matrix(m);
  EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(g.num_edges(), 2u);  // (a,b), (a,c); self pairs dropped
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.degree(3), 0u);
  EXPECT_EQ(g.to_edge_list(), "a\tb\t1\na\tc\t1\n");
}

TEST(WordGraph, EdgeCountMatchesDistinctPairs) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const CooccurrenceMatrix m = matrix(random_streams(rng));
    std::size_t distinct = 0;
    for (const auto& e : m.entries()) distinct += e.a != e.b ? 1 : 0;
    const WordGraph g = WordGraph::from_matrix(m);
    EXPECT_EQ(g.num_edges(), distinct);
    for (NodeId u = 0; u < g.num_nodes(); ++u) EXPECT_FALSE(g.has_edge(u, u));
  }
}

WordGraph path3() { return WordGraph::from_edges(3, Edges{{0, 1}, {1, 2}}); }
WordGraph triangle() { return WordGraph::from_edges(3, Edges{{0, 1}, {1, 2}, {0, 2}}); }
WordGraph two_triangles() {
  return WordGraph::from_edges(6, Edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

TEST(Centrality, Triangle) {
  const NodeMetrics m = compute_centralities(triangle());
  for (NodeId u = 0; u < 3; ++u) {
    EXPECT_EQ(m.betweenness[u], 0.0);
    EXPECT_EQ(m.transitivity[u], 1.0);
    EXPECT_EQ(m.eccentricity[u], 1.0);
    EXPECT_NEAR(m.eigenvector[u], 1.0, 1e-12);
  }
}

TEST(Centrality, Path) {
  const NodeMetrics m = compute_centralities(path3());
  EXPECT_EQ(m.betweenness[1], 1.0);
  EXPECT_EQ(m.betweenness[0], 0.0);
  EXPECT_EQ(m.closeness[1], 0.5);
  EXPECT_NEAR(m.closeness[0], 1.0 / 3.0, 1e-15);
  EXPECT_EQ(m.eccentricity[0], 2.0);
  EXPECT_EQ(m.eccentricity[1], 1.0);
  EXPECT_EQ(m.degree[1], 2.0);
  EXPECT_EQ(m.transitivity[1], 0.0);
  EXPECT_NEAR(m.eigenvector[0], 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(m.eigenvector[1], 1.0, 1e-12);
}

TEST(Centrality, SingleEdgeSubgraph) {
  const WordGraph g = WordGraph::from_edges(2, Edges{{0, 1}});
  EXPECT_NEAR(subgraph_centrality_spectral(g)[0], std::cosh(1.0), 1e-12);
  EXPECT_NEAR(subgraph_centrality_series(g)[1], std::cosh(1.0), 1e-12);
  EXPECT_NEAR(std::cosh(1.0), 1.543081, 1e-6);
}

TEST(Centrality, EmptyAndIsolated) {
  const NodeMetrics empty = compute_centralities(WordGraph{});
  EXPECT_EQ(empty.size(), 0u);
  const NodeMetrics iso = compute_centralities(WordGraph::from_edges(3, Edges{{0, 1}}));
  EXPECT_EQ(iso.closeness[2], 0.0);
  EXPECT_EQ(iso.eccentricity[2], 0.0);
  EXPECT_EQ(iso.eigenvector[2], 0.0);
  EXPECT_EQ(iso.subgraph[2], 1.0);
  const NodeMetrics none = compute_centralities(WordGraph::from_edges(2, Edges{}));
  EXPECT_EQ(none.eigenvector, (std::vector<double>{0.0, 0.0}));
}

TEST(Centrality, MatchesOraclesOnSmallGraphs) {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 300; ++t) {
    const WordGraph g = oracle::random_graph(rng, 7);
    const NodeMetrics m = compute_centralities(g);
    const oracle::PathMeasures o = oracle::path_measures(g);
    const std::vector<double> e = oracle::exp_diagonal(g);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      EXPECT_EQ(m.degree[u], o.degree[u]);
      EXPECT_EQ(m.eccentricity[u], o.eccentricity[u]);
      EXPECT_NEAR(m.betweenness[u], o.betweenness[u], 1e-9);
      EXPECT_NEAR(m.closeness[u], o.closeness[u], 1e-9);
      EXPECT_NEAR(m.transitivity[u], o.transitivity[u], 1e-9);
      EXPECT_NEAR(m.subgraph[u], e[u], 1e-9 * e[u]);
      EXPECT_GE(m.subgraph[u], 1.0);
      EXPECT_GE(m.transitivity[u], 0.0);
      EXPECT_LE(m.transitivity[u], 1.0);
    }
  }
}

// A v = lambda v on the dominant component, max-normalized and nonnegative.
void expect_eigenvector(const WordGraph& g, const std::vector<double>& v, double tol) {
  const std::size_t n = g.num_nodes();
  if (g.num_edges() == 0) return;
  double max = 0.0;
  for (double x : v) {
    EXPECT_GE(x, 0.0);
    max = std::max(max, x);
  }
  EXPECT_NEAR(max, 1.0, 1e-12);
  std::vector<double> av(n, 0.0);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId w : g.neighbors(u)) av[u] += v[w];
  double num = 0, den = 0;
  for (std::size_t i = 0; i < n; ++i) {
    num += av[i] * v[i];
    den += v[i] * v[i];
  }
  const double lambda = num / den;
  double res = 0, norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    res += (av[i] - lambda * v[i]) * (av[i] - lambda * v[i]);
    norm += lambda * v[i] * lambda * v[i];
  }
  EXPECT_LE(std::sqrt(res), tol * std::sqrt(norm));
  // Dominant: lambda is the largest adjacency eigenvalue, at least the
  // average degree.
  EXPECT_GE(lambda + 1e-9, 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n));
}

TEST(Centrality, EigenvectorResidual) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const WordGraph g = oracle::random_graph(rng, 30);
    expect_eigenvector(g, eigenvector_centrality(g), 1e-8);
    // Power iteration path.
    expect_eigenvector(g, eigenvector_centrality(g, 0), 1e-8);
  }
}

TEST(Centrality, SpectralAndSeriesAgree) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const WordGraph g = oracle::random_graph(rng, 50);
    const auto spectral = subgraph_centrality_spectral(g);
    const auto series = subgraph_centrality_series(g);
    SubgraphSeriesOptions fixed;
    fixed.min_order = fixed.max_order = 20;
    const auto truncated = subgraph_centrality_series(g, fixed);
    for (std::size_t u = 0; u < spectral.size(); ++u) {
      EXPECT_NEAR(series[u], spectral[u], 1e-6 * spectral[u]);
      EXPECT_LE(truncated[u], series[u] * (1 + 1e-12));
    }
  }
}

TEST(Centrality, LargeGraphPathMatchesSpectral) {
  std::mt19937_64 rng(21);
  const WordGraph g = oracle::random_graph(rng, 40);
  CentralityOptions small;
  small.spectral_max_nodes = 0;
  const NodeMetrics a = compute_centralities(g);
  const NodeMetrics b = compute_centralities(g, small);
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    EXPECT_NEAR(a.subgraph[u], b.subgraph[u], 1e-9 * a.subgraph[u]);
  }
}

TEST(Community, TwoTrianglesSplit) {
  const WordGraph g = two_triangles();
  const CommunityPartition p = GreedyModularity().detect(g);
  p.validate(6);
  EXPECT_EQ(p.count, 2u);
  EXPECT_EQ(p.community, (std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1}));

  // The split is the modularity optimum over all 203 partitions.
  double best = -1.0;
  std::vector<std::uint32_t> arg;
  oracle::for_each_partition(6, [&](const std::vector<std::uint32_t>& part) {
    const double q = oracle::modularity(g, part);
    if (q > best + 1e-12) {
      best = q;
      arg = part;
    }
  });
  EXPECT_EQ(arg, p.community);
  EXPECT_NEAR(modularity(g, p), best, 1e-12);
}

TEST(Community, CliqueAndEmpty) {
  Edges k5;
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  const CommunityPartition p = GreedyModularity().detect(WordGraph::from_edges(5, k5));
  EXPECT_EQ(p.count, 1u);
  EXPECT_EQ(GreedyModularity().detect(WordGraph{}).count, 0u);
  const CommunityPartition iso = GreedyModularity().detect(WordGraph::from_edges(3, Edges{}));
  iso.validate(3);
  EXPECT_EQ(iso.count, 3u);
}

TEST(Community, ModularityMatchesOracle) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const WordGraph g = oracle::random_graph(rng, 8);
    const CommunityPartition p = GreedyModularity().detect(g);
    p.validate(g.num_nodes());
    EXPECT_NEAR(modularity(g, p), oracle::modularity(g, p.community), 1e-12);
    // Deterministic.
    EXPECT_EQ(GreedyModularity().detect(g).community, p.community);
  }
}

TEST(Community, GreedyNeverBelowSingletons) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 100; ++t) {
    const WordGraph g = oracle::random_graph(rng, 20);
    CommunityPartition singletons;
    for (NodeId u = 0; u < g.num_nodes(); ++u) singletons.community.push_back(u);
    singletons.count = g.num_nodes();
    EXPECT_GE(modularity(g, GreedyModularity().detect(g)), modularity(g, singletons) - 1e-12);
  }
}

TEST(CommunityMetrics, ClosedForms) {
  // Star centre 0 with leaves 1,2 in community 0 and leaves 3,4 in community 1.
  const WordGraph star = WordGraph::from_edges(5, Edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const CommunityPartition p{{0, 0, 0, 1, 1}, 2};
  const NodeMetrics m = community_metrics(star, p);
  EXPECT_EQ(m.participation[0], 0.5);
  EXPECT_EQ(m.embeddedness[0], 0.5);
  // Leaves 1 and 2 only touch their own community.
  EXPECT_EQ(m.embeddedness[1], 1.0);
  EXPECT_EQ(m.participation[1], 0.0);
  // Leaves 3 and 4 have internal degree 0, equal within their community.
  EXPECT_EQ(m.within_module_degree[3], 0.0);
  EXPECT_EQ(m.within_module_degree[4], 0.0);

  const NodeMetrics tri = community_metrics(triangle(), CommunityPartition{{0, 0, 0}, 1});
  for (int u = 0; u < 3; ++u) {
    EXPECT_EQ(tri.within_module_degree[u], 0.0);
    EXPECT_EQ(tri.embeddedness[u], 1.0);
    EXPECT_EQ(tri.participation[u], 0.0);
  }
  EXPECT_THROW(community_metrics(triangle(), CommunityPartition{{0, 0}, 1}), InvalidArgument);
}

TEST(CommunityMetrics, RangesAndZScoreSums) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const WordGraph g = oracle::random_graph(rng, 15);
    const CommunityPartition p = GreedyModularity().detect(g);
    const NodeMetrics m = community_metrics(g, p);
    std::vector<double> z_sum(p.count, 0.0);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      EXPECT_GE(m.embeddedness[u], 0.0);
      EXPECT_LE(m.embeddedness[u], 1.0);
      EXPECT_GE(m.participation[u], 0.0);
      EXPECT_LE(m.participation[u], 1.0);
      z_sum[p.community[u]] += m.within_module_degree[u];
    }
    for (double s : z_sum) EXPECT_NEAR(s, 0.0, 1e-9);
  }
}

TEST(GraphFeatures, Examples) {
  const UserGraphFeatures none = graph_features(Streams{});
  for (double a : none.averages) EXPECT_EQ(a, 0.0);
  const UserGraphFeatures red_car = graph_features(Streams{{"red", "car"}});
  EXPECT_EQ(red_car.averages[0], 1.0);
}

TEST(GraphFeatures, AveragesMatchOracleOnHandGraph) {
  // Words a..e: a-b, b-c, c-a, c-d, d-e.
  const Streams s = {{"wa", "wb", "wc", "wa"}, {"wc", "wd", "we"}};
  const UserGraphFeatures f = graph_features(s);
  ASSERT_EQ(f.graph.num_nodes(), 5u);
  const oracle::PathMeasures o = oracle::path_measures(f.graph);
  const std::vector<double> e = oracle::exp_diagonal(f.graph);
  auto mean = [](const std::vector<double>& v) {
    double sum = 0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };
  EXPECT_NEAR(f.averages[0], mean(o.degree), 1e-12);
  EXPECT_NEAR(f.averages[1], mean(o.betweenness), 1e-12);
  EXPECT_NEAR(f.averages[2], mean(o.closeness), 1e-12);
  EXPECT_NEAR(f.averages[4], mean(e), 1e-9);
  EXPECT_NEAR(f.averages[5], mean(o.eccentricity), 1e-12);
  EXPECT_NEAR(f.averages[6], mean(o.transitivity), 1e-12);
  EXPECT_NEAR(f.averages[7], mean(f.nodes.embeddedness), 1e-15);
  EXPECT_NEAR(f.averages[9], mean(f.nodes.participation), 1e-15);
  EXPECT_EQ(o.betweenness[2], 4.0);  // wc bridges {wa, wb} to {wd, we}
}

}  // namespace
}  // namespace influrank
