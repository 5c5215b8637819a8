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

#ifndef INFLURANK_CENTRALITY_H_
#define INFLURANK_CENTRALITY_H_

#include <cstddef>
#include <vector>

#include "influrank/graph.h"

namespace influrank {

// Per-node measures of one word graph, indexed by NodeId. Every vector has
// num_nodes() entries once filled.
struct NodeMetrics {
  std::vector<double> degree;
  std::vector<double> betweenness;
  std::vector<double> closeness;
  std::vector<double> eigenvector;
  std::vector<double> subgraph;
  std::vector<double> eccentricity;
  std::vector<double> transitivity;
  std::vector<double> embeddedness;
  std::vector<double> within_module_degree;
  std::vector<double> participation;

  std::size_t size() const { return degree.size(); }
};

// Controls the power series sum_l (A^l)_uu / l! used for large graphs.
struct SubgraphSeriesOptions {
  // Terms up to this order are always summed.
  int min_order = 20;
  // After min_order, summation stops once the remaining tail is provably
  // below relative_tolerance times the partial sum.
  double relative_tolerance = 1e-13;
  int max_order = 2000;
};

struct CentralityOptions {
  // Graphs up to this size use a dense eigendecomposition for the
  // eigenvector and subgraph centralities; larger ones use power iteration
  // and the series.
  std::size_t spectral_max_nodes = 2000;
  SubgraphSeriesOptions series;
};

std::vector<double> degree_centrality(const WordGraph& g);

struct ShortestPathMeasures {
  std::vector<double> betweenness;   // sum over pairs v<w of sigma_vw(u)/sigma_vw
  std::vector<double> closeness;     // 1 / sum of distances within the component
  std::vector<double> eccentricity;  // largest distance within the component
};

// Breadth-first search from every node. Isolated nodes get closeness and
// eccentricity 0.
ShortestPathMeasures shortest_path_measures(const WordGraph& g);

// Links among neighbors over d(d-1)/2; 0 when the degree is below 2.
std::vector<double> local_transitivity(const WordGraph& g);

// Dominant eigenvector of the adjacency matrix, nonnegative, scaled so that
// its largest entry is 1. All zeros for a graph without edges.
std::vector<double> eigenvector_centrality(const WordGraph& g,
                                           std::size_t spectral_max_nodes = 2000);

// (e^A)_uu from the eigendecomposition of A.
std::vector<double> subgraph_centrality_spectral(const WordGraph& g);

// (e^A)_uu from the power series, see SubgraphSeriesOptions.
std::vector<double> subgraph_centrality_series(const WordGraph& g,
                                               const SubgraphSeriesOptions& options = {});

// Fills degree, betweenness, closeness, eigenvector, subgraph, eccentricity
// and transitivity; the community fields are left empty.
NodeMetrics compute_centralities(const WordGraph& g, const CentralityOptions& options = {});

}  // namespace influrank

#endif  // INFLURANK_CENTRALITY_H_
