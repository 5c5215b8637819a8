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

#include "influrank/graph_features.h"

namespace influrank {
namespace {

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

UserGraphFeatures graph_features(std::span<const TokenStream> streams,
                                 const GraphFeatureOptions& options) {
  static const GreedyModularity kDefaultDetector;
  const CommunityDetector& detector =
      options.detector != nullptr ? *options.detector : kDefaultDetector;

  UserGraphFeatures f;
  f.matrix = CooccurrenceMatrix::build(streams);
  f.graph = WordGraph::from_matrix(f.matrix);
  f.nodes = compute_centralities(f.graph, options.centrality);
  f.partition = detector.detect(f.graph);
  NodeMetrics roles = community_metrics(f.graph, f.partition);
  f.nodes.embeddedness = std::move(roles.embeddedness);
  f.nodes.within_module_degree = std::move(roles.within_module_degree);
  f.nodes.participation = std::move(roles.participation);

  const NodeMetrics& n = f.nodes;
  f.averages = {mean(n.degree),       mean(n.betweenness),  mean(n.closeness),
                mean(n.eigenvector),  mean(n.subgraph),     mean(n.eccentricity),
                mean(n.transitivity), mean(n.embeddedness), mean(n.within_module_degree),
                mean(n.participation)};
  return f;
}

UserGraphFeatures user_graph_features(const UserProfile& user, const Tokenizer& tokenizer,
                                      const GraphFeatureOptions& options) {
  const std::vector<TokenStream> streams = tokenizer.user_streams(user);
  return graph_features(streams, options);
}

}  // namespace influrank
