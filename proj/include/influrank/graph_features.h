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

#ifndef INFLURANK_GRAPH_FEATURES_H_
#define INFLURANK_GRAPH_FEATURES_H_

#include <array>
#include <span>
#include <string_view>

#include "influrank/centrality.h"
#include "influrank/community.h"
#include "influrank/cooc.h"
#include "influrank/corpus.h"
#include "influrank/graph.h"
#include "influrank/textprep.h"

namespace influrank {

// Canonical names of the averaged graph measures, in NodeMetrics field order.
inline constexpr std::array<std::string_view, 10> kGraphFeatureNames = {
    "f32_degree_avg",       "f33_betweenness_avg",  "f34_closeness_avg",
    "f35_eigenvector_avg",  "f36_subgraph_avg",     "f37_eccentricity_avg",
    "f38_transitivity_avg", "f39_embeddedness_avg", "f40_within_module_degree_avg",
    "f41_participation_avg",
};

struct UserGraphFeatures {
  CooccurrenceMatrix matrix;
  WordGraph graph;
  CommunityPartition partition;
  // Per-node values (the vector form).
  NodeMetrics nodes;
  // Arithmetic mean of each measure over the nodes, all 0 for an empty graph.
  std::array<double, 10> averages{};
};

struct GraphFeatureOptions {
  CentralityOptions centrality;
  // Defaults to GreedyModularity when null.
  const CommunityDetector* detector = nullptr;
};

UserGraphFeatures graph_features(std::span<const TokenStream> streams,
                                 const GraphFeatureOptions& options = {});

UserGraphFeatures user_graph_features(const UserProfile& user, const Tokenizer& tokenizer,
                                      const GraphFeatureOptions& options = {});

}  // namespace influrank

#endif  // INFLURANK_GRAPH_FEATURES_H_
