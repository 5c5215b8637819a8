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

#ifndef INFLURANK_COMMUNITY_H_
#define INFLURANK_COMMUNITY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "influrank/centrality.h"
#include "influrank/graph.h"

namespace influrank {

struct CommunityPartition {
  // community[u] in [0, count) for every node u.
  std::vector<std::uint32_t> community;
  std::size_t count = 0;

  // Throws InvalidArgument unless the partition covers exactly `num_nodes`
  // nodes with dense ids 0..count-1.
  void validate(std::size_t num_nodes) const;
};

class CommunityDetector {
 public:
  virtual ~CommunityDetector() = default;
  virtual CommunityPartition detect(const WordGraph& g) const = 0;
};

// Agglomerative modularity maximization (Clauset, Newman and Moore): starting
// from singletons, repeatedly merge the adjacent pair of communities with the
// largest modularity gain until no merge improves modularity. Gains are
// compared in exact integer arithmetic; ties go to the pair with the smallest
// member ids. Community ids follow the order of each community's smallest
// node.
class GreedyModularity final : public CommunityDetector {
 public:
  CommunityPartition detect(const WordGraph& g) const override;
};

// Newman modularity of a partition; 0 for a graph without edges.
double modularity(const WordGraph& g, const CommunityPartition& partition);

// Fills embeddedness, within_module_degree and participation of a
// NodeMetrics; the other fields are left empty. Nodes of degree 0 get 0 for
// embeddedness and participation; a community whose internal degrees are all
// equal gives z = 0 to its members.
NodeMetrics community_metrics(const WordGraph& g, const CommunityPartition& partition);

}  // namespace influrank

#endif  // INFLURANK_COMMUNITY_H_
