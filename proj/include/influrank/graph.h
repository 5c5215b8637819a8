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

#ifndef INFLURANK_GRAPH_H_
#define INFLURANK_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "influrank/cooc.h"

namespace influrank {

using NodeId = std::uint32_t;

// Undirected simple graph over words. Edge weights are the cooccurrence
// counts; the nodal measures ignore them. Self pairs of the matrix are not
// edges, so a word whose only pair is (w, w) is an isolated node.
class WordGraph {
 public:
  WordGraph() = default;

  static WordGraph from_matrix(const CooccurrenceMatrix& matrix);

  // Nodes named "0".."n-1"; duplicate edges collapse, self-loops are dropped.
  static WordGraph from_edges(std::size_t num_nodes,
                              std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t num_nodes() const { return names_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return names_.empty(); }

  const std::string& name(NodeId u) const { return names_[u]; }
  const std::vector<std::string>& names() const { return names_; }
  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_[u]; }
  std::size_t degree(NodeId u) const { return adjacency_[u].size(); }
  bool has_edge(NodeId u, NodeId v) const;
  // Parallel to neighbors(u).
  std::span<const std::uint32_t> weights(NodeId u) const { return weights_[u]; }

  // "word_a<TAB>word_b<TAB>count" per edge, word_a < word_b, sorted.
  std::string to_edge_list() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::vector<std::uint32_t>> weights_;
  std::size_t num_edges_ = 0;
};

}  // namespace influrank

#endif  // INFLURANK_GRAPH_H_
