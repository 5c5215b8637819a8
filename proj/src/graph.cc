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

#include "influrank/graph.h"

#include <algorithm>

#include <fmt/format.h>

#include "influrank/error.h"

namespace influrank {

WordGraph WordGraph::from_matrix(const CooccurrenceMatrix& matrix) {
  WordGraph g;
  g.names_ = matrix.words();
  g.adjacency_.resize(g.names_.size());
  g.weights_.resize(g.names_.size());
  // Entries are sorted by (a, b), so each adjacency list fills in order for
  // the b side; the a side is sorted afterwards.
  for (const auto& e : matrix.entries()) {
    if (e.a == e.b) continue;
    g.adjacency_[e.a].push_back(e.b);
    g.weights_[e.a].push_back(e.count);
    g.adjacency_[e.b].push_back(e.a);
    g.weights_[e.b].push_back(e.count);
    ++g.num_edges_;
  }
  for (std::size_t u = 0; u < g.names_.size(); ++u) {
    auto& adj = g.adjacency_[u];
    auto& w = g.weights_[u];
    if (std::is_sorted(adj.begin(), adj.end())) continue;
    std::vector<std::size_t> order(adj.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return adj[x] < adj[y]; });
    std::vector<NodeId> sorted_adj;
    std::vector<std::uint32_t> sorted_w;
    for (std::size_t i : order) {
      sorted_adj.push_back(adj[i]);
      sorted_w.push_back(w[i]);
    }
    adj = std::move(sorted_adj);
    w = std::move(sorted_w);
  }
  return g;
}

WordGraph WordGraph::from_edges(std::size_t num_nodes,
                                std::span<const std::pair<NodeId, NodeId>> edges) {
  WordGraph g;
  g.names_.reserve(num_nodes);
  for (std::size_t i = 0; i < num_nodes; ++i) g.names_.push_back(std::to_string(i));
  g.adjacency_.resize(num_nodes);
  for (auto [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) {
      throw InvalidArgument(fmt::format("edge ({}, {}) out of range", u, v));
    }
    if (u == v) continue;
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.weights_.resize(num_nodes);
  for (std::size_t u = 0; u < num_nodes; ++u) {
    auto& adj = g.adjacency_[u];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.weights_[u].assign(adj.size(), 1);
    g.num_edges_ += adj.size();
  }
  g.num_edges_ /= 2;
  return g;
}

bool WordGraph::has_edge(NodeId u, NodeId v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::string WordGraph::to_edge_list() const {
  std::string out;
  for (NodeId u = 0; u < names_.size(); ++u) {
    for (std::size_t k = 0; k < adjacency_[u].size(); ++k) {
      const NodeId v = adjacency_[u][k];
      if (v <= u) continue;
      out += fmt::format("{}\t{}\t{}\n", names_[u], names_[v], weights_[u][k]);
    }
  }
  return out;
}

}  // namespace influrank
