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

#include "influrank/community.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "influrank/error.h"

namespace influrank {

void CommunityPartition::validate(std::size_t num_nodes) const {
  if (community.size() != num_nodes) {
    throw InvalidArgument(fmt::format("partition covers {} nodes, graph has {}",
                                      community.size(), num_nodes));
  }
  std::vector<bool> used(count, false);
  for (std::uint32_t c : community) {
    if (c >= count) throw InvalidArgument(fmt::format("community id {} out of range", c));
    used[c] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw InvalidArgument("community ids are not dense");
  }
}

CommunityPartition GreedyModularity::detect(const WordGraph& g) const {
  const std::size_t n = g.num_nodes();
  const auto two_m = static_cast<std::int64_t>(2 * g.num_edges());

  // Communities are named by their smallest node.
  std::vector<NodeId> owner(n);
  std::vector<std::int64_t> degree_sum(n);
  std::vector<std::map<NodeId, std::int64_t>> links(n);  // edges to neighboring communities
  std::vector<bool> alive(n, true);
  for (NodeId u = 0; u < n; ++u) {
    owner[u] = u;
    degree_sum[u] = static_cast<std::int64_t>(g.degree(u));
    for (NodeId v : g.neighbors(u)) links[u][v] = 1;
  }

  for (;;) {
    // Gain of merging c and d is proportional to 2m * l_cd - D_c * D_d.
    std::int64_t best_gain = 0;
    NodeId best_c = 0;
    NodeId best_d = 0;
    for (NodeId c = 0; c < n; ++c) {
      if (!alive[c]) continue;
      for (const auto& [d, l] : links[c]) {
        if (d <= c) continue;
        const std::int64_t gain = two_m * l - degree_sum[c] * degree_sum[d];
        if (gain > best_gain) {
          best_gain = gain;
          best_c = c;
          best_d = d;
        }
      }
    }
    if (best_gain <= 0) break;

    const NodeId c = best_c;
    const NodeId d = best_d;
    for (const auto& [e, l] : links[d]) {
      if (e == c) continue;
      links[c][e] += l;
      links[e][c] += l;
      links[e].erase(d);
    }
    links[c].erase(d);
    links[d].clear();
    degree_sum[c] += degree_sum[d];
    alive[d] = false;
    for (NodeId u = 0; u < n; ++u) {
      if (owner[u] == d) owner[u] = c;
    }
  }

  CommunityPartition p;
  p.community.resize(n);
  std::vector<std::uint32_t> dense(n, std::numeric_limits<std::uint32_t>::max());
  for (NodeId u = 0; u < n; ++u) {
    const NodeId c = owner[u];
    if (dense[c] == std::numeric_limits<std::uint32_t>::max()) {
      dense[c] = static_cast<std::uint32_t>(p.count++);
    }
    p.community[u] = dense[c];
  }
  return p;
}

double modularity(const WordGraph& g, const CommunityPartition& partition) {
  partition.validate(g.num_nodes());
  if (g.num_edges() == 0) return 0.0;
  const double m = static_cast<double>(g.num_edges());
  std::vector<double> internal(partition.count, 0.0);
  std::vector<double> degree(partition.count, 0.0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto cu = partition.community[u];
    degree[cu] += static_cast<double>(g.degree(u));
    for (NodeId v : g.neighbors(u)) {
      if (v > u && partition.community[v] == cu) internal[cu] += 1.0;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < partition.count; ++c) {
    q += internal[c] / m - (degree[c] / (2.0 * m)) * (degree[c] / (2.0 * m));
  }
  return q;
}

NodeMetrics community_metrics(const WordGraph& g, const CommunityPartition& partition) {
  partition.validate(g.num_nodes());
  const std::size_t n = g.num_nodes();
  NodeMetrics m;
  m.embeddedness.assign(n, 0.0);
  m.within_module_degree.assign(n, 0.0);
  m.participation.assign(n, 0.0);

  std::vector<double> internal(n, 0.0);
  std::map<std::uint32_t, std::int64_t> per_community;
  for (NodeId u = 0; u < n; ++u) {
    const std::size_t d = g.degree(u);
    if (d == 0) continue;
    per_community.clear();
    for (NodeId v : g.neighbors(u)) ++per_community[partition.community[v]];
    const auto own = per_community.find(partition.community[u]);
    internal[u] = own == per_community.end() ? 0.0 : static_cast<double>(own->second);
    m.embeddedness[u] = internal[u] / static_cast<double>(d);
    double concentration = 0.0;
    for (const auto& [c, count] : per_community) {
      const double share = static_cast<double>(count) / static_cast<double>(d);
      concentration += share * share;
    }
    m.participation[u] = std::max(0.0, 1.0 - concentration);
  }

  std::vector<double> sum(partition.count, 0.0);
  std::vector<double> size(partition.count, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    sum[partition.community[u]] += internal[u];
    size[partition.community[u]] += 1.0;
  }
  std::vector<double> mean(partition.count);
  for (std::size_t c = 0; c < partition.count; ++c) mean[c] = sum[c] / size[c];
  std::vector<double> ss(partition.count, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    const auto c = partition.community[u];
    ss[c] += (internal[u] - mean[c]) * (internal[u] - mean[c]);
  }
  for (NodeId u = 0; u < n; ++u) {
    const auto c = partition.community[u];
    const double sigma = std::sqrt(ss[c] / size[c]);
    m.within_module_degree[u] = sigma > 0.0 ? (internal[u] - mean[c]) / sigma : 0.0;
  }
  return m;
}

}  // namespace influrank
