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

#include "influrank/centrality.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include <Eigen/Dense>

namespace influrank {
namespace {

Eigen::MatrixXd dense_adjacency(const WordGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

// y = A x
void multiply(const WordGraph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    double s = 0.0;
    for (NodeId v : g.neighbors(u)) s += x[v];
    y[u] = s;
  }
}

std::size_t max_degree(const WordGraph& g) {
  std::size_t d = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) d = std::max(d, g.degree(u));
  return d;
}

std::vector<double> max_normalized(std::vector<double> v) {
  for (double& x : v) x = std::abs(x);
  const double top = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  if (top > 0.0) {
    for (double& x : v) x /= top;
  }
  return v;
}

std::vector<double> eigenvector_from(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es) {
  const Eigen::Index n = es.eigenvectors().rows();
  std::vector<double> v(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = es.eigenvectors()(i, n - 1);
  return max_normalized(std::move(v));
}

std::vector<double> subgraph_from(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es) {
  const Eigen::Index n = es.eigenvectors().rows();
  const Eigen::VectorXd exp_lambda = es.eigenvalues().array().exp();
  std::vector<double> s(static_cast<std::size_t>(n));
  // The l = 0 term alone contributes 1; clamp away rounding below it.
  for (Eigen::Index u = 0; u < n; ++u) {
    s[static_cast<std::size_t>(u)] =
        std::max(1.0, es.eigenvectors().row(u).array().square().matrix().dot(exp_lambda));
  }
  return s;
}

// Power iteration on A + I, which has the same dominant eigenvector as A but
// no eigenvalue of equal magnitude and opposite sign.
std::vector<double> eigenvector_power(const WordGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  for (int iter = 0; iter < 100000; ++iter) {
    multiply(g, x, y);
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];
      top = std::max(top, std::abs(y[i]));
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= top;
      change = std::max(change, std::abs(y[i] - x[i]));
    }
    std::swap(x, y);
    if (change < 1e-14) break;
  }
  return max_normalized(std::move(x));
}

}  // namespace

std::vector<double> degree_centrality(const WordGraph& g) {
  std::vector<double> d(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) d[u] = static_cast<double>(g.degree(u));
  return d;
}

ShortestPathMeasures shortest_path_measures(const WordGraph& g) {
  const std::size_t n = g.num_nodes();
  ShortestPathMeasures m;
  m.betweenness.assign(n, 0.0);
  m.closeness.assign(n, 0.0);
  m.eccentricity.assign(n, 0.0);

  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  order.reserve(n);
  std::deque<NodeId> queue;

  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push_back(s);
    std::int64_t total = 0;
    std::int64_t farthest = 0;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      order.push_back(u);
      total += dist[u];
      farthest = std::max(farthest, dist[u]);
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }
    m.closeness[s] = total > 0 ? 1.0 / static_cast<double>(total) : 0.0;
    m.eccentricity[s] = static_cast<double>(farthest);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) m.betweenness[w] += delta[w];
    }
  }
  // Each unordered pair was counted from both endpoints.
  for (double& b : m.betweenness) b /= 2.0;
  return m;
}

std::vector<double> local_transitivity(const WordGraph& g) {
  std::vector<double> t(g.num_nodes(), 0.0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto nu = g.neighbors(u);
    const std::size_t d = nu.size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (NodeId v : nu) {
      const auto nv = g.neighbors(v);
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++links;
          ++a;
          ++b;
        }
      }
    }
    links /= 2;
    t[u] = static_cast<double>(links) / (static_cast<double>(d * (d - 1)) / 2.0);
  }
  return t;
}

std::vector<double> eigenvector_centrality(const WordGraph& g, std::size_t spectral_max_nodes) {
  if (g.num_edges() == 0) return std::vector<double>(g.num_nodes(), 0.0);
  if (g.num_nodes() > spectral_max_nodes) return eigenvector_power(g);
  return eigenvector_from(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense_adjacency(g)));
}

std::vector<double> subgraph_centrality_spectral(const WordGraph& g) {
  if (g.empty()) return {};
  return subgraph_from(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense_adjacency(g)));
}

std::vector<double> subgraph_centrality_series(const WordGraph& g,
                                               const SubgraphSeriesOptions& options) {
  const std::size_t n = g.num_nodes();
  const double bound = static_cast<double>(max_degree(g));  // >= spectral radius
  std::vector<double> result(n, 1.0);
  std::vector<double> x(n);
  std::vector<double> y(n);
  for (NodeId u = 0; u < n; ++u) {
    std::fill(x.begin(), x.end(), 0.0);
    x[u] = 1.0;
    double sum = 1.0;
    for (int order = 1; order <= options.max_order; ++order) {
      multiply(g, x, y);
      double norm2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        y[i] /= order;
        norm2 += y[i] * y[i];
      }
      std::swap(x, y);
      sum += x[u];
      if (order < options.min_order) continue;
      // |future terms| <= |x| * sum_m (bound / (order + 1))^m
      const double r = bound / (order + 1);
      if (r < 1.0 && std::sqrt(norm2) * r / (1.0 - r) <= options.relative_tolerance * sum) break;
      if (norm2 == 0.0) break;
    }
    result[u] = sum;
  }
  return result;
}

NodeMetrics compute_centralities(const WordGraph& g, const CentralityOptions& options) {
  NodeMetrics m;
  if (g.empty()) return m;
  m.degree = degree_centrality(g);
  ShortestPathMeasures paths = shortest_path_measures(g);
  m.betweenness = std::move(paths.betweenness);
  m.closeness = std::move(paths.closeness);
  m.eccentricity = std::move(paths.eccentricity);
  m.transitivity = local_transitivity(g);
  if (g.num_nodes() <= options.spectral_max_nodes) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_adjacency(g));
    m.eigenvector = g.num_edges() == 0 ? std::vector<double>(g.num_nodes(), 0.0) : eigenvector_from(es);
    m.subgraph = subgraph_from(es);
  } else {
    m.eigenvector = eigenvector_power(g);
    m.subgraph = subgraph_centrality_series(g, options.series);
  }
  return m;
}

}  // namespace influrank
