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

#include "influrank/learn.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "influrank/error.h"
#include "json.hpp"

namespace influrank {
namespace {

double softplus(double s) { return std::max(s, 0.0) + std::log1p(std::exp(-std::abs(s))); }

double sigmoid(double s) {
  if (s >= 0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

Eigen::VectorXd from_json_array(const nlohmann::json& j, const char* key) {
  const auto values = j.at(key).get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace

double logistic_objective(const Eigen::MatrixXd& z, const Eigen::VectorXd& y,
                          const Eigen::VectorXd& params, double lambda) {
  const Eigen::Index d = z.cols();
  const auto w = params.head(d);
  const double b = params(d);
  const Eigen::VectorXd s = (z * w).array() + b;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) loss += softplus(s(i)) - y(i) * s(i);
  loss += 0.5 * lambda * w.squaredNorm();
  return loss / static_cast<double>(z.rows());
}

Eigen::VectorXd logistic_gradient(const Eigen::MatrixXd& z, const Eigen::VectorXd& y,
                                  const Eigen::VectorXd& params, double lambda) {
  const Eigen::Index d = z.cols();
  const auto w = params.head(d);
  const double b = params(d);
  Eigen::VectorXd residual = (z * w).array() + b;
  for (Eigen::Index i = 0; i < residual.size(); ++i) residual(i) = sigmoid(residual(i)) - y(i);
  Eigen::VectorXd g(d + 1);
  g.head(d) = z.transpose() * residual + lambda * w;
  g(d) = residual.sum();
  return g / static_cast<double>(z.rows());
}

LogRegModel fit_logreg(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                       const LogRegOptions& options, std::vector<std::string> feature_names) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  if (y.size() != n) throw InvalidArgument("feature matrix and label vector sizes differ");
  if (!x.allFinite()) throw InvalidArgument("feature matrix has non-finite entries");
  if (!feature_names.empty() && static_cast<Eigen::Index>(feature_names.size()) != d) {
    throw InvalidArgument("feature name count differs from column count");
  }
  Eigen::Index positives = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (y(i) != 0.0 && y(i) != 1.0) throw InvalidArgument("labels must be 0 or 1");
    positives += y(i) == 1.0;
  }
  if (positives == 0 || positives == n) {
    throw InvalidArgument("logistic regression needs examples of both classes");
  }
  if (options.lambda < 0.0) throw InvalidArgument("lambda must be nonnegative");
  if (feature_names.empty()) {
    for (Eigen::Index j = 0; j < d; ++j) feature_names.push_back(fmt::format("x{}", j));
  }

  LogRegModel model;
  model.feature_names = std::move(feature_names);
  model.lambda = options.lambda;
  model.means = x.colwise().mean().transpose();
  model.stds.resize(d);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double sd = std::sqrt((x.col(j).array() - model.means(j)).square().mean());
    if (sd > 1e-12 * std::max(1.0, std::abs(model.means(j)))) {
      model.stds(j) = sd;
      kept.push_back(j);
    } else {
      model.stds(j) = 0.0;
      model.dropped.push_back(model.feature_names[static_cast<std::size_t>(j)]);
    }
  }

  const auto r = static_cast<Eigen::Index>(kept.size());
  Eigen::MatrixXd z(n, r);
  for (Eigen::Index k = 0; k < r; ++k) {
    const Eigen::Index j = kept[static_cast<std::size_t>(k)];
    z.col(k) = (x.col(j).array() - model.means(j)) / model.stds(j);
  }

  // Per-block step sizes from the Hessian bound
  //   blockdiag(Z'Z/(4n) + lambda/n, 1/4),
  // exact because standardized columns are orthogonal to the intercept.
  double curvature = 0.0;
  if (r > 0) {
    const Eigen::MatrixXd gram = z.transpose() * z / static_cast<double>(n);
    curvature = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gram, Eigen::EigenvaluesOnly)
                    .eigenvalues()
                    .maxCoeff();
  }
  Eigen::VectorXd precondition(r + 1);
  precondition.head(r).setConstant(1.0 / (0.25 * curvature + options.lambda / static_cast<double>(n)));
  precondition(r) = 4.0;

  Eigen::VectorXd params = Eigen::VectorXd::Zero(r + 1);
  double loss = logistic_objective(z, y, params, options.lambda);
  double scale = 1.0;
  int iter = 0;
  while (iter < options.max_iters) {
    ++iter;
    const Eigen::VectorXd g = logistic_gradient(z, y, params, options.lambda);
    const Eigen::VectorXd candidate = params - scale * precondition.cwiseProduct(g);
    const double next = logistic_objective(z, y, candidate, options.lambda);
    if (next > loss) {
      scale *= 0.5;
      if (scale < 1e-30) break;
      continue;
    }
    const double decrease = loss - next;
    params = candidate;
    loss = next;
    if (decrease < options.tol) {
      model.converged = true;
      break;
    }
  }

  model.weights = Eigen::VectorXd::Zero(d);
  for (Eigen::Index k = 0; k < r; ++k) model.weights(kept[static_cast<std::size_t>(k)]) = params(k);
  model.intercept = params(r);
  model.iterations = iter;
  model.final_loss = loss;
  return model;
}

double predict_proba(const LogRegModel& model, std::span<const double> x) {
  if (x.size() != model.num_features()) {
    throw InvalidArgument(fmt::format("expected {} features, got {}", model.num_features(), x.size()));
  }
  double s = model.intercept;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!std::isfinite(x[j])) throw InvalidArgument("non-finite feature value");
    const auto k = static_cast<Eigen::Index>(j);
    if (model.stds(k) > 0.0) s += model.weights(k) * (x[j] - model.means(k)) / model.stds(k);
  }
  return sigmoid(s);
}

Eigen::VectorXd column_medians(const Eigen::MatrixXd& x) {
  Eigen::VectorXd medians = Eigen::VectorXd::Zero(x.cols());
  std::vector<double> values;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    values.clear();
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      if (!std::isnan(x(i, j))) values.push_back(x(i, j));
    }
    if (values.empty()) continue;
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size() / 2;
    medians(j) = values.size() % 2 == 1 ? values[m] : 0.5 * (values[m - 1] + values[m]);
  }
  return medians;
}

void fill_missing(Eigen::MatrixXd& x, const Eigen::VectorXd& fill) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      if (std::isnan(x(i, j))) x(i, j) = fill(j);
    }
  }
}

std::string LogRegModel::to_json() const {
  nlohmann::ordered_json j;
  j["feature_names"] = feature_names;
  j["weights"] = to_vector(weights);
  j["intercept"] = intercept;
  j["means"] = to_vector(means);
  j["stds"] = to_vector(stds);
  j["lambda"] = lambda;
  j["dropped"] = dropped;
  j["iterations"] = iterations;
  j["final_loss"] = final_loss;
  j["converged"] = converged;
  return j.dump(2);
}

LogRegModel LogRegModel::from_json(std::string_view text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    LogRegModel m;
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    m.weights = from_json_array(j, "weights");
    m.intercept = j.at("intercept").get<double>();
    m.means = from_json_array(j, "means");
    m.stds = from_json_array(j, "stds");
    m.lambda = j.at("lambda").get<double>();
    m.dropped = j.value("dropped", std::vector<std::string>{});
    m.iterations = j.value("iterations", 0);
    m.final_loss = j.value("final_loss", 0.0);
    m.converged = j.value("converged", false);
    if (m.means.size() != m.weights.size() || m.stds.size() != m.weights.size() ||
        static_cast<Eigen::Index>(m.feature_names.size()) != m.weights.size()) {
      throw ParseError("model arrays have inconsistent sizes");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("invalid model JSON: {}", e.what()));
  }
}

PCAResult pca(const Eigen::MatrixXd& x, std::size_t n_components) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  if (n < 2) throw InvalidArgument("PCA needs at least 2 samples");
  if (static_cast<Eigen::Index>(n_components) > d) {
    throw InvalidArgument(fmt::format("{} components requested, only {} features",
                                      n_components, d));
  }
  PCAResult result;
  result.mean = x.colwise().mean().transpose();
  const Eigen::MatrixXd centered = x.rowwise() - result.mean.transpose();
  const Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(n - 1);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);

  const auto k = static_cast<Eigen::Index>(n_components);
  result.components.resize(d, k);
  result.eigenvalues.resize(k);
  double total = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) total += std::max(0.0, es.eigenvalues()(i));
  for (Eigen::Index c = 0; c < k; ++c) {
    const Eigen::Index src = d - 1 - c;  // eigenvalues come ascending
    Eigen::VectorXd axis = es.eigenvectors().col(src);
    Eigen::Index arg = 0;
    axis.cwiseAbs().maxCoeff(&arg);
    if (axis(arg) < 0) axis = -axis;
    result.components.col(c) = axis;
    result.eigenvalues(c) = std::max(0.0, es.eigenvalues()(src));
  }
  result.explained_variance_ratio =
      total > 0.0 ? Eigen::VectorXd(result.eigenvalues / total) : Eigen::VectorXd::Zero(k);
  return result;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const std::size_t d = rows.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) throw InvalidArgument("rows have different lengths");
    for (std::size_t j = 0; j < d; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

}  // namespace influrank
