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

#ifndef INFLURANK_LEARN_H_
#define INFLURANK_LEARN_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace influrank {

struct LogRegOptions {
  double lambda = 1.0;
  int max_iters = 5000;
  double tol = 1e-8;
};

// L2-regularized logistic regression on z-scored features. Weights of
// dropped (zero-variance) features are 0 and their std is stored as 0.
struct LogRegModel {
  std::vector<std::string> feature_names;
  Eigen::VectorXd weights;  // one per feature, in standardized units
  double intercept = 0.0;
  Eigen::VectorXd means;
  Eigen::VectorXd stds;
  std::vector<std::string> dropped;
  double lambda = 1.0;
  int iterations = 0;
  double final_loss = 0.0;
  bool converged = false;

  std::size_t num_features() const { return static_cast<std::size_t>(weights.size()); }

  // Flat JSON: weights, intercept, means, stds, lambda and the training
  // metadata.
  std::string to_json() const;
  static LogRegModel from_json(std::string_view text);
};

// Training objective at `params` = (w..., b) over standardized rows `z`:
//   (1/n) [ sum_i log(1 + e^{s_i}) - y_i s_i + (lambda/2) |w|^2 ],  s = z w + b.
double logistic_objective(const Eigen::MatrixXd& z, const Eigen::VectorXd& y,
                          const Eigen::VectorXd& params, double lambda);
Eigen::VectorXd logistic_gradient(const Eigen::MatrixXd& z, const Eigen::VectorXd& y,
                                  const Eigen::VectorXd& params, double lambda);

// Rows of `x` are examples, `y` holds 0/1 targets. Gradient descent from
// zero with a step from the curvature bound, halved whenever a step would
// increase the loss; stops when the decrease falls below tol or after
// max_iters. Throws InvalidArgument on a single-class y, non-finite X or
// mismatched sizes.
LogRegModel fit_logreg(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                       const LogRegOptions& options = {},
                       std::vector<std::string> feature_names = {});

// sigmoid(w . standardize(x) + b). Throws InvalidArgument on a size mismatch
// or non-finite input.
double predict_proba(const LogRegModel& model, std::span<const double> x);

// Median of the non-NaN entries of each column (0 for an all-NaN column).
Eigen::VectorXd column_medians(const Eigen::MatrixXd& x);
// Replaces NaN entries of each column by `fill`.
void fill_missing(Eigen::MatrixXd& x, const Eigen::VectorXd& fill);

struct PCAResult {
  Eigen::VectorXd mean;
  // Columns are unit principal axes, by decreasing eigenvalue. The largest
  // magnitude coordinate of each axis is positive.
  Eigen::MatrixXd components;
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd explained_variance_ratio;
};

// Eigendecomposition of the sample covariance of the centered rows of x.
// Throws InvalidArgument for fewer than 2 rows or too many components.
PCAResult pca(const Eigen::MatrixXd& x, std::size_t n_components);

// Row-major nested vectors to a dense matrix; all rows must have equal size.
Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows);

}  // namespace influrank

#endif  // INFLURANK_LEARN_H_
