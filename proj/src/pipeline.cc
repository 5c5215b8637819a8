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

#include "influrank/pipeline.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "influrank/cooc.h"
#include "influrank/error.h"
#include "influrank/feature_table.h"
#include "influrank/features.h"
#include "influrank/knn.h"
#include "influrank/parallel.h"
#include "influrank/weighting.h"

namespace influrank {
namespace {

bool is_graph_column(std::string_view name) {
  return std::find(kGraphFeatureNames.begin(), kGraphFeatureNames.end(), name) !=
         kGraphFeatureNames.end();
}

void require_training(const Corpus* train, const Method& method) {
  if (train == nullptr) {
    throw InvalidArgument(fmt::format("method {} needs a training corpus", method.name()));
  }
}

MethodOutput run_text(Scheme scheme, const Corpus& train, const Corpus& test,
                      const PipelineOptions& options) {
  const TextModel model(labeled_only(train), scheme, options.tokenizer);
  const std::vector<TextScore> scores = parallel_map(
      test.size(), options.jobs, [&](std::size_t i) { return model.score(test.users[i]); });
  std::vector<RankedEntry> entries;
  Predictions predictions;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const std::string& id = test.users[i].id;
    entries.push_back({id, scores[i].score, scores[i].tiebreak});
    predictions.push_back({id, scores[i].label, scores[i].score});
  }
  return {RankedList::from_scores(std::move(entries)), std::move(predictions)};
}

MethodOutput run_knn(const Corpus& train, const Corpus& test, const PipelineOptions& options) {
  const MatrixKnn knn(labeled_only(train), options.tokenizer, options.jobs);
  if (options.k < 1 || options.k > knn.size()) {
    throw InvalidArgument(
        fmt::format("k must be in [1, {}], got {}", knn.size(), options.k));
  }
  const std::vector<KnnResult> results = parallel_map(test.size(), options.jobs, [&](std::size_t i) {
    const auto matrix = CooccurrenceMatrix::build(options.tokenizer.user_streams(test.users[i]));
    return knn.classify(matrix, options.k);
  });
  std::vector<RankedEntry> entries;
  Predictions predictions;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const std::string& id = test.users[i].id;
    entries.push_back({id, results[i].score, 0.0});
    predictions.push_back({id, results[i].label, results[i].score});
  }
  return {RankedList::from_scores(std::move(entries)), std::move(predictions)};
}

MethodOutput run_logreg(const Corpus& train, const Corpus& test, const PipelineOptions& options) {
  FeatureTableOptions table_options;
  table_options.include_graph = feature_set_needs_graph(options.feature_set);
  table_options.graph = options.graph;
  table_options.jobs = options.jobs;
  const FeatureTable train_table =
      build_feature_table(labeled_only(train), options.tokenizer, table_options);
  const FeatureTable test_table = build_feature_table(test, options.tokenizer, table_options);
  const std::vector<std::size_t> columns = select_columns(train_table, options.feature_set);

  Eigen::MatrixXd x = to_matrix(column_subset(train_table, columns));
  Eigen::MatrixXd x_test = to_matrix(column_subset(test_table, columns));
  if (x_test.rows() == 0) x_test.resize(0, static_cast<Eigen::Index>(columns.size()));
  const Eigen::VectorXd medians = column_medians(x);
  fill_missing(x, medians);
  fill_missing(x_test, medians);

  Eigen::VectorXd y(x.rows());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    y(i) = train_table.labels[static_cast<std::size_t>(i)] == Label::kInfluencer ? 1.0 : 0.0;
  }
  std::vector<std::string> names;
  for (std::size_t c : columns) names.push_back(train_table.columns[c].name);
  const LogRegModel model = fit_logreg(x, y, options.logreg, std::move(names));

  std::vector<RankedEntry> entries;
  Predictions predictions;
  std::vector<double> row(columns.size());
  for (std::size_t i = 0; i < test.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      row[j] = x_test(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const double p = predict_proba(model, row);
    const std::string& id = test.users[i].id;
    entries.push_back({id, p, 0.0});
    predictions.push_back({id, p > 0.5 ? Label::kInfluencer : Label::kNotInfluencer, p});
  }
  return {RankedList::from_scores(std::move(entries)), std::move(predictions)};
}

MethodOutput run_feature(const Method& method, const Corpus& test, const PipelineOptions& options) {
  if (!is_graph_column(method.feature)) {
    return {rank_by_feature(test, method.feature, method.descending), std::nullopt};
  }
  FeatureTableOptions table_options;
  table_options.graph = options.graph;
  table_options.jobs = options.jobs;
  const FeatureTable table = build_feature_table(test, options.tokenizer, table_options);
  return {rank_by_column(table, method.feature, method.descending), std::nullopt};
}

}  // namespace

std::string Method::name() const {
  switch (kind) {
    case MethodKind::kUserAsDocument: return "uad";
    case MethodKind::kBagOfTweets: return "bot";
    case MethodKind::kKnnCooc: return "knn-cooc";
    case MethodKind::kLogReg: return "logreg";
    case MethodKind::kFeature: return "feature:" + feature + (descending ? "" : ":asc");
    case MethodKind::kFollowers: return "followers";
    case MethodKind::kMostFrequent: return "mfc";
  }
  return "unknown";
}

bool Method::needs_training() const {
  return kind == MethodKind::kUserAsDocument || kind == MethodKind::kBagOfTweets ||
         kind == MethodKind::kKnnCooc || kind == MethodKind::kLogReg;
}

Method parse_method(std::string_view text) {
  Method m;
  if (text == "uad") {
    m.kind = MethodKind::kUserAsDocument;
  } else if (text == "bot") {
    m.kind = MethodKind::kBagOfTweets;
  } else if (text == "knn-cooc") {
    m.kind = MethodKind::kKnnCooc;
  } else if (text == "logreg") {
    m.kind = MethodKind::kLogReg;
  } else if (text == "followers") {
    m.kind = MethodKind::kFollowers;
  } else if (text == "mfc") {
    m.kind = MethodKind::kMostFrequent;
  } else if (text.starts_with("feature:")) {
    m.kind = MethodKind::kFeature;
    std::string_view rest = text.substr(8);
    for (std::string_view suffix : {":asc", ":desc"}) {
      if (rest.ends_with(suffix)) {
        m.descending = suffix == ":desc";
        rest.remove_suffix(suffix.size());
        break;
      }
    }
    if (!find_scalar_slot(rest) && !is_graph_column(rest)) {
      throw InvalidArgument(fmt::format("unknown feature '{}'", rest));
    }
    m.feature = std::string(rest);
  } else {
    throw InvalidArgument(fmt::format("unknown method '{}'", text));
  }
  return m;
}

bool feature_set_needs_graph(std::string_view expression) {
  std::size_t start = 0;
  while (start <= expression.size()) {
    std::size_t end = expression.find(',', start);
    if (end == std::string_view::npos) end = expression.size();
    std::string_view item = expression.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "all" || item == "cooccurrence_graph" || is_graph_column(item)) return true;
    start = end + 1;
  }
  return false;
}

MethodOutput run_method(const Method& method, const Corpus* train, const Corpus& test,
                        const PipelineOptions& options) {
  if (method.needs_training()) require_training(train, method);
  switch (method.kind) {
    case MethodKind::kUserAsDocument:
      return run_text(Scheme::kUserAsDocument, *train, test, options);
    case MethodKind::kBagOfTweets:
      return run_text(Scheme::kBagOfTweets, *train, test, options);
    case MethodKind::kKnnCooc:
      return run_knn(*train, test, options);
    case MethodKind::kLogReg:
      return run_logreg(*train, test, options);
    case MethodKind::kFeature:
      return run_feature(method, test, options);
    case MethodKind::kFollowers:
      return {baselines(test).followers, std::nullopt};
    case MethodKind::kMostFrequent:
      return {std::nullopt, baselines(test).most_frequent};
  }
  throw InvalidArgument("unknown method");
}

std::map<std::string, std::string> describe(const Method& method, const PipelineOptions& options) {
  std::map<std::string, std::string> config{{"method", method.name()}};
  switch (method.kind) {
    case MethodKind::kKnnCooc:
      config["k"] = std::to_string(options.k);
      break;
    case MethodKind::kLogReg:
      config["lambda"] = format_score(options.logreg.lambda);
      config["max_iters"] = std::to_string(options.logreg.max_iters);
      config["tol"] = format_score(options.logreg.tol);
      config["feature_set"] = options.feature_set;
      config["imputation"] = "training median";
      break;
    default:
      break;
  }
  if ((method.kind == MethodKind::kLogReg && feature_set_needs_graph(options.feature_set)) ||
      (method.kind == MethodKind::kFeature && is_graph_column(method.feature))) {
    config["community_detection"] = "greedy modularity";
  }
  return config;
}

}  // namespace influrank
