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

#ifndef INFLURANK_PIPELINE_H_
#define INFLURANK_PIPELINE_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "influrank/corpus.h"
#include "influrank/eval.h"
#include "influrank/graph_features.h"
#include "influrank/learn.h"
#include "influrank/textprep.h"

namespace influrank {

enum class MethodKind {
  kUserAsDocument,  // "uad"
  kBagOfTweets,     // "bot"
  kKnnCooc,         // "knn-cooc"
  kLogReg,          // "logreg"
  kFeature,         // "feature:<column>" or "feature:<column>:asc"
  kFollowers,       // "followers"
  kMostFrequent,    // "mfc"
};

struct Method {
  MethodKind kind = MethodKind::kUserAsDocument;
  std::string feature;  // kFeature only
  bool descending = true;

  std::string name() const;
  bool needs_training() const;
};

// Throws InvalidArgument on an unknown method or feature name.
Method parse_method(std::string_view text);

struct PipelineOptions {
  std::size_t k = 5;
  LogRegOptions logreg;
  std::string feature_set = "best";
  Tokenizer tokenizer;
  GraphFeatureOptions graph;
  unsigned jobs = 1;
};

// Whether a feature-set expression refers to co-occurrence graph columns.
bool feature_set_needs_graph(std::string_view expression);

// Runs a method on one domain. `train` may be null for methods that do not
// need training data; unlabeled training users are ignored. Text and k-NN
// methods produce both a ranking and predictions, feature and follower
// rankings only a ranking, and the majority-class baseline only predictions.
MethodOutput run_method(const Method& method, const Corpus* train, const Corpus& test,
                        const PipelineOptions& options);

// Name/value pairs describing a configuration, for report echoes.
std::map<std::string, std::string> describe(const Method& method, const PipelineOptions& options);

}  // namespace influrank

#endif  // INFLURANK_PIPELINE_H_
