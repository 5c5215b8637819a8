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

#ifndef INFLURANK_EVAL_H_
#define INFLURANK_EVAL_H_

#include <map>
#include <optional>
#include <string>
#include <span>
#include <unordered_map>
#include <unordered_set>

#include "influrank/corpus.h"
#include "influrank/ranking.h"

namespace influrank {

// Ground truth: user id to Influencer / NotInfluencer.
using LabelMap = std::unordered_map<std::string, Label>;

// Labeled users of a corpus; users with an unknown label are left out.
LabelMap reference_labels(const Corpus& corpus);

// Mean average precision of a complete ranking:
//   (1/n) sum_i p(i) R(i),
// n being the number of Influencers in the reference. 0 when the reference
// has none. Throws InvalidArgument unless the ranking holds exactly the
// reference users, or when the reference holds unknown labels.
double map_score(const RankedList& ranking, const LabelMap& reference);

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

struct ClassificationScores {
  ClassScores influencer;
  ClassScores not_influencer;
  double macro_f = 0.0;
};

// Per-class precision, recall and F1 (0 when P + R = 0) and their unweighted
// mean over the two classes. Same set requirement as map_score.
ClassificationScores classification_scores(const Predictions& predictions,
                                           const LabelMap& reference);
double macro_f(const Predictions& predictions, const LabelMap& reference);

struct Baselines {
  RankedList followers;
  Predictions most_frequent;
};

// Followers ranking and the all-NotInfluencer classifier.
Baselines baselines(const Corpus& corpus);

// Output of one method on one domain.
struct MethodOutput {
  std::optional<RankedList> ranking;
  std::optional<Predictions> predictions;
};

struct DomainReport {
  std::optional<double> map;
  std::optional<ClassificationScores> classification;
};

struct EvaluationReport {
  std::map<Domain, DomainReport> domains;
  std::optional<double> average_map;
  std::optional<double> average_macro_f;
  // Echo of the run configuration, written verbatim under "config".
  std::map<std::string, std::string> config;

  // {<domain>: {map, macro_f, per_class: {influencer: {precision, recall, f},
  //  not_influencer: {...}}}, average: {map, macro_f}, config: {...}}
  // Metrics a method does not produce are null.
  std::string to_json() const;
};

// Scores every required domain and averages over them. Throws
// InvalidArgument when a required domain has no output or no reference.
EvaluationReport evaluate_run(const std::map<Domain, MethodOutput>& outputs,
                              const std::map<Domain, LabelMap>& references,
                              std::span<const Domain> required = kAllDomains);

}  // namespace influrank

#endif  // INFLURANK_EVAL_H_
