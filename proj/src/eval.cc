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

#include "influrank/eval.h"

#include <fmt/format.h>

#include "influrank/error.h"
#include "influrank/features.h"
#include "json.hpp"

namespace influrank {
namespace {

template <typename Items, typename IdOf>
void check_same_users(const Items& items, IdOf id_of, const LabelMap& reference,
                      std::string_view what) {
  if (items.size() != reference.size()) {
    throw InvalidArgument(fmt::format("{} holds {} users, reference holds {}", what,
                                      items.size(), reference.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& item : items) {
    const std::string& id = id_of(item);
    const auto it = reference.find(id);
    if (it == reference.end()) {
      throw InvalidArgument(fmt::format("user '{}' of the {} is not in the reference", id, what));
    }
    if (it->second == Label::kUnknown) {
      throw InvalidArgument(fmt::format("reference label of user '{}' is unknown", id));
    }
    if (!seen.insert(id).second) {
      throw InvalidArgument(fmt::format("user '{}' appears twice in the {}", id, what));
    }
  }
}

ClassScores class_scores(double tp, double fp, double fn) {
  ClassScores s;
  s.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  s.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
  s.f = s.precision + s.recall > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  return s;
}

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json();
}

nlohmann::ordered_json class_json(const ClassScores& s) {
  nlohmann::ordered_json j;
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["f"] = s.f;
  return j;
}

}  // namespace

LabelMap reference_labels(const Corpus& corpus) {
  LabelMap labels;
  for (const UserProfile& u : corpus.users) {
    if (u.label != Label::kUnknown) labels.emplace(u.id, u.label);
  }
  return labels;
}

double map_score(const RankedList& ranking, const LabelMap& reference) {
  check_same_users(ranking, [](const RankedEntry& e) -> const std::string& { return e.user_id; },
                   reference, "ranking");
  double sum = 0.0;
  std::size_t found = 0;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (reference.at(ranking[i].user_id) != Label::kInfluencer) continue;
    ++found;
    sum += static_cast<double>(found) / static_cast<double>(i + 1);
  }
  return found == 0 ? 0.0 : sum / static_cast<double>(found);
}

ClassificationScores classification_scores(const Predictions& predictions,
                                           const LabelMap& reference) {
  check_same_users(predictions, [](const Prediction& p) -> const std::string& { return p.user_id; },
                   reference, "predictions");
  double tp = 0, fp = 0, fn = 0, tn = 0;  // Influencer as the positive class
  for (const Prediction& p : predictions) {
    const bool truth = reference.at(p.user_id) == Label::kInfluencer;
    const bool guess = p.label == Label::kInfluencer;
    if (truth && guess) ++tp;
    if (!truth && guess) ++fp;
    if (truth && !guess) ++fn;
    if (!truth && !guess) ++tn;
  }
  ClassificationScores s;
  s.influencer = class_scores(tp, fp, fn);
  s.not_influencer = class_scores(tn, fn, fp);
  s.macro_f = 0.5 * (s.influencer.f + s.not_influencer.f);
  return s;
}

double macro_f(const Predictions& predictions, const LabelMap& reference) {
  return classification_scores(predictions, reference).macro_f;
}

Baselines baselines(const Corpus& corpus) {
  Baselines b;
  b.followers = rank_by_feature(corpus, "f5_followers", true);
  for (const UserProfile& u : corpus.users) {
    b.most_frequent.push_back({u.id, Label::kNotInfluencer, 0.0});
  }
  return b;
}

EvaluationReport evaluate_run(const std::map<Domain, MethodOutput>& outputs,
                              const std::map<Domain, LabelMap>& references,
                              std::span<const Domain> required) {
  EvaluationReport report;
  double map_sum = 0.0;
  double f_sum = 0.0;
  std::size_t maps = 0;
  std::size_t fs = 0;
  for (Domain d : required) {
    const auto out = outputs.find(d);
    const auto ref = references.find(d);
    if (out == outputs.end() || ref == references.end()) {
      throw InvalidArgument(fmt::format("missing {} domain in run outputs", to_string(d)));
    }
    DomainReport& dr = report.domains[d];
    if (out->second.ranking) {
      dr.map = map_score(*out->second.ranking, ref->second);
      map_sum += *dr.map;
      ++maps;
    }
    if (out->second.predictions) {
      dr.classification = classification_scores(*out->second.predictions, ref->second);
      f_sum += dr.classification->macro_f;
      ++fs;
    }
  }
  if (maps == required.size() && maps > 0) report.average_map = map_sum / static_cast<double>(maps);
  if (fs == required.size() && fs > 0) report.average_macro_f = f_sum / static_cast<double>(fs);
  return report;
}

std::string EvaluationReport::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& [domain, dr] : domains) {
    nlohmann::ordered_json d;
    d["map"] = optional_number(dr.map);
    if (dr.classification) {
      d["macro_f"] = dr.classification->macro_f;
      d["per_class"]["influencer"] = class_json(dr.classification->influencer);
      d["per_class"]["not_influencer"] = class_json(dr.classification->not_influencer);
    } else {
      d["macro_f"] = nullptr;
      d["per_class"] = nullptr;
    }
    j[std::string(to_string(domain))] = std::move(d);
  }
  j["average"]["map"] = optional_number(average_map);
  j["average"]["macro_f"] = optional_number(average_macro_f);
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) c[key] = value;
  j["config"] = std::move(c);
  return j.dump(2) + "\n";
}

}  // namespace influrank
