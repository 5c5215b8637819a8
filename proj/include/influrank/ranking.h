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

#ifndef INFLURANK_RANKING_H_
#define INFLURANK_RANKING_H_

#include <cstddef>
#include <string>
#include <vector>

#include "influrank/corpus.h"

namespace influrank {

struct RankedEntry {
  std::string user_id;
  double score = 0.0;
  // Secondary key for equal scores, higher first. Not written to TSV files.
  double tiebreak = 0.0;
};

// Users ordered best first: score descending, then tiebreak descending, then
// user id ascending. Scores may be -infinity (unranked users at the bottom)
// but never NaN.
class RankedList {
 public:
  RankedList() = default;

  // Sorts `entries` into ranking order. Throws InvalidArgument on duplicate
  // ids or NaN scores.
  static RankedList from_scores(std::vector<RankedEntry> entries);

  const std::vector<RankedEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const RankedEntry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // "rank<TAB>user_id<TAB>score" lines, rank starting at 1, with a header.
  std::string to_tsv() const;
  static RankedList from_tsv(std::string_view text);

 private:
  std::vector<RankedEntry> entries_;
};

struct Prediction {
  std::string user_id;
  Label label = Label::kNotInfluencer;
  double score = 0.0;
};

using Predictions = std::vector<Prediction>;

// "user_id<TAB>label<TAB>score" lines with a header, in the given order.
std::string predictions_to_tsv(const Predictions& predictions);
Predictions predictions_from_tsv(std::string_view text);

// Shortest decimal form that round-trips, used for every score written to a
// text artifact.
std::string format_score(double value);

}  // namespace influrank

#endif  // INFLURANK_RANKING_H_
