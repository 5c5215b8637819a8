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

#ifndef INFLURANK_KNN_H_
#define INFLURANK_KNN_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "influrank/cooc.h"
#include "influrank/corpus.h"
#include "influrank/textprep.h"

namespace influrank {

struct Neighbor {
  std::string user_id;
  Label label = Label::kUnknown;
  double distance = 0.0;
};

struct KnnResult {
  Label label = Label::kNotInfluencer;
  // Fraction of Influencers among the k neighbors.
  double score = 0.0;
  std::vector<Neighbor> neighbors;
};

// Nearest-neighbor classifier over cooccurrence matrices. Training matrices
// are re-keyed on a shared word index once so that each query is a merge of
// integer-keyed sorted arrays; squared distances are exact integers.
class MatrixKnn {
 public:
  struct TrainingUser {
    std::string user_id;
    Label label = Label::kUnknown;
    CooccurrenceMatrix matrix;
  };

  // Users with an unknown label are ignored. Throws InvalidArgument when no
  // labeled user remains.
  explicit MatrixKnn(std::vector<TrainingUser> train);
  MatrixKnn(const Corpus& train, const Tokenizer& tokenizer, unsigned jobs = 1);

  std::size_t size() const { return users_.size(); }

  // The k closest training users, ties by user id. Throws InvalidArgument
  // unless 1 <= k <= size().
  std::vector<Neighbor> neighbors(const CooccurrenceMatrix& query, std::size_t k) const;

  // Majority label of the k neighbors, ties to NotInfluencer.
  KnnResult classify(const CooccurrenceMatrix& query, std::size_t k) const;

 private:
  struct Keyed {
    std::vector<std::uint64_t> keys;  // sorted
    std::vector<std::uint32_t> counts;
    std::uint64_t squared_norm = 0;
  };

  Keyed key_query(const CooccurrenceMatrix& m, std::uint64_t& unmatched) const;

  std::vector<TrainingUser> users_;
  std::vector<Keyed> keyed_;
  std::unordered_map<std::string, std::uint32_t> word_ids_;
};

}  // namespace influrank

#endif  // INFLURANK_KNN_H_
