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

#include "influrank/knn.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "influrank/error.h"
#include "influrank/parallel.h"

namespace influrank {
namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (b < a) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

MatrixKnn::MatrixKnn(std::vector<TrainingUser> train) {
  for (auto& u : train) {
    if (u.label != Label::kUnknown) users_.push_back(std::move(u));
  }
  if (users_.empty()) throw InvalidArgument("k-NN needs a non-empty labeled training set");

  keyed_.reserve(users_.size());
  for (const TrainingUser& u : users_) {
    const auto& words = u.matrix.words();
    std::vector<std::uint32_t> ids(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      ids[i] = word_ids_.try_emplace(words[i], static_cast<std::uint32_t>(word_ids_.size()))
                   .first->second;
    }
    std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
    pairs.reserve(u.matrix.num_pairs());
    Keyed k;
    for (const auto& e : u.matrix.entries()) {
      pairs.emplace_back(pair_key(ids[e.a], ids[e.b]), e.count);
      k.squared_norm += static_cast<std::uint64_t>(e.count) * e.count;
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [key, count] : pairs) {
      k.keys.push_back(key);
      k.counts.push_back(count);
    }
    keyed_.push_back(std::move(k));
  }
}

MatrixKnn::MatrixKnn(const Corpus& train, const Tokenizer& tokenizer, unsigned jobs)
    : MatrixKnn(parallel_map(train.size(), jobs, [&](std::size_t i) {
        const UserProfile& u = train.users[i];
        const std::vector<TokenStream> streams = tokenizer.user_streams(u);
        return TrainingUser{u.id, u.label, CooccurrenceMatrix::build(streams)};
      })) {}

MatrixKnn::Keyed MatrixKnn::key_query(const CooccurrenceMatrix& m,
                                      std::uint64_t& unmatched) const {
  const auto& words = m.words();
  std::vector<std::int64_t> ids(words.size(), -1);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (const auto it = word_ids_.find(words[i]); it != word_ids_.end()) ids[i] = it->second;
  }
  std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
  unmatched = 0;
  for (const auto& e : m.entries()) {
    const std::uint64_t sq = static_cast<std::uint64_t>(e.count) * e.count;
    if (ids[e.a] < 0 || ids[e.b] < 0) {
      // No training matrix holds this pair.
      unmatched += sq;
      continue;
    }
    pairs.emplace_back(pair_key(static_cast<std::uint32_t>(ids[e.a]),
                                static_cast<std::uint32_t>(ids[e.b])),
                       e.count);
  }
  std::sort(pairs.begin(), pairs.end());
  Keyed k;
  for (const auto& [key, count] : pairs) {
    k.keys.push_back(key);
    k.counts.push_back(count);
    k.squared_norm += static_cast<std::uint64_t>(count) * count;
  }
  return k;
}

std::vector<Neighbor> MatrixKnn::neighbors(const CooccurrenceMatrix& query, std::size_t k) const {
  if (k < 1 || k > users_.size()) {
    throw InvalidArgument(fmt::format("k must be in [1, {}], got {}", users_.size(), k));
  }
  std::uint64_t unmatched = 0;
  const Keyed q = key_query(query, unmatched);

  // |q - t|^2 = |q|^2 + |t|^2 - 2 q.t over matched keys.
  std::vector<std::uint64_t> squared(users_.size());
  for (std::size_t j = 0; j < users_.size(); ++j) {
    const Keyed& t = keyed_[j];
    std::uint64_t dot = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < q.keys.size() && b < t.keys.size()) {
      if (q.keys[a] < t.keys[b]) {
        ++a;
      } else if (t.keys[b] < q.keys[a]) {
        ++b;
      } else {
        dot += static_cast<std::uint64_t>(q.counts[a++]) * t.counts[b++];
      }
    }
    squared[j] = unmatched + q.squared_norm + t.squared_norm - 2 * dot;
  }

  std::vector<std::size_t> order(users_.size());
  std::iota(order.begin(), order.end(), 0);
  const auto closer = [&](std::size_t x, std::size_t y) {
    if (squared[x] != squared[y]) return squared[x] < squared[y];
    return users_[x].user_id < users_[y].user_id;
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    closer);
  std::vector<Neighbor> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = order[i];
    out.push_back({users_[j].user_id, users_[j].label,
                   std::sqrt(static_cast<double>(squared[j]))});
  }
  return out;
}

KnnResult MatrixKnn::classify(const CooccurrenceMatrix& query, std::size_t k) const {
  KnnResult r;
  r.neighbors = neighbors(query, k);
  std::size_t influencers = 0;
  for (const Neighbor& n : r.neighbors) influencers += n.label == Label::kInfluencer;
  r.score = static_cast<double>(influencers) / static_cast<double>(k);
  r.label = 2 * influencers > k ? Label::kInfluencer : Label::kNotInfluencer;
  return r;
}

}  // namespace influrank
