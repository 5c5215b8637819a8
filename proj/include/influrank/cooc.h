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

#ifndef INFLURANK_COOC_H_
#define INFLURANK_COOC_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "influrank/textprep.h"

namespace influrank {

// Counts of unordered word pairs found at adjacent positions of a token
// stream. Pairs never span two streams. A word repeated at adjacent positions
// yields the self pair (w, w).
class CooccurrenceMatrix {
 public:
  struct Entry {
    std::uint32_t a = 0;  // index into words(), a <= b
    std::uint32_t b = 0;
    std::uint32_t count = 0;

    bool operator==(const Entry&) const = default;
  };

  CooccurrenceMatrix() = default;

  static CooccurrenceMatrix build(std::span<const TokenStream> streams);

  // Words taking part in at least one pair, sorted.
  const std::vector<std::string>& words() const { return words_; }
  // Sorted by (a, b), which is also the lexicographic order of the words.
  const std::vector<Entry>& entries() const { return entries_; }

  std::size_t num_pairs() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::uint32_t count(std::string_view w1, std::string_view w2) const;
  // Sum of all pair counts.
  std::uint64_t total() const;

  bool operator==(const CooccurrenceMatrix&) const = default;

 private:
  std::vector<std::string> words_;
  std::vector<Entry> entries_;
};

// Euclidean distance between two matrices over the union of their pairs,
// absent pairs counting 0.
double matrix_distance(const CooccurrenceMatrix& a, const CooccurrenceMatrix& b);

}  // namespace influrank

#endif  // INFLURANK_COOC_H_
