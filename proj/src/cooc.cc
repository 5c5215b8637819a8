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

#include "influrank/cooc.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace influrank {

CooccurrenceMatrix CooccurrenceMatrix::build(std::span<const TokenStream> streams) {
  std::map<std::pair<std::string_view, std::string_view>, std::uint32_t> pairs;
  for (const TokenStream& stream : streams) {
    for (std::size_t j = 0; j + 1 < stream.size(); ++j) {
      std::string_view x = stream[j];
      std::string_view y = stream[j + 1];
      if (y < x) std::swap(x, y);
      ++pairs[{x, y}];
    }
  }

  CooccurrenceMatrix m;
  for (const auto& [key, count] : pairs) {
    m.words_.emplace_back(key.first);
    m.words_.emplace_back(key.second);
  }
  std::sort(m.words_.begin(), m.words_.end());
  m.words_.erase(std::unique(m.words_.begin(), m.words_.end()), m.words_.end());

  auto index = [&](std::string_view w) {
    return static_cast<std::uint32_t>(
        std::lower_bound(m.words_.begin(), m.words_.end(), w) - m.words_.begin());
  };
  m.entries_.reserve(pairs.size());
  for (const auto& [key, count] : pairs) {
    m.entries_.push_back({index(key.first), index(key.second), count});
  }
  return m;
}

std::uint32_t CooccurrenceMatrix::count(std::string_view w1, std::string_view w2) const {
  if (w2 < w1) std::swap(w1, w2);
  const auto find = [&](std::string_view w) -> std::int64_t {
    const auto it = std::lower_bound(words_.begin(), words_.end(), w);
    return it != words_.end() && *it == w ? it - words_.begin() : -1;
  };
  const std::int64_t a = find(w1);
  const std::int64_t b = find(w2);
  if (a < 0 || b < 0) return 0;
  const Entry probe{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), 0};
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                                   [](const Entry& x, const Entry& y) {
                                     return std::pair(x.a, x.b) < std::pair(y.a, y.b);
                                   });
  return it != entries_.end() && it->a == probe.a && it->b == probe.b ? it->count : 0;
}

std::uint64_t CooccurrenceMatrix::total() const {
  std::uint64_t sum = 0;
  for (const Entry& e : entries_) sum += e.count;
  return sum;
}

double matrix_distance(const CooccurrenceMatrix& a, const CooccurrenceMatrix& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  // Compare pairs through their words since indices are local to a matrix.
  auto cmp = [&](const CooccurrenceMatrix::Entry& x, const CooccurrenceMatrix::Entry& y) {
    if (const int c = a.words()[x.a].compare(b.words()[y.a]); c != 0) return c;
    return a.words()[x.b].compare(b.words()[y.b]);
  };
  std::uint64_t sum = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  auto square = [](std::int64_t d) { return static_cast<std::uint64_t>(d * d); };
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size()) {
      sum += square(ea[i++].count);
    } else if (i == ea.size()) {
      sum += square(eb[j++].count);
    } else if (const int c = cmp(ea[i], eb[j]); c < 0) {
      sum += square(ea[i++].count);
    } else if (c > 0) {
      sum += square(eb[j++].count);
    } else {
      sum += square(static_cast<std::int64_t>(ea[i++].count) - eb[j++].count);
    }
  }
  return std::sqrt(static_cast<double>(sum));
}

}  // namespace influrank
