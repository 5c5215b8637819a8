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

#include "influrank/ranking.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <unordered_set>

#include <fmt/format.h>

#include "influrank/error.h"

namespace influrank {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = std::min(text.find('\n'), text.size());
    std::string_view line = text.substr(0, end);
    text.remove_prefix(std::min(end + 1, text.size()));
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    fn(number, line);
  }
}

double parse_score(std::string_view s, std::size_t line) {
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(fmt::format("line {}: invalid score '{}'", line, s));
  }
  return value;
}

}  // namespace

std::string format_score(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  return fmt::format("{}", value);
}

RankedList RankedList::from_scores(std::vector<RankedEntry> entries) {
  std::unordered_set<std::string_view> seen;
  for (const RankedEntry& e : entries) {
    if (std::isnan(e.score) || std::isnan(e.tiebreak)) {
      throw InvalidArgument(fmt::format("NaN score for user '{}'", e.user_id));
    }
    if (!seen.insert(e.user_id).second) {
      throw InvalidArgument(fmt::format("duplicate user '{}' in ranking", e.user_id));
    }
  }
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.tiebreak != b.tiebreak) return a.tiebreak > b.tiebreak;
    return a.user_id < b.user_id;
  });
  RankedList list;
  list.entries_ = std::move(entries);
  return list;
}

std::string RankedList::to_tsv() const {
  std::string out = "rank\tuser_id\tscore\n";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out += fmt::format("{}\t{}\t{}\n", i + 1, entries_[i].user_id,
                       format_score(entries_[i].score));
  }
  return out;
}

RankedList RankedList::from_tsv(std::string_view text) {
  std::vector<RankedEntry> entries;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(fmt::format("line {}: expected 3 tab-separated fields", number));
    }
    if (fields[0] == "rank") return;
    // File order is authoritative; the rank column becomes the tie-break.
    entries.push_back({std::string(fields[1]), parse_score(fields[2], number),
                       -static_cast<double>(entries.size())});
  });
  RankedList list = from_scores(std::move(entries));
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (list.entries_[i].score > list.entries_[i - 1].score) {
      throw ParseError("ranking scores must be nonincreasing");
    }
  }
  return list;
}

std::string predictions_to_tsv(const Predictions& predictions) {
  std::string out = "user_id\tlabel\tscore\n";
  for (const Prediction& p : predictions) {
    out += fmt::format("{}\t{}\t{}\n", p.user_id, to_string(p.label), format_score(p.score));
  }
  return out;
}

Predictions predictions_from_tsv(std::string_view text) {
  Predictions out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(fmt::format("line {}: expected 3 tab-separated fields", number));
    }
    if (fields[0] == "user_id") return;
    out.push_back({std::string(fields[0]), parse_label(fields[1]), parse_score(fields[2], number)});
  });
  return out;
}

}  // namespace influrank
