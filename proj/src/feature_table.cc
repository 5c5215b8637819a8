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

#include "influrank/feature_table.h"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "influrank/error.h"
#include "influrank/parallel.h"

namespace influrank {
namespace {

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const auto comma = std::min(s.find(','), s.size());
    std::string_view item = s.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(item);
    s.remove_prefix(std::min(comma + 1, s.size()));
  }
  return out;
}

bool is_category_name(std::string_view name) {
  try {
    parse_feature_category(name);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

}  // namespace

std::optional<std::size_t> FeatureTable::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  return std::nullopt;
}

std::string FeatureTable::to_csv() const {
  std::string out = "user_id";
  for (const FeatureColumn& c : columns) {
    out += ',';
    out += c.name;
  }
  out += '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += user_ids[r];
    for (double v : rows[r]) {
      out += ',';
      if (!std::isnan(v)) out += format_score(v);
    }
    out += '\n';
  }
  return out;
}

FeatureTable build_feature_table(const Corpus& corpus, const Tokenizer& tokenizer,
                                 const FeatureTableOptions& options) {
  FeatureTable table;
  for (const FeatureSlot& slot : scalar_feature_slots()) {
    table.columns.push_back({std::string(slot.name), slot.category});
  }
  if (options.include_graph) {
    for (std::string_view name : kGraphFeatureNames) {
      table.columns.push_back({std::string(name), FeatureCategory::kCooccurrenceGraph});
    }
  }
  table.rows = parallel_map(corpus.size(), options.jobs, [&](std::size_t i) {
    const UserProfile& u = corpus.users[i];
    const FeatureVector f = extract_features(u);
    std::vector<double> row;
    row.reserve(table.columns.size());
    for (std::size_t s = 0; s < kNumScalarSlots; ++s) {
      row.push_back(f.absent(s) ? std::numeric_limits<double>::quiet_NaN() : f[s]);
    }
    if (options.include_graph) {
      const UserGraphFeatures g = user_graph_features(u, tokenizer, options.graph);
      row.insert(row.end(), g.averages.begin(), g.averages.end());
    }
    return row;
  });
  for (const UserProfile& u : corpus.users) {
    table.user_ids.push_back(u.id);
    table.labels.push_back(u.label);
  }
  return table;
}

RankedList rank_by_column(const FeatureTable& table, std::string_view column, bool descending) {
  const auto c = table.find_column(column);
  if (!c) throw InvalidArgument(fmt::format("unknown feature '{}'", column));
  std::vector<RankedEntry> entries;
  entries.reserve(table.num_rows());
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    const double v = table.rows[r][*c];
    const double score = std::isnan(v) ? -std::numeric_limits<double>::infinity()
                                       : (descending ? v : -v);
    entries.push_back({table.user_ids[r], score, 0.0});
  }
  return RankedList::from_scores(std::move(entries));
}

std::vector<std::size_t> select_columns(const FeatureTable& table, std::string_view expression) {
  std::vector<bool> chosen(table.num_columns(), false);
  auto add_category = [&](FeatureCategory category) {
    for (std::size_t i = 0; i < table.num_columns(); ++i) {
      if (table.columns[i].category == category) chosen[i] = true;
    }
  };
  for (std::string_view item : split_commas(expression)) {
    if (item == "all") {
      chosen.assign(table.num_columns(), true);
    } else if (item == "best") {
      for (FeatureCategory c : {FeatureCategory::kUserActivity, FeatureCategory::kProfileFields,
                                FeatureCategory::kStylisticAspects, FeatureCategory::kExternalData}) {
        add_category(c);
      }
    } else if (is_category_name(item)) {
      add_category(parse_feature_category(item));
    } else if (const auto c = table.find_column(item)) {
      chosen[*c] = true;
    } else {
      throw InvalidArgument(fmt::format("unknown feature or category '{}'", item));
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) out.push_back(i);
  }
  if (out.empty()) throw InvalidArgument(fmt::format("feature set '{}' is empty", expression));
  return out;
}

std::vector<std::vector<double>> column_subset(const FeatureTable& table,
                                               std::span<const std::size_t> columns) {
  std::vector<std::vector<double>> out;
  out.reserve(table.num_rows());
  for (const auto& row : table.rows) {
    std::vector<double> r;
    r.reserve(columns.size());
    for (std::size_t c : columns) r.push_back(row[c]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace influrank
