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

#ifndef INFLURANK_FEATURE_TABLE_H_
#define INFLURANK_FEATURE_TABLE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "influrank/corpus.h"
#include "influrank/features.h"
#include "influrank/graph_features.h"
#include "influrank/ranking.h"
#include "influrank/textprep.h"

namespace influrank {

struct FeatureColumn {
  std::string name;
  FeatureCategory category;
};

// One row per user: the scalar features, optionally followed by the averaged
// cooccurrence-graph measures. Absent values are NaN.
struct FeatureTable {
  std::vector<FeatureColumn> columns;
  std::vector<std::string> user_ids;
  std::vector<Label> labels;
  std::vector<std::vector<double>> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_columns() const { return columns.size(); }
  std::optional<std::size_t> find_column(std::string_view name) const;

  // Header "user_id,<column names>", one row per user, absent cells empty.
  std::string to_csv() const;
};

struct FeatureTableOptions {
  bool include_graph = true;
  GraphFeatureOptions graph;
  unsigned jobs = 1;
};

FeatureTable build_feature_table(const Corpus& corpus, const Tokenizer& tokenizer,
                                 const FeatureTableOptions& options = {});

// Same ordering rules as rank_by_feature. Throws InvalidArgument on an
// unknown column.
RankedList rank_by_column(const FeatureTable& table, std::string_view column,
                          bool descending = true);

// Column indices selected by a feature-set expression: "all", "best" (user
// activity, profile fields, stylistic aspects and external data), a
// comma-separated list of category names, or of column names.
std::vector<std::size_t> select_columns(const FeatureTable& table, std::string_view expression);

// Raw values of the selected columns; NaN for absent values.
std::vector<std::vector<double>> column_subset(const FeatureTable& table,
                                               std::span<const std::size_t> columns);

}  // namespace influrank

#endif  // INFLURANK_FEATURE_TABLE_H_
