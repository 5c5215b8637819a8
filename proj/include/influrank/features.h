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

#ifndef INFLURANK_FEATURES_H_
#define INFLURANK_FEATURES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "influrank/corpus.h"
#include "influrank/ranking.h"

namespace influrank {

enum class FeatureCategory {
  kUserActivity,           // 1-3
  kLocalTopology,          // 4-8
  kStylisticAspects,       // 9-14
  kTweetCharacteristics,   // 15-23
  kProfileFields,          // 24-28
  kExternalData,           // 30-31
  kCooccurrenceGraph,      // averaged 32-41
};

std::string_view to_string(FeatureCategory category);
FeatureCategory parse_feature_category(std::string_view name);

struct FeatureSlot {
  std::string_view name;
  FeatureCategory category;
};

// Scalar profile and tweet features, in canonical column order.
enum ScalarSlot : std::size_t {
  kF1Statuses,
  kF2Listed,
  kF3Favourites,
  kF4Friends,
  kF5Followers,
  kF6FriendFollowerIntersection,
  kF7FriendIdStd,
  kF8FollowerIdStd,
  kF9HashtagsAvg,
  kF10UrlsAvg,
  kF11MentionsAvg,
  kF12DistinctHashtagsAvg,
  kF13DistinctUrlsAvg,
  kF14DistinctMentionsAvg,
  kF15CharsAvg,
  kF15CharsStd,
  kF16RetweetsMin,
  kF16RetweetsMax,
  kF16RetweetsAvg,
  kF16RetweetsStd,
  kF17FavoritesMin,
  kF17FavoritesMax,
  kF17FavoritesAvg,
  kF17FavoritesStd,
  kF18RetweetProportion,
  kF19GapAvg,
  kF19GapStd,
  kF20GeolocatedProportion,
  kF21DistinctGeolocations,
  kF22ReplyProportion,
  kF23DistinctReplyTargets,
  kF24HasPicture,
  kF25Verified,
  kF26ContributorsEnabled,
  kF27HasUrl,
  kF28DescriptionLength,
  kF30KloutScore,
  kF31GoogleResults,
  kNumScalarSlots,
};

std::span<const FeatureSlot> scalar_feature_slots();

// Index of a scalar slot by canonical name, or nullopt.
std::optional<std::size_t> find_scalar_slot(std::string_view name);

struct FeatureVector {
  std::array<double, kNumScalarSlots> values{};
  bool klout_absent = false;
  bool google_absent = false;

  double operator[](std::size_t slot) const { return values[slot]; }
  bool absent(std::size_t slot) const {
    return (slot == kF30KloutScore && klout_absent) || (slot == kF31GoogleResults && google_absent);
  }
};

// Pure function of the profile. Averages, proportions and standard
// deviations over zero items are 0; standard deviations are population ones.
// Absent Klout or Google values are stored as 0 with the matching flag set.
FeatureVector extract_features(const UserProfile& user);

// Users ordered by one scalar feature. Equal values are ordered by id; users
// lacking the value come last. For ascending order the ranking score is the
// negated value so that scores stay nonincreasing. Throws InvalidArgument on
// an unknown feature name.
RankedList rank_by_feature(const Corpus& users, std::string_view feature, bool descending = true);

// Population mean and standard deviation; both 0 for an empty range.
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
MeanStd mean_std(std::span<const double> values);

}  // namespace influrank

#endif  // INFLURANK_FEATURES_H_
