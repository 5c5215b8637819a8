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

#include "influrank/features.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include <fmt/format.h>

#include "influrank/error.h"

namespace influrank {
namespace {

using C = FeatureCategory;

constexpr FeatureSlot kSlots[kNumScalarSlots] = {
    {"f1_statuses", C::kUserActivity},
    {"f2_listed", C::kUserActivity},
    {"f3_favourites", C::kUserActivity},
    {"f4_friends", C::kLocalTopology},
    {"f5_followers", C::kLocalTopology},
    {"f6_friend_follower_intersection", C::kLocalTopology},
    {"f7_friend_id_std", C::kLocalTopology},
    {"f8_follower_id_std", C::kLocalTopology},
    {"f9_hashtags_avg", C::kStylisticAspects},
    {"f10_urls_avg", C::kStylisticAspects},
    {"f11_mentions_avg", C::kStylisticAspects},
    {"f12_distinct_hashtags_avg", C::kStylisticAspects},
    {"f13_distinct_urls_avg", C::kStylisticAspects},
    {"f14_distinct_mentions_avg", C::kStylisticAspects},
    {"f15_chars_avg", C::kTweetCharacteristics},
    {"f15_chars_std", C::kTweetCharacteristics},
    {"f16_retweets_min", C::kTweetCharacteristics},
    {"f16_retweets_max", C::kTweetCharacteristics},
    {"f16_retweets_avg", C::kTweetCharacteristics},
    {"f16_retweets_std", C::kTweetCharacteristics},
    {"f17_favorites_min", C::kTweetCharacteristics},
    {"f17_favorites_max", C::kTweetCharacteristics},
    {"f17_favorites_avg", C::kTweetCharacteristics},
    {"f17_favorites_std", C::kTweetCharacteristics},
    {"f18_retweet_proportion", C::kTweetCharacteristics},
    {"f19_gap_avg", C::kTweetCharacteristics},
    {"f19_gap_std", C::kTweetCharacteristics},
    {"f20_geolocated_proportion", C::kTweetCharacteristics},
    {"f21_distinct_geolocations", C::kTweetCharacteristics},
    {"f22_reply_proportion", C::kTweetCharacteristics},
    {"f23_distinct_reply_targets", C::kTweetCharacteristics},
    {"f24_has_picture", C::kProfileFields},
    {"f25_verified", C::kProfileFields},
    {"f26_contributors_enabled", C::kProfileFields},
    {"f27_has_url", C::kProfileFields},
    {"f28_description_length", C::kProfileFields},
    {"f30_klout_score", C::kExternalData},
    {"f31_google_results", C::kExternalData},
};

std::size_t utf8_length(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

template <typename T>
std::size_t distinct_count(const std::vector<T>& items) {
  return std::set<T>(items.begin(), items.end()).size();
}

double ratio(double num, std::size_t den) { return den == 0 ? 0.0 : num / static_cast<double>(den); }

struct Summary {
  double min = 0.0;
  double max = 0.0;
  double avg = 0.0;
  double std = 0.0;
};

Summary summarize(std::span<const double> values) {
  if (values.empty()) return {};
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const MeanStd ms = mean_std(values);
  return {*lo, *hi, ms.mean, ms.std};
}

}  // namespace

std::string_view to_string(FeatureCategory category) {
  switch (category) {
    case C::kUserActivity: return "user_activity";
    case C::kLocalTopology: return "local_topology";
    case C::kStylisticAspects: return "stylistic_aspects";
    case C::kTweetCharacteristics: return "tweet_characteristics";
    case C::kProfileFields: return "profile_fields";
    case C::kExternalData: return "external_data";
    case C::kCooccurrenceGraph: return "cooccurrence_graph";
  }
  return "unknown";
}

FeatureCategory parse_feature_category(std::string_view name) {
  for (C c : {C::kUserActivity, C::kLocalTopology, C::kStylisticAspects,
              C::kTweetCharacteristics, C::kProfileFields, C::kExternalData,
              C::kCooccurrenceGraph}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidArgument(fmt::format("unknown feature category '{}'", name));
}

std::span<const FeatureSlot> scalar_feature_slots() { return kSlots; }

std::optional<std::size_t> find_scalar_slot(std::string_view name) {
  for (std::size_t i = 0; i < kNumScalarSlots; ++i) {
    if (kSlots[i].name == name) return i;
  }
  return std::nullopt;
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size()))};
}

FeatureVector extract_features(const UserProfile& user) {
  FeatureVector f;
  auto& v = f.values;
  v[kF1Statuses] = static_cast<double>(user.statuses_count);
  v[kF2Listed] = static_cast<double>(user.listed_count);
  v[kF3Favourites] = static_cast<double>(user.favourites_count);
  v[kF4Friends] = static_cast<double>(user.friends_count);
  v[kF5Followers] = static_cast<double>(user.followers_count);

  const std::unordered_set<std::int64_t> friends(user.friend_ids.begin(), user.friend_ids.end());
  const std::unordered_set<std::int64_t> followers(user.follower_ids.begin(),
                                                   user.follower_ids.end());
  std::size_t common = 0;
  for (std::int64_t id : followers) common += friends.count(id);
  v[kF6FriendFollowerIntersection] = static_cast<double>(common);

  std::vector<double> ids(user.friend_ids.begin(), user.friend_ids.end());
  v[kF7FriendIdStd] = mean_std(ids).std;
  ids.assign(user.follower_ids.begin(), user.follower_ids.end());
  v[kF8FollowerIdStd] = mean_std(ids).std;

  const std::size_t n = user.tweets.size();
  double hashtags = 0, urls = 0, mentions = 0;
  double distinct_hashtags = 0, distinct_urls = 0, distinct_mentions = 0;
  std::vector<double> chars, retweets, favorites, timestamps;
  double retweet_tweets = 0, geolocated = 0, replies = 0;
  std::set<GeoPoint> geos;
  std::set<std::string> reply_targets;
  for (const Tweet& t : user.tweets) {
    hashtags += static_cast<double>(t.hashtags.size());
    urls += static_cast<double>(t.urls.size());
    mentions += static_cast<double>(t.mentions.size());
    distinct_hashtags += static_cast<double>(distinct_count(t.hashtags));
    distinct_urls += static_cast<double>(distinct_count(t.urls));
    distinct_mentions += static_cast<double>(distinct_count(t.mentions));
    chars.push_back(static_cast<double>(utf8_length(t.text)));
    retweets.push_back(static_cast<double>(t.retweet_count));
    favorites.push_back(static_cast<double>(t.favorite_count));
    timestamps.push_back(static_cast<double>(t.timestamp));
    if (t.is_retweet) ++retweet_tweets;
    if (t.geo) {
      ++geolocated;
      geos.insert(*t.geo);
    }
    if (t.reply_to_user) {
      ++replies;
      reply_targets.insert(*t.reply_to_user);
    }
  }
  v[kF9HashtagsAvg] = ratio(hashtags, n);
  v[kF10UrlsAvg] = ratio(urls, n);
  v[kF11MentionsAvg] = ratio(mentions, n);
  v[kF12DistinctHashtagsAvg] = ratio(distinct_hashtags, n);
  v[kF13DistinctUrlsAvg] = ratio(distinct_urls, n);
  v[kF14DistinctMentionsAvg] = ratio(distinct_mentions, n);

  const MeanStd c = mean_std(chars);
  v[kF15CharsAvg] = c.mean;
  v[kF15CharsStd] = c.std;

  const Summary r = summarize(retweets);
  v[kF16RetweetsMin] = r.min;
  v[kF16RetweetsMax] = r.max;
  v[kF16RetweetsAvg] = r.avg;
  v[kF16RetweetsStd] = r.std;
  const Summary fav = summarize(favorites);
  v[kF17FavoritesMin] = fav.min;
  v[kF17FavoritesMax] = fav.max;
  v[kF17FavoritesAvg] = fav.avg;
  v[kF17FavoritesStd] = fav.std;

  v[kF18RetweetProportion] = ratio(retweet_tweets, n);

  std::sort(timestamps.begin(), timestamps.end());
  std::vector<double> gaps;
  for (std::size_t i = 1; i < timestamps.size(); ++i) gaps.push_back(timestamps[i] - timestamps[i - 1]);
  const MeanStd g = mean_std(gaps);
  v[kF19GapAvg] = g.mean;
  v[kF19GapStd] = g.std;

  v[kF20GeolocatedProportion] = ratio(geolocated, n);
  v[kF21DistinctGeolocations] = static_cast<double>(geos.size());
  v[kF22ReplyProportion] = ratio(replies, n);
  v[kF23DistinctReplyTargets] = static_cast<double>(reply_targets.size());

  v[kF24HasPicture] = user.has_picture ? 1.0 : 0.0;
  v[kF25Verified] = user.verified ? 1.0 : 0.0;
  v[kF26ContributorsEnabled] = user.contributors_enabled ? 1.0 : 0.0;
  v[kF27HasUrl] = user.has_url ? 1.0 : 0.0;
  v[kF28DescriptionLength] = static_cast<double>(utf8_length(user.description));

  f.klout_absent = !user.klout_score.has_value();
  f.google_absent = !user.google_results.has_value();
  v[kF30KloutScore] = user.klout_score.value_or(0.0);
  v[kF31GoogleResults] = static_cast<double>(user.google_results.value_or(0));
  return f;
}

RankedList rank_by_feature(const Corpus& users, std::string_view feature, bool descending) {
  const auto slot = find_scalar_slot(feature);
  if (!slot) throw InvalidArgument(fmt::format("unknown feature '{}'", feature));
  std::vector<RankedEntry> entries;
  entries.reserve(users.size());
  for (const UserProfile& u : users.users) {
    const FeatureVector f = extract_features(u);
    double score = -std::numeric_limits<double>::infinity();
    if (!f.absent(*slot)) score = descending ? f[*slot] : -f[*slot];
    entries.push_back({u.id, score, 0.0});
  }
  return RankedList::from_scores(std::move(entries));
}

}  // namespace influrank
