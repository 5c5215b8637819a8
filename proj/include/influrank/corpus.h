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

#ifndef INFLURANK_CORPUS_H_
#define INFLURANK_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace influrank {

enum class Domain { kAutomotive, kBanking };
enum class Label { kInfluencer, kNotInfluencer, kUnknown };
enum class CorpusRole { kTrain, kTest };

inline constexpr Domain kAllDomains[] = {Domain::kAutomotive, Domain::kBanking};

// Lowercase names used in files and on the command line.
std::string_view to_string(Domain domain);
std::string_view to_string(Label label);
std::string_view to_string(CorpusRole role);

// Case-insensitive; throws ParseError on unknown names.
Domain parse_domain(std::string_view name);
Label parse_label(std::string_view name);

// Profile list lengths kept at load time: the 5,000 most recent friends and
// followers, and the 600 most recent tweets.
inline constexpr std::size_t kMaxIdListLength = 5000;
inline constexpr std::size_t kMaxTweets = 600;

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  auto operator<=>(const GeoPoint&) const = default;
};

struct Tweet {
  std::string id;
  std::string text;
  std::int64_t timestamp = 0;  // seconds since epoch, 0 when unknown
  bool is_retweet = false;
  std::int64_t retweet_count = 0;
  std::int64_t favorite_count = 0;
  std::optional<GeoPoint> geo;
  std::optional<std::string> reply_to_user;

  // Derived from `text` by parse_entities(); not serialized.
  std::vector<std::string> hashtags;
  std::vector<std::string> urls;
  std::vector<std::string> mentions;

  bool operator==(const Tweet&) const = default;
};

// Fills hashtags/urls/mentions with every whitespace-separated token of the
// text beginning with "#", "http" and "@" respectively.
void parse_entities(Tweet& tweet);

struct UserProfile {
  std::string id;
  std::string screen_name;
  Domain domain = Domain::kAutomotive;
  Label label = Label::kUnknown;

  std::int64_t statuses_count = 0;
  std::int64_t listed_count = 0;
  std::int64_t favourites_count = 0;
  std::int64_t friends_count = 0;
  std::int64_t followers_count = 0;

  std::vector<std::int64_t> friend_ids;
  std::vector<std::int64_t> follower_ids;

  bool has_picture = false;
  bool verified = false;
  bool contributors_enabled = false;
  bool has_url = false;
  std::string description;

  std::optional<double> klout_score;
  std::optional<std::int64_t> google_results;

  std::vector<Tweet> tweets;  // ascending timestamp

  bool operator==(const UserProfile&) const = default;
};

struct Corpus {
  std::vector<UserProfile> users;
  CorpusRole role = CorpusRole::kTrain;

  std::size_t size() const { return users.size(); }
  bool empty() const { return users.empty(); }

  bool operator==(const Corpus&) const = default;
};

// Parses one JSON user object. `line_number` is only used in messages.
UserProfile parse_user(std::string_view json_text, std::size_t line_number = 1);

// Parses JSON-lines text. Blank lines are skipped. Throws ParseError naming
// the offending line, including on duplicate user ids.
Corpus parse_corpus(std::string_view text, CorpusRole role);

// Reads a JSON-lines corpus, gzip-compressed or plain.
Corpus load_corpus(const std::filesystem::path& path, CorpusRole role);

std::string serialize_user(const UserProfile& user);
std::string serialize_corpus(const Corpus& corpus);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Users of `corpus` belonging to `domain`, in their original order.
Corpus split_by_domain(const Corpus& corpus, Domain domain);

// Users with a known label, in their original order.
Corpus labeled_only(const Corpus& corpus);

}  // namespace influrank

#endif  // INFLURANK_CORPUS_H_
