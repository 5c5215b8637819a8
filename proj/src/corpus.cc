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

#include "influrank/corpus.h"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <memory>
#include <unordered_set>

#include <fmt/format.h>
#include "json.hpp"

#include "influrank/error.h"

namespace influrank {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

[[noreturn]] void fail(std::size_t line, std::string_view what) {
  throw ParseError(fmt::format("line {}: {}", line, what));
}

bool present(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it != obj.end() && !it->is_null();
}

std::string id_string(const Json& value, std::size_t line, const char* field) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  if (value.is_number_unsigned()) return std::to_string(value.get<std::uint64_t>());
  fail(line, fmt::format("field {} must be a string or integer", field));
}

std::int64_t count_field(const Json& obj, const char* key, std::size_t line) {
  if (!present(obj, key)) return 0;
  const Json& v = obj.at(key);
  if (!v.is_number()) fail(line, fmt::format("field {} must be a number", key));
  const auto n = v.is_number_float() ? static_cast<std::int64_t>(v.get<double>())
                                     : v.get<std::int64_t>();
  if (n < 0) fail(line, fmt::format("field {} must be nonnegative", key));
  return n;
}

bool bool_field(const Json& obj, const char* key, std::size_t line) {
  if (!present(obj, key)) return false;
  const Json& v = obj.at(key);
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_number_integer()) return v.get<std::int64_t>() != 0;
  fail(line, fmt::format("field {} must be a boolean", key));
}

std::string string_field(const Json& obj, const char* key, std::size_t line) {
  if (!present(obj, key)) return {};
  const Json& v = obj.at(key);
  if (!v.is_string()) fail(line, fmt::format("field {} must be a string", key));
  return v.get<std::string>();
}

std::vector<std::int64_t> id_list(const Json& obj, const char* key, std::size_t line) {
  std::vector<std::int64_t> ids;
  if (!present(obj, key)) return ids;
  const Json& v = obj.at(key);
  if (!v.is_array()) fail(line, fmt::format("field {} must be an array", key));
  ids.reserve(std::min(v.size(), kMaxIdListLength));
  for (const Json& item : v) {
    if (ids.size() == kMaxIdListLength) break;
    if (item.is_number_integer()) {
      ids.push_back(item.get<std::int64_t>());
    } else if (item.is_string()) {
      try {
        ids.push_back(std::stoll(item.get<std::string>()));
      } catch (const std::exception&) {
        fail(line, fmt::format("field {} holds a non-numeric id", key));
      }
    } else {
      fail(line, fmt::format("field {} holds a non-numeric id", key));
    }
  }
  return ids;
}

std::optional<GeoPoint> geo_field(const Json& obj, std::size_t line) {
  if (!present(obj, "geo")) return std::nullopt;
  const Json& v = obj.at("geo");
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return GeoPoint{v[0].get<double>(), v[1].get<double>()};
  }
  if (v.is_object() && v.contains("lat") && v.contains("lon") &&
      v["lat"].is_number() && v["lon"].is_number()) {
    return GeoPoint{v["lat"].get<double>(), v["lon"].get<double>()};
  }
  fail(line, "field geo must be a [lat, lon] pair");
}

Tweet parse_tweet(const Json& obj, std::size_t line) {
  if (!obj.is_object()) fail(line, "tweet must be an object");
  Tweet t;
  if (present(obj, "id")) t.id = id_string(obj.at("id"), line, "tweet id");
  t.text = string_field(obj, "text", line);
  if (present(obj, "timestamp")) {
    const Json& ts = obj.at("timestamp");
    if (!ts.is_number()) fail(line, "field timestamp must be a number");
    t.timestamp = ts.is_number_float() ? static_cast<std::int64_t>(ts.get<double>())
                                       : ts.get<std::int64_t>();
  }
  t.is_retweet = bool_field(obj, "is_retweet", line);
  t.retweet_count = count_field(obj, "retweet_count", line);
  t.favorite_count = count_field(obj, "favorite_count", line);
  t.geo = geo_field(obj, line);
  if (present(obj, "reply_to_user")) {
    t.reply_to_user = id_string(obj.at("reply_to_user"), line, "reply_to_user");
  }
  parse_entities(t);
  return t;
}

OrderedJson tweet_json(const Tweet& t) {
  OrderedJson j;
  j["id"] = t.id;
  j["text"] = t.text;
  j["timestamp"] = t.timestamp;
  j["is_retweet"] = t.is_retweet;
  j["retweet_count"] = t.retweet_count;
  j["favorite_count"] = t.favorite_count;
  j["geo"] = t.geo ? OrderedJson::array({t.geo->lat, t.geo->lon}) : OrderedJson();
  j["reply_to_user"] = t.reply_to_user ? OrderedJson(*t.reply_to_user) : OrderedJson();
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) throw IoError(fmt::format("cannot open {}", path.string()));
  std::unique_ptr<gzFile_s, int (*)(gzFile)> guard(file, gzclose);
  std::string content;
  std::array<char, 1 << 16> buffer;
  for (;;) {
    const int n = gzread(file, buffer.data(), static_cast<unsigned>(buffer.size()));
    if (n < 0) {
      int code = 0;
      throw IoError(fmt::format("cannot read {}: {}", path.string(), gzerror(file, &code)));
    }
    if (n == 0) break;
    content.append(buffer.data(), static_cast<std::size_t>(n));
  }
  return content;
}

}  // namespace

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::kAutomotive: return "automotive";
    case Domain::kBanking: return "banking";
  }
  return "unknown";
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kInfluencer: return "influencer";
    case Label::kNotInfluencer: return "not_influencer";
    case Label::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(CorpusRole role) {
  return role == CorpusRole::kTrain ? "train" : "test";
}

Domain parse_domain(std::string_view name) {
  const std::string s = lower(name);
  if (s == "automotive") return Domain::kAutomotive;
  if (s == "banking") return Domain::kBanking;
  throw ParseError(fmt::format("unknown domain '{}'", name));
}

Label parse_label(std::string_view name) {
  std::string s = lower(name);
  std::erase_if(s, [](char c) { return c == '_' || c == '-' || c == ' '; });
  if (s == "influencer" || s == "1" || s == "true") return Label::kInfluencer;
  if (s == "notinfluencer" || s == "noninfluencer" || s == "0" || s == "false") {
    return Label::kNotInfluencer;
  }
  if (s == "unknown" || s.empty()) return Label::kUnknown;
  throw ParseError(fmt::format("unknown label '{}'", name));
}

void parse_entities(Tweet& tweet) {
  tweet.hashtags.clear();
  tweet.urls.clear();
  tweet.mentions.clear();
  std::string_view rest = tweet.text;
  while (!rest.empty()) {
    const auto start = rest.find_first_not_of(" \t\n\r\f\v");
    if (start == std::string_view::npos) break;
    rest.remove_prefix(start);
    const auto end = std::min(rest.find_first_of(" \t\n\r\f\v"), rest.size());
    const std::string_view token = rest.substr(0, end);
    rest.remove_prefix(end);
    if (token.starts_with('#')) {
      tweet.hashtags.emplace_back(token);
    } else if (token.starts_with('@')) {
      tweet.mentions.emplace_back(token);
    } else if (token.starts_with("http")) {
      tweet.urls.emplace_back(token);
    }
  }
}

UserProfile parse_user(std::string_view json_text, std::size_t line) {
  Json obj;
  try {
    obj = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    fail(line, fmt::format("invalid JSON ({})", e.what()));
  }
  if (!obj.is_object()) fail(line, "expected a JSON object");
  if (!present(obj, "id")) fail(line, "missing id");
  if (!present(obj, "domain")) fail(line, "missing domain");

  UserProfile u;
  u.id = id_string(obj.at("id"), line, "id");
  u.screen_name = string_field(obj, "screen_name", line);
  try {
    const Json& d = obj.at("domain");
    if (!d.is_string()) fail(line, "field domain must be a string");
    u.domain = parse_domain(d.get<std::string>());
    if (present(obj, "label")) {
      const Json& l = obj.at("label");
      if (l.is_string()) {
        u.label = parse_label(l.get<std::string>());
      } else if (l.is_boolean()) {
        u.label = l.get<bool>() ? Label::kInfluencer : Label::kNotInfluencer;
      } else if (l.is_number_integer()) {
        u.label = l.get<std::int64_t>() != 0 ? Label::kInfluencer : Label::kNotInfluencer;
      } else {
        fail(line, "field label must be a string");
      }
    }
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.starts_with("line ")) throw;
    fail(line, what);
  }

  u.statuses_count = count_field(obj, "statuses_count", line);
  u.listed_count = count_field(obj, "listed_count", line);
  u.favourites_count = count_field(obj, "favourites_count", line);
  u.friends_count = count_field(obj, "friends_count", line);
  u.followers_count = count_field(obj, "followers_count", line);
  u.friend_ids = id_list(obj, "friend_ids", line);
  u.follower_ids = id_list(obj, "follower_ids", line);
  u.has_picture = bool_field(obj, "has_picture", line);
  u.verified = bool_field(obj, "verified", line);
  u.contributors_enabled = bool_field(obj, "contributors_enabled", line);
  u.has_url = bool_field(obj, "has_url", line);
  u.description = string_field(obj, "description", line);

  if (present(obj, "klout_score")) {
    const Json& k = obj.at("klout_score");
    if (!k.is_number()) fail(line, "field klout_score must be a number");
    u.klout_score = k.get<double>();
  }
  if (present(obj, "google_results")) {
    u.google_results = count_field(obj, "google_results", line);
  }

  if (present(obj, "tweets")) {
    const Json& tweets = obj.at("tweets");
    if (!tweets.is_array()) fail(line, "field tweets must be an array");
    u.tweets.reserve(tweets.size());
    for (const Json& t : tweets) u.tweets.push_back(parse_tweet(t, line));
  }
  std::stable_sort(u.tweets.begin(), u.tweets.end(),
                   [](const Tweet& a, const Tweet& b) { return a.timestamp < b.timestamp; });
  if (u.tweets.size() > kMaxTweets) {
    u.tweets.erase(u.tweets.begin(),
                   u.tweets.end() - static_cast<std::ptrdiff_t>(kMaxTweets));
  }
  return u;
}

Corpus parse_corpus(std::string_view text, CorpusRole role) {
  Corpus corpus;
  corpus.role = role;
  std::unordered_set<std::string> seen;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto end = std::min(text.find('\n'), text.size());
    const std::string_view line = text.substr(0, end);
    text.remove_prefix(std::min(end + 1, text.size()));
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    UserProfile user = parse_user(line, line_number);
    if (!seen.insert(user.id).second) {
      fail(line_number, fmt::format("duplicate user id '{}'", user.id));
    }
    corpus.users.push_back(std::move(user));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusRole role) {
  const std::string content = read_file(path);
  try {
    return parse_corpus(content, role);
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::string serialize_user(const UserProfile& u) {
  OrderedJson j;
  j["id"] = u.id;
  j["screen_name"] = u.screen_name;
  j["domain"] = to_string(u.domain);
  j["label"] = u.label == Label::kUnknown ? OrderedJson() : OrderedJson(to_string(u.label));
  j["statuses_count"] = u.statuses_count;
  j["listed_count"] = u.listed_count;
  j["favourites_count"] = u.favourites_count;
  j["friends_count"] = u.friends_count;
  j["followers_count"] = u.followers_count;
  j["friend_ids"] = u.friend_ids;
  j["follower_ids"] = u.follower_ids;
  j["has_picture"] = u.has_picture;
  j["verified"] = u.verified;
  j["contributors_enabled"] = u.contributors_enabled;
  j["has_url"] = u.has_url;
  j["description"] = u.description;
  j["klout_score"] = u.klout_score ? OrderedJson(*u.klout_score) : OrderedJson();
  j["google_results"] = u.google_results ? OrderedJson(*u.google_results) : OrderedJson();
  OrderedJson tweets = OrderedJson::array();
  for (const Tweet& t : u.tweets) tweets.push_back(tweet_json(t));
  j["tweets"] = std::move(tweets);
  return j.dump();
}

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const UserProfile& u : corpus.users) {
    out += serialize_user(u);
    out += '\n';
  }
  return out;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
  out << serialize_corpus(corpus);
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
}

Corpus split_by_domain(const Corpus& corpus, Domain domain) {
  Corpus out;
  out.role = corpus.role;
  for (const UserProfile& u : corpus.users) {
    if (u.domain == domain) out.users.push_back(u);
  }
  return out;
}

Corpus labeled_only(const Corpus& corpus) {
  Corpus out;
  out.role = corpus.role;
  for (const UserProfile& u : corpus.users) {
    if (u.label != Label::kUnknown) out.users.push_back(u);
  }
  return out;
}

}  // namespace influrank
