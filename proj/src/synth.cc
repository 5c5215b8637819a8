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

#include "influrank/synth.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "influrank/error.h"

namespace influrank {
namespace {

std::string word(std::string_view prefix, std::size_t index, std::size_t width) {
  std::string letters(width, 'a');
  for (std::size_t k = width; k-- > 0;) {
    letters[k] = static_cast<char>('a' + index % 26);
    index /= 26;
  }
  return std::string(prefix) + letters;
}

std::vector<std::string> make_vocabulary(std::string_view prefix, int size) {
  std::size_t width = 2;
  while (std::pow(26.0, static_cast<double>(width)) < size) ++width;
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) words.push_back(word(prefix, static_cast<std::size_t>(i), width));
  return words;
}

std::discrete_distribution<std::size_t> zipf(std::size_t size) {
  std::vector<double> weights(size);
  for (std::size_t r = 0; r < size; ++r) weights[r] = 1.0 / static_cast<double>(r + 1);
  return std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
}

class Generator {
 public:
  Generator(const SynthConfig& config)
      : config_(config),
        vocab_(synthetic_vocabulary(config)),
        shared_(zipf(vocab_.shared.size())),
        influencer_(zipf(vocab_.influencer.size())),
        not_influencer_(zipf(vocab_.not_influencer.size())) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(config.domain)};
    rng_.seed(seq);
  }

  Corpus corpus(CorpusRole role) {
    Corpus c;
    c.role = role;
    for (int i = 0; i < config_.users_per_class; ++i) c.users.push_back(user(Label::kInfluencer));
    for (int i = 0; i < config_.users_per_class; ++i) c.users.push_back(user(Label::kNotInfluencer));
    std::shuffle(c.users.begin(), c.users.end(), rng_);
    for (std::size_t i = 0; i < c.users.size(); ++i) {
      UserProfile& u = c.users[i];
      u.id = fmt::format("{}-{}-{:05d}", to_string(config_.domain), to_string(role), i);
      u.screen_name = fmt::format("user{}{:05d}", to_string(role), i);
      for (std::size_t t = 0; t < u.tweets.size(); ++t) {
        u.tweets[t].id = fmt::format("{}-t{:03d}", u.id, t);
      }
    }
    return c;
  }

 private:
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  bool chance(double p) { return uniform() < p; }
  std::int64_t lognormal(double mu, double sigma) {
    return std::llround(std::lognormal_distribution<double>(mu, sigma)(rng_));
  }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  double topicality() {
    const double d = config_.divergence;
    if (d <= 0.0) return 0.0;
    if (d >= 1.0) return 1.0;
    const double c = config_.topicality_concentration;
    const double x = std::gamma_distribution<double>(c * d, 1.0)(rng_);
    const double y = std::gamma_distribution<double>(c * (1.0 - d), 1.0)(rng_);
    return x + y > 0.0 ? x / (x + y) : d;
  }

  std::string handle() { return fmt::format("@usr{:03d}", between(0, 299)); }

  const std::string& token(Label label, double topical) {
    if (chance(topical)) {
      return label == Label::kInfluencer ? vocab_.influencer[influencer_(rng_)]
                                         : vocab_.not_influencer[not_influencer_(rng_)];
    }
    return vocab_.shared[shared_(rng_)];
  }

  UserProfile user(Label label) {
    const bool inf = label == Label::kInfluencer;
    UserProfile u;
    u.domain = config_.domain;
    u.label = label;
    u.statuses_count = lognormal(inf ? 7.0 + std::log(2.0) : 7.0, 1.0);
    u.listed_count = lognormal(3.0, 1.2);
    u.favourites_count = lognormal(5.0, 1.5);
    u.friends_count = lognormal(6.0, 1.0);
    u.followers_count = lognormal(inf ? 6.8 : 6.0, 1.5);

    const auto friend_list = std::min<std::int64_t>(u.friends_count, 200);
    const auto follower_list = std::min<std::int64_t>(u.followers_count, 200);
    std::uniform_int_distribution<std::int64_t> id(1, 3'000'000'000LL);
    for (std::int64_t i = 0; i < friend_list; ++i) u.friend_ids.push_back(id(rng_));
    for (std::int64_t i = 0; i < follower_list; ++i) {
      // Some followers are followed back.
      if (!u.friend_ids.empty() && chance(0.2)) {
        u.follower_ids.push_back(u.friend_ids[static_cast<std::size_t>(
            between(0, static_cast<int>(u.friend_ids.size()) - 1))]);
      } else {
        u.follower_ids.push_back(id(rng_));
      }
    }

    u.has_picture = chance(0.9);
    u.verified = chance(inf ? 0.1 : 0.05);
    u.contributors_enabled = chance(0.02);
    u.has_url = chance(0.6);
    for (int i = between(5, 20); i > 0; --i) {
      if (!u.description.empty()) u.description += ' ';
      u.description += vocab_.shared[shared_(rng_)];
    }
    if (chance(0.9)) {
      u.klout_score = std::clamp(std::normal_distribution<double>(inf ? 45.0 : 40.0, 10.0)(rng_),
                                 1.0, 100.0);
    }
    if (chance(0.7)) u.google_results = lognormal(8.0, 2.0);

    const double topical = topicality();
    const int max_tweets = config_.tweets_per_user;
    const int min_tweets = std::clamp(
        static_cast<int>(std::ceil(config_.min_tweet_fraction * max_tweets)), 0, max_tweets);
    const int count = max_tweets == 0 ? 0 : between(min_tweets, max_tweets);
    std::int64_t clock = 1'380'000'000 + between(0, 10'000'000);
    for (int t = 0; t < count; ++t) {
      Tweet tw;
      clock += 1 + std::llround(std::exponential_distribution<double>(1.0 / 20000.0)(rng_));
      tw.timestamp = clock;
      std::string text;
      auto append = [&](std::string_view piece) {
        if (!text.empty()) text += ' ';
        text += piece;
      };
      tw.is_retweet = chance(0.2);
      if (tw.is_retweet) {
        append("RT");
        append(handle() + ":");
      } else if (chance(0.1)) {
        const std::string target = handle();
        tw.reply_to_user = target.substr(1);
        append(target);
      }
      for (int k = between(4, 12); k > 0; --k) {
        const std::string& w = token(label, topical);
        append(chance(0.1) ? "#" + w : w);
      }
      if (chance(0.1)) append(handle());
      if (chance(0.3)) append(fmt::format("http://t.co/{:06x}", between(0, 0xFFFFFF)));
      tw.text = std::move(text);
      tw.retweet_count = std::geometric_distribution<std::int64_t>(0.3)(rng_);
      tw.favorite_count = std::geometric_distribution<std::int64_t>(0.4)(rng_);
      if (chance(0.05)) tw.geo = GeoPoint{40.0 + between(0, 9) * 0.5, -3.0 + between(0, 9) * 0.5};
      parse_entities(tw);
      u.tweets.push_back(std::move(tw));
    }
    return u;
  }

  SynthConfig config_;
  SynthVocabulary vocab_;
  std::discrete_distribution<std::size_t> shared_;
  std::discrete_distribution<std::size_t> influencer_;
  std::discrete_distribution<std::size_t> not_influencer_;
  std::mt19937_64 rng_;
};

}  // namespace

void SynthConfig::validate() const {
  if (users_per_class < 0 || tweets_per_user < 0 || vocab_size_per_class < 0 ||
      shared_vocab_size < 0) {
    throw InvalidArgument("synthetic corpus sizes must be nonnegative");
  }
  if (!(divergence >= 0.0 && divergence <= 1.0)) {
    throw InvalidArgument(fmt::format("divergence must be in [0, 1], got {}", divergence));
  }
  if (divergence > 0.0 && vocab_size_per_class == 0) {
    throw InvalidArgument("a positive divergence needs class-exclusive vocabulary");
  }
  if (divergence < 1.0 && shared_vocab_size == 0) {
    throw InvalidArgument("a divergence below 1 needs shared vocabulary");
  }
  if (!(topicality_concentration > 0.0)) {
    throw InvalidArgument("topicality concentration must be positive");
  }
  if (!(min_tweet_fraction >= 0.0 && min_tweet_fraction <= 1.0)) {
    throw InvalidArgument("min tweet fraction must be in [0, 1]");
  }
}

SynthVocabulary synthetic_vocabulary(const SynthConfig& config) {
  return {make_vocabulary("sh", config.shared_vocab_size),
          make_vocabulary("in", config.vocab_size_per_class),
          make_vocabulary("no", config.vocab_size_per_class)};
}

SyntheticCorpora generate_synthetic(const SynthConfig& config) {
  config.validate();
  Generator gen(config);
  SyntheticCorpora out;
  out.train = gen.corpus(CorpusRole::kTrain);
  out.test = gen.corpus(CorpusRole::kTest);
  return out;
}

}  // namespace influrank
