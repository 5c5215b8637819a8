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

#ifndef INFLURANK_SYNTH_H_
#define INFLURANK_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "influrank/corpus.h"

namespace influrank {

// Parameters of the seeded synthetic corpus generator.
//
// Tokens come from three vocabularies: one shared by both classes and one
// exclusive to each class. A user with topicality t draws each token from its
// class-exclusive vocabulary with probability t and from the shared one
// otherwise. Topicality follows Beta(c*d, c*(1-d)) with d = divergence and
// c = topicality_concentration, so its mean is the divergence; d = 0 and
// d = 1 give every user exactly t = 0 and t = 1. Word ranks within each
// vocabulary are Zipf distributed.
struct SynthConfig {
  std::uint64_t seed = 1;
  int users_per_class = 250;  // per corpus
  int tweets_per_user = 100;  // upper bound of a user's tweet count
  int vocab_size_per_class = 2000;
  int shared_vocab_size = 2000;
  double divergence = 0.5;
  Domain domain = Domain::kAutomotive;

  double topicality_concentration = 2.0;
  // A user's tweet count is uniform in [ceil(f * tweets_per_user), tweets_per_user].
  double min_tweet_fraction = 0.1;

  // Throws InvalidArgument on out-of-range values.
  void validate() const;
};

struct SynthVocabulary {
  std::vector<std::string> shared;
  std::vector<std::string> influencer;
  std::vector<std::string> not_influencer;
};

SynthVocabulary synthetic_vocabulary(const SynthConfig& config);

struct SyntheticCorpora {
  Corpus train;
  Corpus test;
};

// Pure function of the configuration. Each corpus holds users_per_class
// users of each class in shuffled order; ids carry no label information.
// Influencers get stochastically larger follower counts and twice as many
// statuses in median.
SyntheticCorpora generate_synthetic(const SynthConfig& config);

}  // namespace influrank

#endif  // INFLURANK_SYNTH_H_
