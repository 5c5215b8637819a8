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

#include "influrank/weighting.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "influrank/error.h"

namespace influrank {
namespace {

bool term_less(const std::pair<std::string, Vocabulary::TermStats>& entry,
               std::string_view term) {
  return entry.first < term;
}

TermWeightVector weigh(std::vector<std::string_view> tokens, const Vocabulary& vocab) {
  std::sort(tokens.begin(), tokens.end());
  std::vector<std::pair<std::string, double>> entries;
  const double n = static_cast<double>(vocab.num_documents());
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t j = i;
    while (j < tokens.size() && tokens[j] == tokens[i]) ++j;
    if (const auto* stats = vocab.find(tokens[i])) {
      const double tf = static_cast<double>(j - i);
      const double w = tf * std::log(n / static_cast<double>(stats->df)) * vocab.gini(tokens[i]);
      if (w > 0.0) entries.emplace_back(std::string(tokens[i]), w);
    }
    i = j;
  }
  return TermWeightVector(TermWeightVector::Kind::kDocument, std::move(entries));
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::kUserAsDocument ? "uad" : "bot";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "uad") return Scheme::kUserAsDocument;
  if (name == "bot") return Scheme::kBagOfTweets;
  throw ParseError(fmt::format("unknown scheme '{}' (expected uad or bot)", name));
}

Vocabulary Vocabulary::build(std::span<const LabeledStreams> users, Scheme scheme) {
  Vocabulary vocab;
  vocab.scheme_ = scheme;
  std::unordered_map<std::string_view, TermStats> stats;
  std::unordered_set<std::string_view> document;

  auto add_document = [&](Label label) {
    ++vocab.num_documents_;
    const bool influencer = label == Label::kInfluencer;
    (influencer ? vocab.influencer_documents_ : vocab.not_influencer_documents_) += 1;
    for (std::string_view term : document) {
      TermStats& s = stats[term];
      ++s.df;
      (influencer ? s.df_influencer : s.df_not_influencer) += 1;
    }
    document.clear();
  };

  for (const LabeledStreams& user : users) {
    if (user.label == Label::kUnknown) continue;
    if (scheme == Scheme::kUserAsDocument) {
      for (const TokenStream& stream : user.streams) document.insert(stream.begin(), stream.end());
      add_document(user.label);
    } else {
      for (const TokenStream& stream : user.streams) {
        document.insert(stream.begin(), stream.end());
        add_document(user.label);
      }
    }
  }
  if (vocab.influencer_documents_ == 0 || vocab.not_influencer_documents_ == 0) {
    throw InvalidArgument(
        "training data needs at least one document of each class to define Gini purity");
  }

  vocab.terms_.reserve(stats.size());
  for (const auto& [term, s] : stats) vocab.terms_.emplace_back(std::string(term), s);
  std::sort(vocab.terms_.begin(), vocab.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return vocab;
}

std::int64_t Vocabulary::class_documents(Label label) const {
  switch (label) {
    case Label::kInfluencer: return influencer_documents_;
    case Label::kNotInfluencer: return not_influencer_documents_;
    case Label::kUnknown: return 0;
  }
  return 0;
}

const Vocabulary::TermStats* Vocabulary::find(std::string_view term) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), term, term_less);
  if (it == terms_.end() || it->first != term) return nullptr;
  return &it->second;
}

const Vocabulary::TermStats& Vocabulary::at(std::string_view term) const {
  const TermStats* s = find(term);
  if (s == nullptr) throw InvalidArgument(fmt::format("term '{}' not in vocabulary", term));
  return *s;
}

double Vocabulary::gini(std::string_view term) const {
  const TermStats& s = at(term);
  const double df = static_cast<double>(s.df);
  const double pi = static_cast<double>(s.df_influencer) / df;
  const double pn = static_cast<double>(s.df_not_influencer) / df;
  return pi * pi + pn * pn;
}

double Vocabulary::idf(std::string_view term) const {
  return std::log(static_cast<double>(num_documents_) / static_cast<double>(at(term).df));
}

Vocabulary build_vocabulary(const Corpus& train, Scheme scheme, const Tokenizer& tokenizer) {
  std::vector<LabeledStreams> users;
  users.reserve(train.size());
  for (const UserProfile& u : train.users) {
    if (u.label == Label::kUnknown) continue;
    users.push_back({tokenizer.user_streams(u), u.label});
  }
  return Vocabulary::build(users, scheme);
}

TermWeightVector::TermWeightVector(Kind kind,
                                   std::vector<std::pair<std::string, double>> entries)
    : kind_(kind) {
  for (const auto& [term, w] : entries) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument(fmt::format("invalid weight {} for term '{}'", w, term));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& entry : entries) {
    if (!entries_.empty() && entries_.back().first == entry.first) {
      entries_.back().second += entry.second;
    } else {
      entries_.push_back(std::move(entry));
    }
  }
  std::erase_if(entries_, [](const auto& e) { return e.second == 0.0; });
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.second * e.second;
  norm_ = std::sqrt(sum);
}

double TermWeightVector::weight(std::string_view term) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), term,
      [](const std::pair<std::string, double>& e, std::string_view t) { return e.first < t; });
  return it != entries_.end() && it->first == term ? it->second : 0.0;
}

TermWeightVector doc_weights(std::span<const TokenStream> document, const Vocabulary& vocab) {
  std::vector<std::string_view> tokens;
  for (const TokenStream& stream : document) tokens.insert(tokens.end(), stream.begin(), stream.end());
  return weigh(std::move(tokens), vocab);
}

TermWeightVector doc_weights(const TokenStream& document, const Vocabulary& vocab) {
  return weigh(std::vector<std::string_view>(document.begin(), document.end()), vocab);
}

TermWeightVector class_weights(Label label, const Vocabulary& vocab) {
  std::vector<std::pair<std::string, double>> entries;
  const double n = static_cast<double>(vocab.num_documents());
  for (const auto& [term, stats] : vocab.terms()) {
    const double pi = static_cast<double>(stats.df_influencer) / static_cast<double>(stats.df);
    const double pn = static_cast<double>(stats.df_not_influencer) / static_cast<double>(stats.df);
    const double w = static_cast<double>(stats.class_df(label)) *
                     std::log(n / static_cast<double>(stats.df)) * (pi * pi + pn * pn);
    if (w > 0.0) entries.emplace_back(term, w);
  }
  return TermWeightVector(TermWeightVector::Kind::kClass, std::move(entries));
}

double cosine(const TermWeightVector& a, const TermWeightVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const auto& small = a.size() <= b.size() ? a.entries() : b.entries();
  const auto& large = a.size() <= b.size() ? b.entries() : a.entries();
  double dot = 0.0;
  auto from = large.begin();
  for (const auto& [term, w] : small) {
    from = std::lower_bound(from, large.end(), term,
                            [](const std::pair<std::string, double>& e, const std::string& t) {
                              return e.first < t;
                            });
    if (from == large.end()) break;
    if (from->first == term) dot += w * from->second;
  }
  return std::clamp(dot / (a.norm() * b.norm()), 0.0, 1.0);
}

ClassVectors ClassVectors::from(const Vocabulary& vocab) {
  return {class_weights(Label::kInfluencer, vocab), class_weights(Label::kNotInfluencer, vocab)};
}

TextScore uad_score(std::span<const TokenStream> user_streams, const Vocabulary& vocab,
                    const ClassVectors& classes) {
  const TermWeightVector doc = doc_weights(user_streams, vocab);
  const double ci = cosine(doc, classes.influencer);
  const double cn = cosine(doc, classes.not_influencer);
  TextScore result;
  result.tweets = static_cast<int>(user_streams.size());
  result.label = ci > cn ? Label::kInfluencer : Label::kNotInfluencer;
  result.score = ci + cn > 0.0 ? ci / (ci + cn) : 0.0;
  result.tiebreak = ci - cn;
  return result;
}

TextScore bot_score(std::span<const TokenStream> user_streams, const Vocabulary& vocab,
                    const ClassVectors& classes) {
  TextScore result;
  result.tweets = static_cast<int>(user_streams.size());
  double margin = 0.0;
  for (const TokenStream& stream : user_streams) {
    const TermWeightVector doc = doc_weights(stream, vocab);
    const double ci = cosine(doc, classes.influencer);
    const double cn = cosine(doc, classes.not_influencer);
    if (ci > cn) ++result.influencer_tweets;
    margin += ci - cn;
  }
  result.score = result.influencer_tweets;
  result.tiebreak = result.tweets > 0 ? margin / result.tweets : 0.0;
  result.label = 2 * result.influencer_tweets > result.tweets ? Label::kInfluencer
                                                              : Label::kNotInfluencer;
  return result;
}

TextModel::TextModel(const Corpus& train, Scheme scheme, Tokenizer tokenizer)
    : tokenizer_(std::move(tokenizer)),
      vocab_(build_vocabulary(train, scheme, tokenizer_)),
      classes_(ClassVectors::from(vocab_)) {}

TextScore TextModel::score(const UserProfile& user) const {
  const std::vector<TokenStream> streams = tokenizer_.user_streams(user);
  return scheme() == Scheme::kUserAsDocument ? uad_score(streams, vocab_, classes_)
                                             : bot_score(streams, vocab_, classes_);
}

}  // namespace influrank
