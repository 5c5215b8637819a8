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

#ifndef INFLURANK_TEXTPREP_H_
#define INFLURANK_TEXTPREP_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "influrank/corpus.h"

namespace influrank {

// Cleaned lowercase tokens of one tweet, in text order.
using TokenStream = std::vector<std::string>;

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::vector<std::string> words);

  // One word per line; blank lines and lines starting with '#' are ignored.
  static StopwordSet from_text(std::string_view text);
  static StopwordSet load(const std::filesystem::path& path);

  // The bundled merged English and Spanish list.
  static const StopwordSet& bundled();

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_set<std::string, Hash, std::equal_to<>> words_;
};

struct TokenizerOptions {
  // Keep "@user" and "#tag" tokens, minus the sigil.
  bool keep_mentions_and_hashtags = true;
  // Tokens shorter than this many characters are dropped.
  std::size_t min_token_length = 3;
};

// Lowercases, splits on whitespace, strips leading/trailing punctuation and
// drops links, stopwords and short tokens. Internal hyphens and apostrophes
// survive. Lowercasing covers ASCII and Latin-1 letters.
TokenStream tokenize(std::string_view text, const StopwordSet& stopwords,
                     const TokenizerOptions& options = {});

class Tokenizer {
 public:
  Tokenizer() : Tokenizer(StopwordSet::bundled()) {}
  explicit Tokenizer(StopwordSet stopwords, TokenizerOptions options = {})
      : stopwords_(std::move(stopwords)), options_(options) {}

  TokenStream operator()(std::string_view text) const {
    return tokenize(text, stopwords_, options_);
  }

  // One stream per unique tweet text of the user, in timestamp order.
  std::vector<TokenStream> user_streams(const UserProfile& user) const;

  const StopwordSet& stopwords() const { return stopwords_; }
  const TokenizerOptions& options() const { return options_; }

 private:
  StopwordSet stopwords_;
  TokenizerOptions options_;
};

// Texts of the user's tweets with exact duplicates removed, first occurrence
// kept.
std::vector<std::string_view> unique_tweet_texts(const UserProfile& user);

}  // namespace influrank

#endif  // INFLURANK_TEXTPREP_H_
