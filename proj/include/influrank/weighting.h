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

#ifndef INFLURANK_WEIGHTING_H_
#define INFLURANK_WEIGHTING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "influrank/corpus.h"
#include "influrank/textprep.h"

namespace influrank {

// How a user's tweets become training documents.
//   kUserAsDocument: all of a user's tweets are merged into one document.
//   kBagOfTweets: every tweet is its own document.
enum class Scheme { kUserAsDocument, kBagOfTweets };

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);

// Token streams of one labeled training user.
struct LabeledStreams {
  std::vector<TokenStream> streams;
  Label label = Label::kUnknown;
};

// Document frequencies over a labeled training collection, overall and per
// class. Users with an unknown label do not contribute documents.
class Vocabulary {
 public:
  struct TermStats {
    std::int64_t df = 0;
    std::int64_t df_influencer = 0;
    std::int64_t df_not_influencer = 0;

    std::int64_t class_df(Label label) const {
      return label == Label::kInfluencer ? df_influencer : df_not_influencer;
    }
  };

  // Throws InvalidArgument when either class has no document.
  static Vocabulary build(std::span<const LabeledStreams> users, Scheme scheme);

  Scheme scheme() const { return scheme_; }
  std::int64_t num_documents() const { return num_documents_; }
  std::int64_t class_documents(Label label) const;
  std::size_t size() const { return terms_.size(); }

  // nullptr for terms never seen in training.
  const TermStats* find(std::string_view term) const;

  // Gini purity sum_c (DF_c / DF)^2. Throws InvalidArgument for unknown terms.
  double gini(std::string_view term) const;
  // ln(N / DF). Throws InvalidArgument for unknown terms.
  double idf(std::string_view term) const;

  // Terms in lexicographic order.
  const std::vector<std::pair<std::string, TermStats>>& terms() const { return terms_; }

 private:
  const TermStats& at(std::string_view term) const;

  Scheme scheme_ = Scheme::kUserAsDocument;
  std::int64_t num_documents_ = 0;
  std::int64_t influencer_documents_ = 0;
  std::int64_t not_influencer_documents_ = 0;
  std::vector<std::pair<std::string, TermStats>> terms_;
};

// Tokenizes every labeled user of `train` and builds the vocabulary.
Vocabulary build_vocabulary(const Corpus& train, Scheme scheme, const Tokenizer& tokenizer);

// Sparse nonnegative term weights, sorted by term, zero weights dropped.
class TermWeightVector {
 public:
  enum class Kind { kDocument, kClass };

  TermWeightVector() = default;
  // Duplicate terms are summed. Throws InvalidArgument on negative or
  // non-finite weights.
  TermWeightVector(Kind kind, std::vector<std::pair<std::string, double>> entries);

  Kind kind() const { return kind_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double norm() const { return norm_; }
  double weight(std::string_view term) const;
  const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }

 private:
  Kind kind_ = Kind::kDocument;
  std::vector<std::pair<std::string, double>> entries_;
  double norm_ = 0.0;
};

// TF x ln(N/DF) x G for each term of the document, TF being the raw count.
// Terms unknown to the vocabulary are ignored.
TermWeightVector doc_weights(std::span<const TokenStream> document, const Vocabulary& vocab);
TermWeightVector doc_weights(const TokenStream& document, const Vocabulary& vocab);

// DF_c x ln(N/DF) x G for every vocabulary term.
TermWeightVector class_weights(Label label, const Vocabulary& vocab);

// Cosine similarity; 0 when either vector is empty.
double cosine(const TermWeightVector& a, const TermWeightVector& b);

struct ClassVectors {
  TermWeightVector influencer;
  TermWeightVector not_influencer;

  static ClassVectors from(const Vocabulary& vocab);
};

struct TextScore {
  Label label = Label::kNotInfluencer;
  // UaD: cos_inf / (cos_inf + cos_non). BoT: number of tweets classified
  // Influencer.
  double score = 0.0;
  // BoT: mean of (cos_inf - cos_non) over tweets, ordering equal counts.
  double tiebreak = 0.0;
  int influencer_tweets = 0;
  int tweets = 0;
};

// The user's streams form one document compared with both class vectors.
// Ties, including the all-zero case, go to NotInfluencer.
TextScore uad_score(std::span<const TokenStream> user_streams, const Vocabulary& vocab,
                    const ClassVectors& classes);

// Every stream is classified on its own; the user is an Influencer when
// strictly more than half of its tweets are.
TextScore bot_score(std::span<const TokenStream> user_streams, const Vocabulary& vocab,
                    const ClassVectors& classes);

// Vocabulary, class vectors and tokenizer for one scheme, trained on one
// corpus. Immutable after construction.
class TextModel {
 public:
  TextModel(const Corpus& train, Scheme scheme, Tokenizer tokenizer);

  TextScore score(const UserProfile& user) const;

  Scheme scheme() const { return vocab_.scheme(); }
  const Vocabulary& vocabulary() const { return vocab_; }
  const ClassVectors& classes() const { return classes_; }

 private:
  Tokenizer tokenizer_;
  Vocabulary vocab_;
  ClassVectors classes_;
};

}  // namespace influrank

#endif  // INFLURANK_WEIGHTING_H_
