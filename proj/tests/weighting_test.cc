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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "influrank/error.h"
#include "influrank/weighting.h"
#include "test_util.h"

namespace influrank {
namespace {

using Streams = std::vector<TokenStream>;

LabeledStreams user(Label label, Streams streams) { return {std::move(streams), label}; }

TEST(Vocabulary, UserAsDocumentCounts) {
  const std::vector<LabeledStreams> users = {user(Label::kInfluencer, {{"alpha"}}),
                                             user(Label::kNotInfluencer, {{"beta"}})};
  const Vocabulary v = Vocabulary::build(users, Scheme::kUserAsDocument);
  EXPECT_EQ(v.num_documents(), 2);
  EXPECT_EQ(v.find("alpha")->df, 1);
  EXPECT_EQ(v.find("beta")->df, 1);
  EXPECT_EQ(v.find("gamma"), nullptr);
}

TEST(Vocabulary, BagOfTweetsCountsTweets) {
  const std::vector<LabeledStreams> users = {
      user(Label::kInfluencer, {{"a1"}, {"a1", "a1"}, {"b1"}}),
      user(Label::kNotInfluencer, {{"c1"}})};
  const Vocabulary v = Vocabulary::build(users, Scheme::kBagOfTweets);
  EXPECT_EQ(v.num_documents(), 4);
  EXPECT_EQ(v.class_documents(Label::kInfluencer), 3);
  EXPECT_EQ(v.find("a1")->df, 2);
}

TEST(Vocabulary, UbiquitousTermHasZeroIdf) {
  const std::vector<LabeledStreams> users = {user(Label::kInfluencer, {{"all", "x"}}),
                                             user(Label::kNotInfluencer, {{"all"}})};
  const Vocabulary v = Vocabulary::build(users, Scheme::kUserAsDocument);
  EXPECT_EQ(v.find("all")->df, v.num_documents());
  EXPECT_EQ(v.idf("all"), 0.0);
  const TermWeightVector w = doc_weights(TokenStream{"all", "all", "x"}, v);
  EXPECT_EQ(w.weight("all"), 0.0);
  EXPECT_EQ(w.size(), 1u);  // zero weights are not stored
}

TEST(Vocabulary, MissingClassIsError) {
  const std::vector<LabeledStreams> users = {user(Label::kInfluencer, {{"a"}})};
  EXPECT_THROW(Vocabulary::build(users, Scheme::kUserAsDocument), InvalidArgument);
}

Vocabulary split_vocab(int inf, int non, int others = 0) {
  std::vector<LabeledStreams> users;
  for (int i = 0; i < inf; ++i) users.push_back(user(Label::kInfluencer, {{"term"}}));
  for (int i = 0; i < non; ++i) users.push_back(user(Label::kNotInfluencer, {{"term"}}));
  for (int i = 0; i < others; ++i) {
    users.push_back(user(i % 2 ? Label::kInfluencer : Label::kNotInfluencer, {{"filler"}}));
  }
  return Vocabulary::build(users, Scheme::kUserAsDocument);
}

TEST(Gini, Examples) {
  EXPECT_DOUBLE_EQ(split_vocab(3, 0, 2).gini("term"), 1.0);
  EXPECT_DOUBLE_EQ(split_vocab(2, 2).gini("term"), 0.5);
  EXPECT_DOUBLE_EQ(split_vocab(3, 1).gini("term"), 0.625);
  EXPECT_THROW(split_vocab(1, 1).gini("unknown"), InvalidArgument);
}

TEST(Gini, RangeOnRandomSplits) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int a = std::uniform_int_distribution<int>(0, 10)(rng);
    const int b = std::uniform_int_distribution<int>(a == 0 ? 1 : 0, 10)(rng);
    const double g = split_vocab(a, b, 2).gini("term");
    EXPECT_GT(g, 0.0);
    EXPECT_LE(g, 1.0);
    EXPECT_EQ(g == 1.0, a == 0 || b == 0);
    if (a == b) EXPECT_DOUBLE_EQ(g, 0.5);
  }
}

TEST(Weights, DocumentFormula) {
  // N = 4, DF(term) = 1 and pure, TF = 2.
  std::vector<LabeledStreams> users = {user(Label::kInfluencer, {{"term"}}),
                                       user(Label::kInfluencer, {{"x1"}}),
                                       user(Label::kNotInfluencer, {{"x2"}}),
                                       user(Label::kNotInfluencer, {{"x3"}})};
  const Vocabulary v = Vocabulary::build(users, Scheme::kUserAsDocument);
  const TermWeightVector w = doc_weights(TokenStream{"term", "oov", "term"}, v);
  EXPECT_NEAR(w.weight("term"), 2.0 * std::log(4.0), 1e-12);
  EXPECT_NEAR(w.weight("term"), 2.7726, 1e-4);
  EXPECT_EQ(w.weight("oov"), 0.0);
  EXPECT_EQ(w.kind(), TermWeightVector::Kind::kDocument);
  EXPECT_TRUE(doc_weights(TokenStream{}, v).empty());
}

TEST(Weights, ClassFormula) {
  const Vocabulary v = split_vocab(3, 1, 4);  // N = 8, DF(term) = 4
  const TermWeightVector inf = class_weights(Label::kInfluencer, v);
  const TermWeightVector non = class_weights(Label::kNotInfluencer, v);
  EXPECT_NEAR(inf.weight("term"), 3 * std::log(2.0) * 0.625, 1e-12);
  EXPECT_NEAR(non.weight("term"), 1 * std::log(2.0) * 0.625, 1e-12);
  EXPECT_EQ(inf.kind(), TermWeightVector::Kind::kClass);
}

TEST(Weights, MonotoneInTf) {
  const Vocabulary v = split_vocab(1, 0, 3);
  double last = 0.0;
  TokenStream doc;
  for (int tf = 1; tf <= 10; ++tf) {
    doc.push_back("term");
    const double w = doc_weights(doc, v).weight("term");
    EXPECT_GE(w, last);
    last = w;
  }
}

TEST(Cosine, Examples) {
  using K = TermWeightVector::Kind;
  const TermWeightVector ab(K::kDocument, {{"a", 1.0}, {"b", 1.0}});
  const TermWeightVector a(K::kClass, {{"a", 1.0}});
  const TermWeightVector c(K::kClass, {{"c", 2.0}});
  EXPECT_NEAR(cosine(ab, ab), 1.0, 1e-15);
  EXPECT_EQ(cosine(ab, c), 0.0);
  EXPECT_NEAR(cosine(ab, a), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(cosine(ab, TermWeightVector{}), 0.0);
}

TEST(Cosine, SymmetryAndScaleInvariance) {
  using K = TermWeightVector::Kind;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> w(0.1, 5.0);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::pair<std::string, double>> x, y, ax;
    const double alpha = w(rng);
    for (int i = 0; i < 8; ++i) {
      const std::string term = "t" + std::to_string(i);
      if (std::bernoulli_distribution(0.6)(rng)) {
        const double v = w(rng);
        x.emplace_back(term, v);
        ax.emplace_back(term, alpha * v);
      }
      if (std::bernoulli_distribution(0.6)(rng)) y.emplace_back(term, w(rng));
    }
    const TermWeightVector vx(K::kDocument, x), vy(K::kDocument, y), vax(K::kDocument, ax);
    EXPECT_NEAR(cosine(vx, vy), cosine(vy, vx), 1e-15);
    EXPECT_NEAR(cosine(vax, vy), cosine(vx, vy), 1e-12);
    if (!vx.empty()) EXPECT_NEAR(cosine(vx, vx), 1.0, 1e-12);
    EXPECT_GE(cosine(vx, vy), 0.0);
    EXPECT_LE(cosine(vx, vy), 1.0);
  }
}

TEST(Weighting, SummedDuplicatesAndDroppedZeros) {
  const TermWeightVector v(TermWeightVector::Kind::kDocument,
                           {{"b", 1.0}, {"a", 2.0}, {"b", 0.5}, {"z", 0.0}});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v.entries()[0].first, "a");
  EXPECT_DOUBLE_EQ(v.weight("b"), 1.5);
  EXPECT_NEAR(v.norm(), std::sqrt(4.0 + 2.25), 1e-15);
}

struct Toy {
  Vocabulary vocab;
  ClassVectors classes;
};

Toy toy(Scheme scheme) {
  const std::vector<LabeledStreams> users = {
      user(Label::kInfluencer, {{"alpha", "shared"}, {"alpha"}}),
      user(Label::kNotInfluencer, {{"beta", "shared"}, {"beta"}}),
      user(Label::kNotInfluencer, {{"gamma"}})};
  Toy t{Vocabulary::build(users, scheme), {}};
  t.classes = ClassVectors::from(t.vocab);
  return t;
}

TEST(UserAsDocument, InfluencerOnlyTokens) {
  const Toy t = toy(Scheme::kUserAsDocument);
  const Streams s = {{"alpha", "alpha"}};
  const TextScore r = uad_score(s, t.vocab, t.classes);
  EXPECT_EQ(r.label, Label::kInfluencer);
  EXPECT_DOUBLE_EQ(r.score, 1.0);
}

TEST(UserAsDocument, NoTokens) {
  const Toy t = toy(Scheme::kUserAsDocument);
  const Streams s = {{}, {"unseen"}};
  const TextScore r = uad_score(s, t.vocab, t.classes);
  EXPECT_EQ(r.label, Label::kNotInfluencer);
  EXPECT_EQ(r.score, 0.0);
  EXPECT_EQ(uad_score(Streams{}, t.vocab, t.classes).score, 0.0);
}

TEST(UserAsDocument, ScoreIsNormalizedCosine) {
  const Toy t = toy(Scheme::kUserAsDocument);
  const Streams s = {{"alpha", "beta", "beta", "gamma"}};
  const TermWeightVector d = doc_weights(s, t.vocab);
  const double ci = cosine(d, t.classes.influencer);
  const double cn = cosine(d, t.classes.not_influencer);
  const TextScore r = uad_score(s, t.vocab, t.classes);
  EXPECT_NEAR(r.score, ci / (ci + cn), 1e-15);
  EXPECT_EQ(r.label, ci > cn ? Label::kInfluencer : Label::kNotInfluencer);
}

TEST(UserAsDocument, LabelInvariantUnderDuplication) {
  std::mt19937_64 rng(5);
  const Toy t = toy(Scheme::kUserAsDocument);
  const std::vector<std::string> words = {"alpha", "beta", "gamma", "shared", "oov"};
  for (int trial = 0; trial < 200; ++trial) {
    Streams s;
    for (int i = 0; i < 3; ++i) {
      TokenStream ts;
      for (int j = 0; j < 4; ++j) ts.push_back(words[rng() % words.size()]);
      s.push_back(ts);
    }
    Streams doubled = s;
    doubled.insert(doubled.end(), s.begin(), s.end());
    const TextScore a = uad_score(s, t.vocab, t.classes);
    const TextScore b = uad_score(doubled, t.vocab, t.classes);
    EXPECT_EQ(a.label, b.label);
    EXPECT_NEAR(a.score, b.score, 1e-12);
  }
}

TEST(BagOfTweets, MajorityRule) {
  const Toy t = toy(Scheme::kBagOfTweets);
  const TextScore one_of_three =
      bot_score(Streams{{"alpha"}, {"beta"}, {"gamma"}}, t.vocab, t.classes);
  EXPECT_EQ(one_of_three.label, Label::kNotInfluencer);
  EXPECT_EQ(one_of_three.score, 1.0);
  EXPECT_EQ(one_of_three.influencer_tweets, 1);
  EXPECT_EQ(one_of_three.tweets, 3);

  const TextScore all = bot_score(Streams{{"alpha"}, {"alpha"}}, t.vocab, t.classes);
  EXPECT_EQ(all.label, Label::kInfluencer);
  EXPECT_EQ(all.score, 2.0);

  const TextScore half = bot_score(Streams{{"alpha"}, {"beta"}}, t.vocab, t.classes);
  EXPECT_EQ(half.label, Label::kNotInfluencer);

  const TextScore none = bot_score(Streams{}, t.vocab, t.classes);
  EXPECT_EQ(none.label, Label::kNotInfluencer);
  EXPECT_EQ(none.score, 0.0);
}

TEST(BagOfTweets, TiebreakIsMeanMargin) {
  const Toy t = toy(Scheme::kBagOfTweets);
  const Streams s = {{"alpha"}, {"beta", "shared"}};
  double margin = 0.0;
  for (const TokenStream& ts : s) {
    const TermWeightVector d = doc_weights(ts, t.vocab);
    margin += cosine(d, t.classes.influencer) - cosine(d, t.classes.not_influencer);
  }
  EXPECT_NEAR(bot_score(s, t.vocab, t.classes).tiebreak, margin / 2.0, 1e-15);
}

TEST(TextModel, ScoresUsers) {
  Corpus train{{testing::make_user("i1", Label::kInfluencer, {"engine torque turbo"}),
                testing::make_user("i2", Label::kInfluencer, {"turbo engine racing"}),
                testing::make_user("n1", Label::kNotInfluencer, {"pizza dinner tonight"}),
                testing::make_user("n2", Label::kNotInfluencer, {"dinner movie tonight"}),
                testing::make_user("u", Label::kUnknown, {"ignored words"})},
               CorpusRole::kTrain};
  const TextModel uad(labeled_only(train), Scheme::kUserAsDocument, Tokenizer());
  EXPECT_EQ(uad.score(testing::make_user("q", Label::kUnknown, {"Turbo torque!"})).label,
            Label::kInfluencer);
  EXPECT_EQ(uad.score(testing::make_user("q", Label::kUnknown, {"pizza movie"})).label,
            Label::kNotInfluencer);
  const TextModel bot(labeled_only(train), Scheme::kBagOfTweets, Tokenizer());
  const TextScore r =
      bot.score(testing::make_user("q", Label::kUnknown, {"turbo", "racing engine", "pizza"}));
  EXPECT_EQ(r.label, Label::kInfluencer);
  EXPECT_EQ(r.score, 2.0);
  EXPECT_EQ(parse_scheme("uad"), Scheme::kUserAsDocument);
  EXPECT_EQ(parse_scheme("bot"), Scheme::kBagOfTweets);
  EXPECT_THROW(parse_scheme("x"), ParseError);
}

}  // namespace
}  // namespace influrank
