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

#include "influrank/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "influrank/corpus.h"
#include "influrank/error.h"
#include "influrank/eval.h"
#include "influrank/feature_table.h"
#include "influrank/learn.h"
#include "influrank/parallel.h"
#include "influrank/pipeline.h"
#include "influrank/synth.h"

namespace influrank {
namespace {

namespace fs = std::filesystem;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Flags {
  std::string train;
  std::string test;
  std::string domain;
  std::string method;
  std::string scheme;
  std::string output;
  std::string stopwords;
  std::string feature_set;
  std::string ranking;
  std::string predictions;
  std::size_t k = 5;
  double lambda = 1.0;
  int max_iters = 5000;
  double tol = 1e-8;
  unsigned jobs = 0;
  bool drop_sigils = false;
  bool no_graph = false;

  std::optional<std::uint64_t> seed;
  SynthConfig synth;
  bool synth_only_domain = false;

  std::size_t components = 0;
  bool no_standardize = false;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("influrank", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("INFLUENCE_RANK_LOG"); env != nullptr && *env != '\0') {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; only honour "off" when asked for.
    if (level != spdlog::level::off || std::string_view(env) == "off") logger->set_level(level);
  }
  return logger;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(fmt::format("cannot open {} for writing", path.string()));
  f << text;
  if (!f.flush()) throw IoError(fmt::format("error writing {}", path.string()));
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError(fmt::format("cannot open {}", path.string()));
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// "out.tsv" becomes "out.banking.tsv" when several domains are written.
fs::path domain_path(const std::string& base, Domain d) {
  const fs::path p(base);
  return p.parent_path() / fmt::format("{}.{}{}", p.stem().string(), to_string(d),
                                       p.extension().string());
}

class Runner {
 public:
  Runner(Flags flags, std::ostream& out, std::shared_ptr<spdlog::logger> log)
      : f_(std::move(flags)), out_(out), log_(std::move(log)) {}

  void synth() {
    if (!f_.seed) throw UsageError("synth requires --seed");
    if (f_.output.empty()) throw UsageError("synth requires --output DIR");
    SynthConfig config = f_.synth;
    config.seed = *f_.seed;
    Corpus train{{}, CorpusRole::kTrain};
    Corpus test{{}, CorpusRole::kTest};
    for (Domain d : domains_from_flag()) {
      config.domain = d;
      log_->info("generating {} corpora, seed {}", to_string(d), config.seed);
      SyntheticCorpora c = generate_synthetic(config);
      for (auto& u : c.train.users) train.users.push_back(std::move(u));
      for (auto& u : c.test.users) test.users.push_back(std::move(u));
    }
    const fs::path dir(f_.output);
    fs::create_directories(dir);
    save_corpus(train, dir / "train.jsonl");
    save_corpus(test, dir / "test.jsonl");
  }

  void features() {
    const Corpus corpus = filtered(single_input(), domain_filter());
    FeatureTable table = build_table(corpus, f_.feature_set.empty() ? "all" : f_.feature_set);
    emit_single(table.to_csv());
  }

  void pca() {
    const Corpus corpus = filtered(single_input(), domain_filter());
    const FeatureTable table = build_table(corpus, f_.feature_set.empty() ? "all" : f_.feature_set);
    if (table.num_rows() < 2) throw InvalidArgument("pca needs at least two users");
    Eigen::MatrixXd x = to_matrix(table.rows);
    fill_missing(x, column_medians(x));
    if (!f_.no_standardize) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double mean = x.col(j).mean();
        const double sd = std::sqrt((x.col(j).array() - mean).square().mean());
        x.col(j).array() -= mean;
        if (sd > 0.0) x.col(j) /= sd;
      }
    }
    const std::size_t k = f_.components == 0 ? table.num_columns() : f_.components;
    if (k > table.num_columns()) {
      throw UsageError(fmt::format("--components must be at most {}", table.num_columns()));
    }
    const PCAResult r = influrank::pca(x, k);
    std::string text = "component\teigenvalue\texplained_variance_ratio\tcumulative_ratio\n";
    double cumulative = 0.0;
    for (Eigen::Index c = 0; c < r.eigenvalues.size(); ++c) {
      cumulative += r.explained_variance_ratio(c);
      text += fmt::format("{}\t{}\t{}\t{}\n", c + 1, format_score(r.eigenvalues(c)),
                          format_score(r.explained_variance_ratio(c)), format_score(cumulative));
    }
    emit_single(text);
  }

  void rank() {
    const Method method = resolve_method();
    const auto outputs = run_domains(method, false);
    std::map<Domain, std::string> texts;
    for (const auto& [d, o] : outputs) {
      if (!o.ranking) throw UsageError(fmt::format("method {} does not rank users", method.name()));
      texts[d] = o.ranking->to_tsv();
    }
    emit_per_domain(texts);
  }

  void classify() {
    const Method method = resolve_method();
    const auto outputs = run_domains(method, false);
    std::map<Domain, std::string> texts;
    for (const auto& [d, o] : outputs) {
      if (!o.predictions) {
        throw UsageError(fmt::format("method {} does not classify users", method.name()));
      }
      texts[d] = predictions_to_tsv(*o.predictions);
    }
    emit_per_domain(texts);
  }

  void evaluate() {
    const bool from_files = !f_.ranking.empty() || !f_.predictions.empty();
    if (from_files && (!f_.method.empty() || !f_.scheme.empty())) {
      throw UsageError("--method cannot be combined with --ranking/--predictions");
    }
    if (f_.test.empty()) throw UsageError("evaluate requires --test");
    std::map<Domain, MethodOutput> outputs;
    std::map<std::string, std::string> config;
    std::vector<Domain> domains;
    if (from_files) {
      const Corpus test = labeled_only(load_corpus(f_.test, CorpusRole::kTest));
      domains = resolve_domains(test);
      for (Domain d : domains) {
        MethodOutput o;
        if (!f_.ranking.empty()) {
          o.ranking = RankedList::from_tsv(read_file(input_path(f_.ranking, d, domains)));
        }
        if (!f_.predictions.empty()) {
          o.predictions = predictions_from_tsv(read_file(input_path(f_.predictions, d, domains)));
        }
        outputs[d] = std::move(o);
      }
      if (!f_.ranking.empty()) config["ranking"] = f_.ranking;
      if (!f_.predictions.empty()) config["predictions"] = f_.predictions;
    } else {
      const Method method = resolve_method();
      outputs = run_domains(method, true);
      for (const auto& [d, o] : outputs) domains.push_back(d);
      config = describe(method, pipeline_options());
      if (!f_.train.empty()) config["train"] = f_.train;
    }
    config["test"] = f_.test;
    std::string names;
    for (Domain d : domains) names += (names.empty() ? "" : ",") + std::string(to_string(d));
    config["domains"] = names;

    const Corpus test = labeled_only(load_corpus(f_.test, CorpusRole::kTest));
    std::map<Domain, LabelMap> references;
    for (Domain d : domains) references[d] = reference_labels(split_by_domain(test, d));
    EvaluationReport report = evaluate_run(outputs, references, domains);
    report.config = std::move(config);
    emit_single(report.to_json());
  }

 private:
  std::vector<Domain> domains_from_flag() const {
    if (f_.domain.empty() || f_.domain == "both") return {std::begin(kAllDomains), std::end(kAllDomains)};
    return {parse_domain(f_.domain)};
  }

  std::optional<Domain> domain_filter() const {
    if (f_.domain.empty() || f_.domain == "both") return std::nullopt;
    return parse_domain(f_.domain);
  }

  // Explicit --domain, or else every domain present in the corpus.
  std::vector<Domain> resolve_domains(const Corpus& test) const {
    if (!f_.domain.empty()) return domains_from_flag();
    std::vector<Domain> present;
    for (Domain d : kAllDomains) {
      for (const UserProfile& u : test.users) {
        if (u.domain == d) {
          present.push_back(d);
          break;
        }
      }
    }
    if (present.empty()) throw InvalidArgument("test corpus has no users");
    return present;
  }

  fs::path input_path(const std::string& base, Domain d, const std::vector<Domain>& domains) const {
    return domains.size() == 1 ? fs::path(base) : domain_path(base, d);
  }

  Corpus single_input() const {
    if (f_.train.empty() == f_.test.empty()) throw UsageError("give exactly one of --train or --test");
    return f_.train.empty() ? load_corpus(f_.test, CorpusRole::kTest)
                            : load_corpus(f_.train, CorpusRole::kTrain);
  }

  static Corpus filtered(Corpus corpus, std::optional<Domain> domain) {
    return domain ? split_by_domain(corpus, *domain) : corpus;
  }

  Tokenizer tokenizer() const {
    TokenizerOptions options;
    options.keep_mentions_and_hashtags = !f_.drop_sigils;
    StopwordSet stopwords =
        f_.stopwords.empty() ? StopwordSet::bundled() : StopwordSet::load(f_.stopwords);
    return Tokenizer(std::move(stopwords), options);
  }

  unsigned jobs() const { return f_.jobs == 0 ? default_jobs() : f_.jobs; }

  PipelineOptions pipeline_options() const {
    PipelineOptions o;
    o.k = f_.k;
    o.logreg.lambda = f_.lambda;
    o.logreg.max_iters = f_.max_iters;
    o.logreg.tol = f_.tol;
    if (!f_.feature_set.empty()) o.feature_set = f_.feature_set;
    o.tokenizer = tokenizer();
    o.jobs = jobs();
    return o;
  }

  FeatureTable build_table(const Corpus& corpus, const std::string& expression) const {
    FeatureTableOptions options;
    options.include_graph = !f_.no_graph && feature_set_needs_graph(expression);
    options.jobs = jobs();
    const FeatureTable full = build_feature_table(corpus, tokenizer(), options);
    const std::vector<std::size_t> columns = select_columns(full, expression);
    FeatureTable table;
    table.user_ids = full.user_ids;
    table.labels = full.labels;
    for (std::size_t c : columns) table.columns.push_back(full.columns[c]);
    table.rows = column_subset(full, columns);
    return table;
  }

  Method resolve_method() const {
    if (f_.method.empty() && f_.scheme.empty()) throw UsageError("--method is required");
    try {
      Method m = parse_method(f_.method.empty() ? f_.scheme : f_.method);
      if (!f_.scheme.empty() && m.name() != f_.scheme) {
        throw UsageError(fmt::format("--scheme {} conflicts with --method {}", f_.scheme, f_.method));
      }
      return m;
    } catch (const UsageError&) {
      throw;
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }

  std::map<Domain, MethodOutput> run_domains(const Method& method, bool labeled_test) {
    if (f_.test.empty()) throw UsageError("--test is required");
    if (method.needs_training() && f_.train.empty()) {
      throw UsageError(fmt::format("method {} requires --train", method.name()));
    }
    Corpus test = load_corpus(f_.test, CorpusRole::kTest);
    if (labeled_test) test = labeled_only(test);
    std::optional<Corpus> train;
    if (method.needs_training()) train = load_corpus(f_.train, CorpusRole::kTrain);
    const PipelineOptions options = pipeline_options();

    std::map<Domain, MethodOutput> outputs;
    for (Domain d : resolve_domains(test)) {
      const Corpus test_d = split_by_domain(test, d);
      std::optional<Corpus> train_d;
      if (train) train_d = split_by_domain(*train, d);
      log_->info("{}: running {} on {} test users", to_string(d), method.name(), test_d.size());
      outputs[d] = run_method(method, train_d ? &*train_d : nullptr, test_d, options);
    }
    return outputs;
  }

  void emit_single(const std::string& text) {
    if (f_.output.empty()) {
      out_ << text;
    } else {
      write_file(f_.output, text);
    }
  }

  void emit_per_domain(const std::map<Domain, std::string>& texts) {
    if (texts.size() == 1) {
      emit_single(texts.begin()->second);
      return;
    }
    if (f_.output.empty()) throw UsageError("--output is required when writing several domains");
    for (const auto& [d, text] : texts) write_file(domain_path(f_.output, d), text);
  }

  Flags f_;
  std::ostream& out_;
  std::shared_ptr<spdlog::logger> log_;
};

void add_corpus_flags(CLI::App* app, Flags& f) {
  app->add_option("--train", f.train, "Training corpus (JSON lines, optionally gzipped)");
  app->add_option("--test", f.test, "Test corpus (JSON lines, optionally gzipped)");
  app->add_option("--domain", f.domain, "Domain filter")
      ->check(CLI::IsMember({"automotive", "banking", "both"}));
  app->add_option("--stopwords", f.stopwords, "Stopword file, one word per line");
  app->add_flag("--drop-mentions-hashtags", f.drop_sigils, "Drop @mention and #hashtag tokens");
  app->add_option("--output", f.output, "Output file (default: standard output)");
  app->add_option("--jobs", f.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
}

void add_method_flags(CLI::App* app, Flags& f) {
  app->add_option("--method", f.method,
                  "uad, bot, knn-cooc, logreg, feature:<column>[:asc], followers or mfc");
  app->add_option("--scheme", f.scheme, "Text weighting scheme")
      ->check(CLI::IsMember({"uad", "bot"}));
  app->add_option("--k", f.k, "Neighbours for knn-cooc")->check(CLI::PositiveNumber);
  app->add_option("--lambda", f.lambda, "L2 strength for logreg")->check(CLI::NonNegativeNumber);
  app->add_option("--max-iters", f.max_iters, "Iteration cap for logreg")->check(CLI::PositiveNumber);
  app->add_option("--tol", f.tol, "Loss decrease tolerance for logreg")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--feature-set", f.feature_set,
                  "Columns for logreg: all, best, category names or column names");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  Flags f;
  CLI::App app("Influence ranking and classification of social media profiles", "influrank");
  app.require_subcommand(1);

  CLI::App* synth = app.add_subcommand("synth", "Write seeded synthetic train and test corpora");
  synth->add_option("--seed", f.seed, "Random seed")->required();
  synth->add_option("--output", f.output, "Output directory")->required();
  synth->add_option("--domain", f.domain, "Domains to generate")
      ->check(CLI::IsMember({"automotive", "banking", "both"}));
  synth->add_option("--users-per-class", f.synth.users_per_class, "Users of each class per corpus")
      ->capture_default_str();
  synth->add_option("--tweets-per-user", f.synth.tweets_per_user, "Maximum tweets per user")
      ->capture_default_str();
  synth->add_option("--vocab-size", f.synth.vocab_size_per_class, "Class-exclusive words per class")
      ->capture_default_str();
  synth->add_option("--shared-vocab-size", f.synth.shared_vocab_size, "Words shared by both classes")
      ->capture_default_str();
  synth->add_option("--divergence", f.synth.divergence, "Mean class topicality in [0, 1]")
      ->capture_default_str();
  synth->add_option("--topicality-concentration", f.synth.topicality_concentration,
                    "Concentration of the per-user topicality distribution")
      ->capture_default_str();
  synth->add_option("--min-tweet-fraction", f.synth.min_tweet_fraction,
                    "Smallest tweet count as a fraction of --tweets-per-user")
      ->capture_default_str();

  CLI::App* features = app.add_subcommand("features", "Write the feature matrix as CSV");
  add_corpus_flags(features, f);
  features->add_option("--feature-set", f.feature_set, "Columns to write (default: all)");
  features->add_flag("--no-graph", f.no_graph, "Skip co-occurrence graph columns");

  CLI::App* rank = app.add_subcommand("rank", "Write a ranking TSV per domain");
  add_corpus_flags(rank, f);
  add_method_flags(rank, f);

  CLI::App* classify = app.add_subcommand("classify", "Write a predictions TSV per domain");
  add_corpus_flags(classify, f);
  add_method_flags(classify, f);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Write a MAP and Macro-F report as JSON");
  add_corpus_flags(evaluate, f);
  add_method_flags(evaluate, f);
  evaluate->add_option("--ranking", f.ranking, "Ranking TSV to score instead of running a method");
  evaluate->add_option("--predictions", f.predictions,
                       "Predictions TSV to score instead of running a method");

  CLI::App* pca = app.add_subcommand("pca", "Write the explained-variance table of the features");
  add_corpus_flags(pca, f);
  pca->add_option("--feature-set", f.feature_set, "Columns to analyse (default: all)");
  pca->add_option("--components", f.components, "Components to keep (0: all)");
  pca->add_flag("--no-graph", f.no_graph, "Skip co-occurrence graph columns");
  pca->add_flag("--no-standardize", f.no_standardize, "Use raw instead of z-scored columns");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner runner(std::move(f), out, log);
    if (synth->parsed()) runner.synth();
    if (features->parsed()) runner.features();
    if (rank->parsed()) runner.rank();
    if (classify->parsed()) runner.classify();
    if (evaluate->parsed()) runner.evaluate();
    if (pca->parsed()) runner.pca();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace influrank
