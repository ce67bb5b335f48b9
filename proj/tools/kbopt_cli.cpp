// Copyright 2026 The kbopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// kbopt: command-line front end over the C API.
//
//   kbopt analyze  --corpus PATH... --out DIR
//   kbopt mine     (--transactions FILE | --corpus PATH...) --min-support N|P% --out DIR
//   kbopt optimize --corpus PATH... --out DIR
//   kbopt evaluate --corpus PATH... --layout FILE... [--out DIR]
//   kbopt --seed-fixtures DIR

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kbopt/kbopt.h"

namespace fs = std::filesystem;

namespace {

struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(kbo_status status, const std::string& context = {}) {
  if (status == KBO_OK) return;
  std::string message = kbo_status_string(status);
  if (const std::string detail = kbo_last_error(); !detail.empty()) message += ": " + detail;
  throw CommandError(context.empty() ? message : context + ": " + message);
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Alphabet = std::unique_ptr<kbo_alphabet, Deleter<kbo_alphabet, kbo_alphabet_free>>;
using Corpus = std::unique_ptr<kbo_corpus, Deleter<kbo_corpus, kbo_corpus_free>>;
using Ngrams = std::unique_ptr<kbo_ngrams, Deleter<kbo_ngrams, kbo_ngrams_free>>;
using TxDb = std::unique_ptr<kbo_txdb, Deleter<kbo_txdb, kbo_txdb_free>>;
using Mining = std::unique_ptr<kbo_mining, Deleter<kbo_mining, kbo_mining_free>>;
using Geometry = std::unique_ptr<kbo_geometry, Deleter<kbo_geometry, kbo_geometry_free>>;
using Optimization =
    std::unique_ptr<kbo_optimization, Deleter<kbo_optimization, kbo_optimization_free>>;
using LayoutHandle = std::unique_ptr<kbo_layout, Deleter<kbo_layout, kbo_layout_free>>;
using Report = std::unique_ptr<kbo_report, Deleter<kbo_report, kbo_report_free>>;

struct RunConfig {
  std::vector<std::string> corpus;
  std::string alphabet = "builtin";
  std::string geometry = "default-3row";
  bool no_normalize = false;
  std::string association = "directed";
  std::string policy = "literal";
  std::string min_support = "2";
  double min_confidence = 0.0;
  std::string out;
  // command-specific
  std::string transactions;
  std::string layout_name = "optimized";
  std::vector<std::string> layouts;
  std::size_t top = 10;
};

// Tracks written files so a failing command leaves nothing half-written.
class Outputs {
 public:
  explicit Outputs(const std::string& dir) : dir_(dir) {
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw CommandError(dir + ": cannot create output directory: " + ec.message());
  }
  Outputs(const Outputs&) = delete;
  Outputs& operator=(const Outputs&) = delete;
  ~Outputs() {
    if (committed_) return;
    for (const auto& p : written_) {
      std::error_code ec;
      fs::remove(p, ec);
    }
  }

  std::string path(const std::string& name) {
    written_.push_back(dir_ / name);
    return written_.back().string();
  }
  void commit() { committed_ = true; }

 private:
  fs::path dir_;
  std::vector<fs::path> written_;
  bool committed_ = false;
};

Alphabet load_alphabet(const RunConfig& config) {
  kbo_alphabet* raw = nullptr;
  if (config.alphabet == "builtin") {
    check(kbo_alphabet_builtin(&raw));
  } else {
    check(kbo_alphabet_load(config.alphabet.c_str(), &raw), "alphabet");
  }
  return Alphabet(raw);
}

Corpus load_corpus(const RunConfig& config, const kbo_alphabet* alphabet) {
  std::vector<const char*> paths;
  for (const auto& p : config.corpus) paths.push_back(p.c_str());
  kbo_corpus* raw = nullptr;
  check(kbo_corpus_load(paths.data(), paths.size(), alphabet, config.no_normalize ? 0 : 1,
                        &raw),
        "corpus");
  return Corpus(raw);
}

Geometry load_geometry(const std::string& spec) {
  kbo_geometry* raw = nullptr;
  if (kbo_geometry_builtin(spec.c_str(), &raw) == KBO_OK) return Geometry(raw);
  check(kbo_geometry_load(spec.c_str(), &raw), "geometry");
  return Geometry(raw);
}

void warn(const std::string& message) { std::cerr << "warning: " << message << "\n"; }

int cmd_analyze(const RunConfig& config) {
  auto alphabet = load_alphabet(config);
  auto corpus = load_corpus(config, alphabet.get());
  if (kbo_corpus_total_symbols(corpus.get()) == 0) {
    warn("corpus contains no alphabet symbols; tables are empty");
  }
  kbo_ngrams* raw = nullptr;
  check(kbo_ngrams_count(corpus.get(), alphabet.get(), &raw));
  Ngrams ngrams(raw);

  Outputs out(config.out);
  check(kbo_ngrams_write_tsv(ngrams.get(), 1, out.path("monograms.tsv").c_str()));
  check(kbo_ngrams_write_tsv(ngrams.get(), 2, out.path("digrams.tsv").c_str()));
  check(kbo_ngrams_write_tsv(ngrams.get(), 3, out.path("trigrams.tsv").c_str()));
  check(kbo_ngrams_write_top(ngrams.get(), config.top, out.path("top_monograms.tsv").c_str()));
  out.commit();

  for (int order = 1; order <= 3; ++order) {
    std::uint64_t total = 0;
    check(kbo_ngrams_total(ngrams.get(), order, &total));
    std::cout << order << "-gram total: " << total << "\n";
  }
  return 0;
}

std::uint64_t resolve_min_support(const std::string& text, const kbo_txdb* db) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text.back() == '%') {
      const double percent = std::stod(text.substr(0, text.size() - 1), &used);
      if (used + 1 != text.size()) throw std::invalid_argument(text);
      std::uint64_t count = 0;
      check(kbo_txdb_min_count(db, percent, &count), "--min-support");
      return count;
    }
    const unsigned long long count = std::stoull(text, &used);
    if (used != text.size() || count == 0 || text.front() == '-') {
      throw std::invalid_argument(text);
    }
    return count;
  } catch (const std::logic_error&) {
    throw CommandError("--min-support: expected a positive count or a percentage such as 22%, got '" +
                       text + "'");
  }
}

int cmd_mine(const RunConfig& config) {
  if (config.transactions.empty() == config.corpus.empty()) {
    throw CommandError("mine: give exactly one of --transactions or --corpus");
  }
  kbo_txdb* raw = nullptr;
  if (!config.transactions.empty()) {
    check(kbo_txdb_load(config.transactions.c_str(), &raw), "transactions");
  } else {
    auto alphabet = load_alphabet(config);
    auto corpus = load_corpus(config, alphabet.get());
    check(kbo_txdb_from_corpus(corpus.get(), alphabet.get(), &raw));
  }
  TxDb db(raw);
  if (kbo_txdb_size(db.get()) == 0) warn("transaction database is empty");

  const std::uint64_t min_count = resolve_min_support(config.min_support, db.get());
  kbo_mining* mined = nullptr;
  check(kbo_mine(db.get(), min_count, config.min_confidence, &mined));
  Mining mining(mined);

  Outputs out(config.out);
  check(kbo_mining_write_levels(mining.get(), out.path("levels.tsv").c_str()));
  check(kbo_mining_write_candidates(mining.get(), out.path("candidates.tsv").c_str()));
  check(kbo_mining_write_rules(mining.get(), out.path("rules.tsv").c_str()));
  out.commit();

  std::cout << "transactions: " << kbo_txdb_size(db.get()) << ", min support count: " << min_count
            << ", levels: " << kbo_mining_level_count(mining.get())
            << ", rules: " << kbo_mining_rule_count(mining.get()) << "\n";
  return 0;
}

int cmd_optimize(const RunConfig& config) {
  auto alphabet = load_alphabet(config);
  auto corpus = load_corpus(config, alphabet.get());
  auto geometry = load_geometry(config.geometry);
  kbo_ngrams* raw = nullptr;
  check(kbo_ngrams_count(corpus.get(), alphabet.get(), &raw));
  Ngrams ngrams(raw);

  kbo_optimize_options options{
      config.association == "symmetric" ? KBO_ASSOCIATION_SYMMETRIC : KBO_ASSOCIATION_DIRECTED,
      config.policy == "majority" ? KBO_POLICY_MAJORITY : KBO_POLICY_LITERAL};
  kbo_optimization* opt = nullptr;
  check(kbo_optimize(ngrams.get(), alphabet.get(), geometry.get(), config.layout_name.c_str(),
                     &options, &opt));
  Optimization optimization(opt);
  if (const auto n = kbo_optimization_unassigned_count(optimization.get()); n > 0) {
    warn(std::to_string(n) + " letter(s) did not fit on the geometry's keys");
  }

  Outputs out(config.out);
  check(kbo_optimization_write_layout(optimization.get(), out.path("layout.json").c_str()));
  check(kbo_optimization_write_trace(optimization.get(), out.path("trace.tsv").c_str()));
  out.commit();
  return 0;
}

int cmd_evaluate(const RunConfig& config) {
  auto alphabet = load_alphabet(config);
  auto corpus = load_corpus(config, alphabet.get());
  Geometry geometry;
  if (config.geometry != "default-3row") geometry = load_geometry(config.geometry);

  std::vector<Report> reports;
  for (const auto& path : config.layouts) {
    kbo_layout* raw = nullptr;
    check(kbo_layout_load(path.c_str(), geometry.get(), &raw), path);
    LayoutHandle layout(raw);
    kbo_report* report = nullptr;
    check(kbo_evaluate(layout.get(), corpus.get(), &report), path);
    reports.emplace_back(report);
  }
  std::vector<const kbo_report*> views;
  for (const auto& r : reports) views.push_back(r.get());

  size_t needed = 0;
  check(kbo_reports_render(views.data(), views.size(), nullptr, 0, &needed));
  std::string text(needed + 1, '\0');
  check(kbo_reports_render(views.data(), views.size(), text.data(), text.size(), &needed));
  text.resize(needed);

  if (!config.out.empty()) {
    Outputs out(config.out);
    const auto tsv = out.path("report.tsv");
    const auto txt = out.path("report.txt");
    check(kbo_reports_write(views.data(), views.size(), tsv.c_str(), txt.c_str()));
    out.commit();
  }
  std::cout << text;
  return 0;
}

void add_corpus_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--alphabet", config.alphabet,
                  "'builtin' (Bangla) or an alphabet file: one symbol per line")
      ->capture_default_str();
  cmd->add_flag("--no-normalize", config.no_normalize, "skip NFC normalization");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus-driven two-hand keyboard layout toolkit"};
  app.set_version_flag("--version", std::string(kbo_version()));
  app.require_subcommand(0, 1);

  RunConfig config;
  std::string fixtures_dir;
  app.add_option("--seed-fixtures", fixtures_dir,
                 "write the sample transaction file and built-in geometries to DIR");

  auto* analyze = app.add_subcommand("analyze", "count monograms, digrams and trigrams");
  analyze->add_option("--corpus", config.corpus, "corpus files or directories")->required();
  add_corpus_options(analyze, config);
  analyze->add_option("--top", config.top, "size of the top monogram report")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--out", config.out, "output directory")->required();

  auto* mine = app.add_subcommand("mine", "mine frequent itemsets and association rules");
  auto* tx = mine->add_option("--transactions", config.transactions,
                              "transaction file: one transaction per line");
  mine->add_option("--corpus", config.corpus,
                   "corpus; each boundary-delimited run becomes a transaction")
      ->excludes(tx);
  add_corpus_options(mine, config);
  mine->add_option("--min-support", config.min_support,
                   "minimum support: a count (2) or a percentage (22%)")
      ->capture_default_str();
  mine->add_option("--min-confidence", config.min_confidence, "minimum rule confidence, percent")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  mine->add_option("--out", config.out, "output directory")->required();

  auto* optimize = app.add_subcommand("optimize", "derive a two-hand layout from a corpus");
  optimize->add_option("--corpus", config.corpus, "corpus files or directories")->required();
  add_corpus_options(optimize, config);
  optimize->add_option("--geometry", config.geometry, "built-in geometry name or JSON file")
      ->capture_default_str();
  optimize->add_option("--association", config.association, "digram association mode")
      ->check(CLI::IsMember({"directed", "symmetric"}))
      ->capture_default_str();
  optimize->add_option("--policy", config.policy,
                       "hand decision rule; 'majority' is an experimental variant")
      ->check(CLI::IsMember({"literal", "majority"}))
      ->capture_default_str();
  optimize->add_option("--name", config.layout_name, "layout name")->capture_default_str();
  optimize->add_option("--out", config.out, "output directory")->required();

  auto* evaluate = app.add_subcommand("evaluate", "score layouts against a corpus");
  evaluate->add_option("--corpus", config.corpus, "corpus files or directories")->required();
  add_corpus_options(evaluate, config);
  evaluate->add_option("--layout", config.layouts, "layout files")->required();
  evaluate->add_option("--geometry", config.geometry,
                       "geometry for layouts that do not use a built-in one")
      ->capture_default_str();
  evaluate->add_option("--out", config.out, "output directory for report.tsv / report.txt");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!fixtures_dir.empty()) {
      check(kbo_write_fixtures(fixtures_dir.c_str()), fixtures_dir);
      std::cout << "fixtures written to " << fixtures_dir << "\n";
      if (app.get_subcommands().empty()) return 0;
    }
    if (analyze->parsed()) return cmd_analyze(config);
    if (mine->parsed()) return cmd_mine(config);
    if (optimize->parsed()) return cmd_optimize(config);
    if (evaluate->parsed()) return cmd_evaluate(config);
    std::cerr << app.help();
    return 2;
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
