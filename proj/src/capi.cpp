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

#include "kbopt/kbopt.h"

#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "kbopt/apriori.hpp"
#include "kbopt/corpus.hpp"
#include "kbopt/error.hpp"
#include "kbopt/eval.hpp"
#include "kbopt/fixtures.hpp"
#include "kbopt/geometry.hpp"
#include "kbopt/layout.hpp"
#include "kbopt/ngram.hpp"
#include "kbopt/text.hpp"

struct kbo_alphabet {
  kbopt::Alphabet value;
};

struct kbo_corpus {
  kbopt::SymbolStream value;
};

struct kbo_ngrams {
  kbopt::NgramSet value;
  kbopt::Alphabet alphabet;
};

struct kbo_txdb {
  kbopt::apriori::TransactionDatabase value;
};

struct kbo_mining {
  kbopt::apriori::ItemDictionary dictionary;
  std::vector<kbopt::apriori::Level> levels;
  std::vector<kbopt::apriori::LevelTrace> trace;
  std::vector<kbopt::apriori::AssociationRule> rules;
};

struct kbo_geometry {
  kbopt::KeyboardGeometry value;
};

struct kbo_layout {
  kbopt::Layout value;
};

struct kbo_optimization {
  kbopt::HandPartition partition;
  kbo_layout layout;
  std::vector<kbopt::Symbol> unassigned;
};

struct kbo_report {
  kbopt::EvaluationReport value;
};

namespace {

thread_local std::string g_last_error;

kbo_status to_status(kbopt::ErrorCode code) {
  // The two enumerations share their numeric values.
  return static_cast<kbo_status>(static_cast<int>(code));
}

kbo_status fail(kbo_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating every exception into a status code.
template <typename Body>
kbo_status guarded(Body&& body) noexcept {
  try {
    body();
    return KBO_OK;
  } catch (const kbopt::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KBO_ERR_INTERNAL, "out of memory");
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(KBO_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(KBO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KBO_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw kbopt::Error(kbopt::ErrorCode::kInvalidArgument, what);
}

std::vector<kbopt::ComparisonRow> comparison(const kbo_report* const* reports, size_t count) {
  require(reports != nullptr && count > 0, "at least one report is required");
  std::vector<kbopt::EvaluationReport> values;
  values.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    require(reports[i] != nullptr, "null report");
    values.push_back(reports[i]->value);
  }
  return kbopt::compare(values);
}

}  // namespace

extern "C" {

const char* kbo_version(void) { return "1.0.0"; }

const char* kbo_status_string(kbo_status status) {
  if (status == KBO_OK) return "ok";
  return kbopt::to_string(static_cast<kbopt::ErrorCode>(status));
}

const char* kbo_last_error(void) { return g_last_error.c_str(); }

kbo_status kbo_alphabet_builtin(kbo_alphabet** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new kbo_alphabet{kbopt::default_bangla_alphabet()};
  });
}

kbo_status kbo_alphabet_load(const char* path, kbo_alphabet** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new kbo_alphabet{kbopt::load_alphabet(path)};
  });
}

size_t kbo_alphabet_size(const kbo_alphabet* alphabet) {
  return alphabet ? alphabet->value.size() : 0;
}

void kbo_alphabet_free(kbo_alphabet* alphabet) { delete alphabet; }

kbo_status kbo_corpus_load(const char* const* paths, size_t path_count,
                           const kbo_alphabet* alphabet, int normalize, kbo_corpus** out) {
  return guarded([&] {
    require(alphabet != nullptr && out != nullptr, "null argument");
    require(paths != nullptr || path_count == 0, "null path list");
    std::vector<std::filesystem::path> list;
    for (size_t i = 0; i < path_count; ++i) {
      require(paths[i] != nullptr, "null path");
      list.emplace_back(paths[i]);
    }
    *out = new kbo_corpus{kbopt::load_corpus(
        list, alphabet->value,
        normalize ? kbopt::Normalization::kNfc : kbopt::Normalization::kNone)};
  });
}

uint64_t kbo_corpus_total_symbols(const kbo_corpus* corpus) {
  return corpus ? corpus->value.total_symbols() : 0;
}

void kbo_corpus_free(kbo_corpus* corpus) { delete corpus; }

kbo_status kbo_ngrams_count(const kbo_corpus* corpus, const kbo_alphabet* alphabet,
                            kbo_ngrams** out) {
  return guarded([&] {
    require(corpus != nullptr && alphabet != nullptr && out != nullptr, "null argument");
    *out = new kbo_ngrams{kbopt::count_all(corpus->value), alphabet->value};
  });
}

namespace {

const kbopt::NgramTable& table_of(const kbo_ngrams* ngrams, int order) {
  require(ngrams != nullptr, "null n-gram handle");
  switch (order) {
    case 1: return ngrams->value.monograms;
    case 2: return ngrams->value.digrams;
    case 3: return ngrams->value.trigrams;
    default:
      throw kbopt::Error(kbopt::ErrorCode::kInvalidArgument, "order must be 1, 2 or 3");
  }
}

}  // namespace

kbo_status kbo_ngrams_total(const kbo_ngrams* ngrams, int order, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = table_of(ngrams, order).total();
  });
}

kbo_status kbo_ngrams_write_tsv(const kbo_ngrams* ngrams, int order, const char* path) {
  return guarded([&] {
    require(path != nullptr, "null path");
    kbopt::write_file(path, kbopt::frequency_tsv(table_of(ngrams, order), ngrams->alphabet));
  });
}

kbo_status kbo_ngrams_write_top(const kbo_ngrams* ngrams, size_t k, const char* path) {
  return guarded([&] {
    require(path != nullptr, "null path");
    kbopt::write_file(path, kbopt::top_k_tsv(table_of(ngrams, 1), k, ngrams->alphabet));
  });
}

void kbo_ngrams_free(kbo_ngrams* ngrams) { delete ngrams; }

kbo_status kbo_txdb_load(const char* path, kbo_txdb** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    if (!std::filesystem::exists(path)) {
      throw kbopt::Error(kbopt::ErrorCode::kMissingPath, std::string(path) + ": no such file");
    }
    *out = new kbo_txdb{kbopt::apriori::parse_transactions(kbopt::read_file(path), path)};
  });
}

kbo_status kbo_txdb_from_corpus(const kbo_corpus* corpus, const kbo_alphabet* alphabet,
                                kbo_txdb** out) {
  return guarded([&] {
    require(corpus != nullptr && alphabet != nullptr && out != nullptr, "null argument");
    *out = new kbo_txdb{kbopt::apriori::transactions_from_stream(corpus->value, alphabet->value)};
  });
}

size_t kbo_txdb_size(const kbo_txdb* db) { return db ? db->value.transactions.size() : 0; }

kbo_status kbo_txdb_min_count(const kbo_txdb* db, double percent, uint64_t* out) {
  return guarded([&] {
    require(db != nullptr && out != nullptr, "null argument");
    *out = kbopt::apriori::min_count_from_percent(percent, db->value.transactions.size());
  });
}

void kbo_txdb_free(kbo_txdb* db) { delete db; }

kbo_status kbo_mine(const kbo_txdb* db, uint64_t min_support_count,
                    double min_confidence_percent, kbo_mining** out) {
  return guarded([&] {
    require(db != nullptr && out != nullptr, "null argument");
    require(min_confidence_percent >= 0.0 && min_confidence_percent <= 100.0,
            "minimum confidence must lie in [0, 100]");
    auto mining = std::make_unique<kbo_mining>();
    mining->dictionary = db->value.dictionary;
    mining->levels = kbopt::apriori::mine_frequent(db->value.transactions, min_support_count,
                                                   &mining->trace);
    if (!db->value.transactions.empty()) {
      mining->rules = kbopt::apriori::generate_rules(
          mining->levels, db->value.transactions.size(), min_confidence_percent);
    }
    *out = mining.release();
  });
}

size_t kbo_mining_level_count(const kbo_mining* mining) {
  return mining ? mining->levels.size() : 0;
}

size_t kbo_mining_rule_count(const kbo_mining* mining) {
  return mining ? mining->rules.size() : 0;
}

kbo_status kbo_mining_write_levels(const kbo_mining* mining, const char* path) {
  return guarded([&] {
    require(mining != nullptr && path != nullptr, "null argument");
    kbopt::write_file(path, kbopt::apriori::levels_tsv(mining->levels, mining->dictionary));
  });
}

kbo_status kbo_mining_write_candidates(const kbo_mining* mining, const char* path) {
  return guarded([&] {
    require(mining != nullptr && path != nullptr, "null argument");
    kbopt::write_file(path, kbopt::apriori::candidates_tsv(mining->trace, mining->dictionary));
  });
}

kbo_status kbo_mining_write_rules(const kbo_mining* mining, const char* path) {
  return guarded([&] {
    require(mining != nullptr && path != nullptr, "null argument");
    kbopt::write_file(path, kbopt::apriori::rules_tsv(mining->rules, mining->dictionary));
  });
}

void kbo_mining_free(kbo_mining* mining) { delete mining; }

kbo_status kbo_geometry_builtin(const char* name, kbo_geometry** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = new kbo_geometry{kbopt::builtin_geometry(name)};
  });
}

kbo_status kbo_geometry_load(const char* path, kbo_geometry** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    if (!std::filesystem::exists(path)) {
      throw kbopt::Error(kbopt::ErrorCode::kMissingPath, std::string(path) + ": no such file");
    }
    *out = new kbo_geometry{kbopt::parse_geometry(kbopt::read_file(path), path)};
  });
}

const char* kbo_geometry_name(const kbo_geometry* geometry) {
  return geometry ? geometry->value.name.c_str() : "";
}

kbo_status kbo_geometry_write(const kbo_geometry* geometry, const char* path) {
  return guarded([&] {
    require(geometry != nullptr && path != nullptr, "null argument");
    kbopt::write_file(path, kbopt::geometry_json(geometry->value));
  });
}

void kbo_geometry_free(kbo_geometry* geometry) { delete geometry; }

kbo_status kbo_optimize(const kbo_ngrams* ngrams, const kbo_alphabet* alphabet,
                        const kbo_geometry* geometry, const char* layout_name,
                        const kbo_optimize_options* options, kbo_optimization** out) {
  return guarded([&] {
    require(ngrams != nullptr && alphabet != nullptr && geometry != nullptr && out != nullptr,
            "null argument");
    kbopt::PartitionOptions opts;
    if (options != nullptr) {
      require(options->association == KBO_ASSOCIATION_DIRECTED ||
                  options->association == KBO_ASSOCIATION_SYMMETRIC,
              "unknown association mode");
      require(options->policy == KBO_POLICY_LITERAL || options->policy == KBO_POLICY_MAJORITY,
              "unknown decision policy");
      opts.association = options->association == KBO_ASSOCIATION_SYMMETRIC
                             ? kbopt::AssociationMode::kSymmetric
                             : kbopt::AssociationMode::kDirected;
      opts.policy = options->policy == KBO_POLICY_MAJORITY ? kbopt::DecisionPolicy::kMajority
                                                           : kbopt::DecisionPolicy::kLiteral;
    }
    const auto& tables = ngrams->value;
    std::vector<kbopt::Symbol> ranked;
    for (const auto& entry : kbopt::rank_symbols(tables.monograms, alphabet->value)) {
      ranked.push_back(entry.symbol);
    }
    auto partition = kbopt::partition_letters(ranked, tables.digrams, tables.monograms, opts);
    auto placement = kbopt::assign_positions(partition, geometry->value, tables.monograms,
                                             alphabet->value,
                                             layout_name ? layout_name : "optimized");
    *out = new kbo_optimization{std::move(partition), kbo_layout{std::move(placement.layout)},
                                std::move(placement.unassigned)};
  });
}

size_t kbo_optimization_unassigned_count(const kbo_optimization* optimization) {
  return optimization ? optimization->unassigned.size() : 0;
}

kbo_status kbo_optimization_write_layout(const kbo_optimization* optimization,
                                         const char* path) {
  return guarded([&] {
    require(optimization != nullptr && path != nullptr, "null argument");
    kbopt::write_file(path, kbopt::layout_json(optimization->layout.value));
  });
}

kbo_status kbo_optimization_write_trace(const kbo_optimization* optimization,
                                        const char* path) {
  return guarded([&] {
    require(optimization != nullptr && path != nullptr, "null argument");
    kbopt::write_file(path, kbopt::trace_tsv(optimization->partition));
  });
}

const kbo_layout* kbo_optimization_layout(const kbo_optimization* optimization) {
  return optimization ? &optimization->layout : nullptr;
}

void kbo_optimization_free(kbo_optimization* optimization) { delete optimization; }

kbo_status kbo_layout_load(const char* path, const kbo_geometry* geometry, kbo_layout** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    if (!std::filesystem::exists(path)) {
      throw kbopt::Error(kbopt::ErrorCode::kMissingPath, std::string(path) + ": no such file");
    }
    std::vector<kbopt::KeyboardGeometry> known;
    if (geometry != nullptr) known.push_back(geometry->value);
    for (const auto& name : kbopt::builtin_geometry_names()) {
      if (geometry == nullptr || geometry->value.name != name) {
        known.push_back(kbopt::builtin_geometry(name));
      }
    }
    *out = new kbo_layout{kbopt::parse_layout(kbopt::read_file(path), known, path)};
  });
}

const char* kbo_layout_name(const kbo_layout* layout) {
  return layout ? layout->value.name.c_str() : "";
}

void kbo_layout_free(kbo_layout* layout) { delete layout; }

kbo_status kbo_evaluate(const kbo_layout* layout, const kbo_corpus* corpus, kbo_report** out) {
  return guarded([&] {
    require(layout != nullptr && corpus != nullptr && out != nullptr, "null argument");
    *out = new kbo_report{kbopt::evaluate(layout->value, corpus->value)};
  });
}

void kbo_report_values_get(const kbo_report* report, kbo_report_values* out) {
  if (report == nullptr || out == nullptr) return;
  const auto& r = report->value;
  *out = kbo_report_values{r.hand_switching, r.left_load,     r.right_load,
                           r.undetermined,   r.total_symbols, r.determined_runs};
}

void kbo_report_free(kbo_report* report) { delete report; }

kbo_status kbo_reports_write(const kbo_report* const* reports, size_t count,
                             const char* tsv_path, const char* text_path) {
  return guarded([&] {
    const auto rows = comparison(reports, count);
    if (tsv_path != nullptr) kbopt::write_file(tsv_path, kbopt::comparison_tsv(rows));
    if (text_path != nullptr) kbopt::write_file(text_path, kbopt::comparison_text(rows));
  });
}

kbo_status kbo_reports_render(const kbo_report* const* reports, size_t count, char* buffer,
                              size_t capacity, size_t* needed) {
  return guarded([&] {
    require(buffer != nullptr || capacity == 0, "null buffer with nonzero capacity");
    const std::string text = kbopt::comparison_text(comparison(reports, count));
    if (needed != nullptr) *needed = text.size();
    if (capacity > 0) {
      const size_t n = std::min(text.size(), capacity - 1);
      std::memcpy(buffer, text.data(), n);
      buffer[n] = '\0';
    }
  });
}

kbo_status kbo_write_fixtures(const char* directory) {
  return guarded([&] {
    require(directory != nullptr, "null directory");
    const std::filesystem::path dir(directory);
    std::filesystem::create_directories(dir);
    kbopt::write_file(dir / "sample_transactions.txt", kbopt::sample_transactions());
    for (const auto& name : kbopt::builtin_geometry_names()) {
      kbopt::write_file(dir / (name + ".json"),
                        kbopt::geometry_json(kbopt::builtin_geometry(name)));
    }
  });
}

}  // extern "C"
