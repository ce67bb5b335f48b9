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

#include "kbopt/ngram.hpp"

#include <algorithm>

#include "kbopt/error.hpp"
#include "kbopt/text.hpp"

namespace kbopt {

NgramTable::NgramTable(int order) : order_(order) {
  if (order < 1 || order > 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "n-gram order must be 1, 2 or 3 (got " + std::to_string(order) + ")");
  }
}

std::uint64_t NgramTable::count(std::u32string_view gram) const {
  const auto it = counts_.find(Gram(gram));
  return it == counts_.end() ? 0 : it->second;
}

void NgramTable::add(std::u32string_view gram, std::uint64_t n) {
  if (gram.size() != static_cast<std::size_t>(order_)) {
    throw Error(ErrorCode::kContractViolation, "gram length does not match table order");
  }
  if (n == 0) return;
  counts_[Gram(gram)] += n;
  total_ += n;
}

NgramTable& NgramTable::merge(const NgramTable& other) {
  if (other.order_ != order_) {
    throw Error(ErrorCode::kContractViolation, "cannot merge tables of different order");
  }
  for (const auto& [gram, n] : other.counts_) counts_[gram] += n;
  total_ += other.total_;
  return *this;
}

NgramTable count_ngrams(const SymbolStream& stream, int order) {
  NgramTable table(order);
  const auto width = static_cast<std::size_t>(order);
  for (const auto segment : stream.segments()) {
    if (segment.size() < width) continue;
    for (std::size_t i = 0; i + width <= segment.size(); ++i) {
      table.add(std::u32string_view(segment.data() + i, width));
    }
  }
  return table;
}

NgramSet count_all(const SymbolStream& stream) {
  return NgramSet{count_ngrams(stream, 1), count_ngrams(stream, 2),
                  count_ngrams(stream, 3)};
}

DigramMetrics digram_metrics(const NgramTable& digrams, const NgramTable& monograms,
                             Symbol first, Symbol second) {
  if (digrams.order() != 2 || monograms.order() != 1) {
    throw Error(ErrorCode::kContractViolation, "digram_metrics needs order-2 and order-1 tables");
  }
  if (digrams.total() == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "no digrams counted");
  }
  const Symbol pair[2] = {first, second};
  const std::uint64_t n = digrams.count(std::u32string_view(pair, 2));
  if (n == 0) {
    throw Error(ErrorCode::kAbsentGram,
                "digram '" + encode_utf8(std::u32string_view(pair, 2)) + "' not counted");
  }
  const std::uint64_t base = monograms.count(std::u32string_view(&first, 1));
  if (base == 0) {
    throw Error(ErrorCode::kAbsentGram, "monogram '" + encode_utf8(first) + "' not counted");
  }
  return DigramMetrics{
      first, second, n,
      static_cast<double>(n) / static_cast<double>(digrams.total()) * 100.0,
      static_cast<double>(n) / static_cast<double>(base) * 100.0};
}

namespace {

struct GramRow {
  const Gram* gram;
  std::uint64_t count;
};

std::vector<GramRow> sorted_rows(const NgramTable& table, const Alphabet& alphabet) {
  std::vector<GramRow> rows;
  rows.reserve(table.distinct());
  for (const auto& [gram, n] : table.counts()) rows.push_back({&gram, n});
  std::sort(rows.begin(), rows.end(), [&alphabet](const GramRow& a, const GramRow& b) {
    if (a.count != b.count) return a.count > b.count;
    return alphabet.before(*a.gram, *b.gram);
  });
  return rows;
}

double percent_of(std::uint64_t n, std::uint64_t total) {
  return total == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(total) * 100.0;
}

}  // namespace

std::vector<RankedSymbol> top_k(const NgramTable& monograms, std::size_t k,
                                const Alphabet& alphabet) {
  if (monograms.order() != 1) {
    throw Error(ErrorCode::kContractViolation, "top_k needs an order-1 table");
  }
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const auto rows = sorted_rows(monograms, alphabet);
  std::vector<RankedSymbol> out;
  out.reserve(std::min(k, rows.size()));
  for (const auto& row : rows) {
    if (out.size() == k) break;
    out.push_back({row.gram->front(), row.count, percent_of(row.count, monograms.total())});
  }
  return out;
}

std::vector<RankedSymbol> rank_symbols(const NgramTable& monograms,
                                       const Alphabet& alphabet) {
  if (monograms.distinct() == 0) return {};
  return top_k(monograms, monograms.distinct(), alphabet);
}

std::string frequency_tsv(const NgramTable& table, const Alphabet& alphabet) {
  std::string out = "gram\tcount\tpercent\n";
  for (const auto& row : sorted_rows(table, alphabet)) {
    out += encode_utf8(*row.gram);
    out += '\t';
    out += std::to_string(row.count);
    out += '\t';
    out += format_percent(percent_of(row.count, table.total()));
    out += '\n';
  }
  return out;
}

std::string top_k_tsv(const NgramTable& monograms, std::size_t k,
                      const Alphabet& alphabet) {
  std::string out = "rank\tletter\tfrequency\tpercentage\n";
  std::size_t rank = 0;
  for (const auto& entry : top_k(monograms, k, alphabet)) {
    out += std::to_string(++rank);
    out += '\t';
    out += encode_utf8(entry.symbol);
    out += '\t';
    out += std::to_string(entry.count);
    out += '\t';
    out += format_percent(entry.percent);
    out += '\n';
  }
  return out;
}

}  // namespace kbopt
