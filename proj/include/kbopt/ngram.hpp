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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kbopt/corpus.hpp"

namespace kbopt {

using Gram = std::u32string;

// Occurrence counts of length-`order` symbol windows. Zero counts are never
// stored and total() is always the sum of counts().
class NgramTable {
 public:
  // order must be 1, 2 or 3.
  explicit NgramTable(int order);

  int order() const noexcept { return order_; }
  const std::map<Gram, std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return counts_.size(); }

  std::uint64_t count(std::u32string_view gram) const;

  void add(std::u32string_view gram, std::uint64_t n = 1);

  // Tables of equal order add element-wise.
  NgramTable& merge(const NgramTable& other);

  friend bool operator==(const NgramTable&, const NgramTable&) = default;

 private:
  int order_;
  std::map<Gram, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Counts every stride-1 window inside each boundary-free run.
NgramTable count_ngrams(const SymbolStream& stream, int order);

struct NgramSet {
  NgramTable monograms{1};
  NgramTable digrams{2};
  NgramTable trigrams{3};
};

NgramSet count_all(const SymbolStream& stream);

struct DigramMetrics {
  Symbol first;
  Symbol second;
  std::uint64_t count;
  double support;     // percent of all digrams
  double confidence;  // percent of occurrences of `first`
};

// Throws kEmptyCorpus when digrams is empty, kAbsentGram when the pair or
// its first symbol is not counted.
DigramMetrics digram_metrics(const NgramTable& digrams, const NgramTable& monograms,
                             Symbol first, Symbol second);

struct RankedSymbol {
  Symbol symbol;
  std::uint64_t count;
  double percent;
};

// Descending count, ties by alphabet order; at most k entries.
std::vector<RankedSymbol> top_k(const NgramTable& monograms, std::size_t k,
                                const Alphabet& alphabet);

// Full ranking (top_k without a cap).
std::vector<RankedSymbol> rank_symbols(const NgramTable& monograms,
                                       const Alphabet& alphabet);

// "gram\tcount\tpercent" rows, count descending then alphabet order.
std::string frequency_tsv(const NgramTable& table, const Alphabet& alphabet);

// Top-k monogram report: "rank\tletter\tfrequency\tpercentage".
std::string top_k_tsv(const NgramTable& monograms, std::size_t k,
                      const Alphabet& alphabet);

}  // namespace kbopt
