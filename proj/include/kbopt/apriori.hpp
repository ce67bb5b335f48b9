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

// Level-wise Apriori mining of frequent itemsets and strong rules.
//
// Items are dense integer identifiers; ItemDictionary maps them to and from
// the labels used in transaction files (or to alphabet symbols when the
// database is built from a corpus).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kbopt/corpus.hpp"

namespace kbopt::apriori {

using Item = std::uint32_t;
using Items = std::vector<Item>;

struct Transaction {
  std::string tid;
  Items items;  // strictly ascending

  // Sorts and deduplicates `items`.
  static Transaction make(std::string tid, Items items);
};

struct ItemSet {
  Items items;  // strictly ascending
  std::uint64_t support_count = 0;

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
};

using Level = std::vector<ItemSet>;

// C_k as counted by the database scan (after pruning) next to the L_k kept
// from it. The last entry of a trace has no frequent sets.
struct LevelTrace {
  std::size_t size = 0;
  std::vector<ItemSet> candidates;
  Level frequent;
};

struct AssociationRule {
  Items antecedent;
  Items consequent;
  std::uint64_t itemset_count = 0;
  std::uint64_t antecedent_count = 0;
  double support = 0.0;     // percent of transactions
  double confidence = 0.0;  // percent
};

// L1: every item with at least min_support_count occurrences, by identifier.
Level find_frequent_items(std::span<const Transaction> db, std::uint64_t min_support_count);

// Join step: pairs sharing their first k-2 items. Input must be one size and
// sorted; throws kContractViolation otherwise. Counts are left at zero.
std::vector<ItemSet> join_candidates(std::span<const ItemSet> previous);

// Prune step: keeps candidates whose every (k-1)-subset is in `previous`.
std::vector<ItemSet> prune_candidates(std::span<const ItemSet> candidates,
                                      std::span<const ItemSet> previous);

// One scan of the database; overwrites each candidate's support_count.
void count_support(std::span<ItemSet> candidates, std::span<const Transaction> db);

// Returns the nonempty levels L1..Lmax. When `trace` is given it receives
// one entry per scanned level, ending with the level that came out empty.
std::vector<Level> mine_frequent(std::span<const Transaction> db,
                                 std::uint64_t min_support_count,
                                 std::vector<LevelTrace>* trace = nullptr);

// Rules A => F\A for every frequent F with |F| >= 2 and nonempty proper
// subset A whose confidence reaches min_confidence_percent, ordered by F
// (level, then lexicographic) and then by A.
std::vector<AssociationRule> generate_rules(std::span<const Level> levels,
                                            std::uint64_t db_size,
                                            double min_confidence_percent);

// ceil(percent / 100 * db_size), at least 1.
std::uint64_t min_count_from_percent(double percent, std::size_t db_size);

class ItemDictionary {
 public:
  ItemDictionary() = default;
  explicit ItemDictionary(std::vector<std::string> labels);

  const std::string& label(Item id) const;
  Item id(std::string_view label) const;
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Item> ids_;
};

struct TransactionDatabase {
  std::vector<Transaction> transactions;
  ItemDictionary dictionary;
};

// One transaction per line, whitespace-separated item labels, '#' comments
// and blank lines ignored. Identifiers follow numeric order when every label
// is an unsigned integer, byte order otherwise.
TransactionDatabase parse_transactions(std::string_view text, std::string_view name);

// One transaction per boundary-free run, holding that run's distinct
// symbols; item identifiers are alphabet positions.
TransactionDatabase transactions_from_stream(const SymbolStream& stream,
                                             const Alphabet& alphabet);

std::string join_labels(const Items& items, const ItemDictionary& dictionary);

// "level\titemset\tsupport_count"
std::string levels_tsv(std::span<const Level> levels, const ItemDictionary& dictionary);

// "level\titemset\tscan_count"
std::string candidates_tsv(std::span<const LevelTrace> trace,
                           const ItemDictionary& dictionary);

// "antecedent\tconsequent\tsupport\tconfidence"
std::string rules_tsv(std::span<const AssociationRule> rules,
                      const ItemDictionary& dictionary);

}  // namespace kbopt::apriori
