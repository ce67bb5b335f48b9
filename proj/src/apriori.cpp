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

#include "kbopt/apriori.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "kbopt/error.hpp"
#include "kbopt/text.hpp"

namespace kbopt::apriori {

namespace {

bool items_less(const ItemSet& a, const ItemSet& b) { return a.items < b.items; }

bool contains_all(const Items& transaction, const Items& itemset) {
  return std::includes(transaction.begin(), transaction.end(), itemset.begin(),
                       itemset.end());
}

}  // namespace

Transaction Transaction::make(std::string tid, Items items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Transaction{std::move(tid), std::move(items)};
}

Level find_frequent_items(std::span<const Transaction> db,
                          std::uint64_t min_support_count) {
  if (min_support_count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "minimum support count must be at least 1");
  }
  std::map<Item, std::uint64_t> counts;
  for (const auto& t : db) {
    for (Item item : t.items) ++counts[item];
  }
  Level out;
  for (const auto& [item, n] : counts) {
    if (n >= min_support_count) out.push_back({{item}, n});
  }
  return out;
}

std::vector<ItemSet> join_candidates(std::span<const ItemSet> previous) {
  if (previous.empty()) return {};
  const std::size_t width = previous.front().items.size();
  if (width == 0) throw Error(ErrorCode::kContractViolation, "cannot join empty itemsets");
  for (std::size_t i = 0; i < previous.size(); ++i) {
    if (previous[i].items.size() != width) {
      throw Error(ErrorCode::kContractViolation, "join input mixes itemset sizes");
    }
    if (i > 0 && !items_less(previous[i - 1], previous[i])) {
      throw Error(ErrorCode::kContractViolation, "join input is not sorted");
    }
  }

  std::vector<ItemSet> out;
  for (std::size_t i = 0; i < previous.size(); ++i) {
    const Items& first = previous[i].items;
    for (std::size_t j = i + 1; j < previous.size(); ++j) {
      const Items& second = previous[j].items;
      // Sorted input: once the (k-2)-prefix differs, no later set shares it.
      if (!std::equal(first.begin(), first.end() - 1, second.begin())) break;
      Items joined = first;
      joined.push_back(second.back());
      out.push_back({std::move(joined), 0});
    }
  }
  return out;
}

std::vector<ItemSet> prune_candidates(std::span<const ItemSet> candidates,
                                      std::span<const ItemSet> previous) {
  std::set<Items> frequent;
  for (const auto& s : previous) frequent.insert(s.items);

  std::vector<ItemSet> out;
  for (const auto& candidate : candidates) {
    bool keep = true;
    Items subset(candidate.items.size() - 1);
    for (std::size_t drop = 0; keep && drop < candidate.items.size(); ++drop) {
      std::copy(candidate.items.begin(), candidate.items.begin() + drop, subset.begin());
      std::copy(candidate.items.begin() + drop + 1, candidate.items.end(),
                subset.begin() + drop);
      keep = frequent.contains(subset);
    }
    if (keep) out.push_back(candidate);
  }
  return out;
}

void count_support(std::span<ItemSet> candidates, std::span<const Transaction> db) {
  for (auto& c : candidates) c.support_count = 0;
  for (const auto& t : db) {
    for (auto& c : candidates) {
      if (contains_all(t.items, c.items)) ++c.support_count;
    }
  }
}

std::vector<Level> mine_frequent(std::span<const Transaction> db,
                                 std::uint64_t min_support_count,
                                 std::vector<LevelTrace>* trace) {
  std::vector<Level> levels;
  Level current = find_frequent_items(db, min_support_count);
  if (trace) {
    trace->clear();
    LevelTrace first{1, {}, current};
    std::map<Item, std::uint64_t> counts;
    for (const auto& t : db) {
      for (Item item : t.items) ++counts[item];
    }
    for (const auto& [item, n] : counts) first.candidates.push_back({{item}, n});
    trace->push_back(std::move(first));
  }

  for (std::size_t k = 2; !current.empty(); ++k) {
    levels.push_back(current);
    std::vector<ItemSet> candidates =
        prune_candidates(join_candidates(current), current);
    count_support(candidates, db);
    Level next;
    for (const auto& c : candidates) {
      if (c.support_count >= min_support_count) next.push_back(c);
    }
    if (trace) trace->push_back({k, std::move(candidates), next});
    current = std::move(next);
  }
  return levels;
}

std::vector<AssociationRule> generate_rules(std::span<const Level> levels,
                                            std::uint64_t db_size,
                                            double min_confidence_percent) {
  if (db_size == 0) throw Error(ErrorCode::kInvalidArgument, "database size must be positive");
  std::map<Items, std::uint64_t> counts;
  for (const auto& level : levels) {
    for (const auto& s : level) counts.emplace(s.items, s.support_count);
  }

  std::vector<AssociationRule> out;
  for (const auto& level : levels) {
    for (const auto& frequent : level) {
      const std::size_t n = frequent.items.size();
      if (n < 2) continue;
      if (n >= 63) {
        throw Error(ErrorCode::kInvalidArgument, "itemset too large for rule enumeration");
      }
      std::vector<Items> antecedents;
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        Items a;
        for (std::size_t bit = 0; bit < n; ++bit) {
          if (mask & (std::uint64_t{1} << bit)) a.push_back(frequent.items[bit]);
        }
        antecedents.push_back(std::move(a));
      }
      std::sort(antecedents.begin(), antecedents.end());

      for (auto& antecedent : antecedents) {
        const auto it = counts.find(antecedent);
        if (it == counts.end()) {
          throw Error(ErrorCode::kInternal,
                      "subset of a frequent itemset is missing from the levels");
        }
        const double confidence = static_cast<double>(frequent.support_count) /
                                  static_cast<double>(it->second) * 100.0;
        if (confidence < min_confidence_percent) continue;
        Items consequent;
        std::set_difference(frequent.items.begin(), frequent.items.end(),
                            antecedent.begin(), antecedent.end(),
                            std::back_inserter(consequent));
        out.push_back({std::move(antecedent), std::move(consequent),
                       frequent.support_count, it->second,
                       static_cast<double>(frequent.support_count) /
                           static_cast<double>(db_size) * 100.0,
                       confidence});
      }
    }
  }
  return out;
}

std::uint64_t min_count_from_percent(double percent, std::size_t db_size) {
  if (!(percent >= 0.0 && percent <= 100.0)) {
    throw Error(ErrorCode::kInvalidArgument, "support percentage must lie in [0, 100]");
  }
  // The epsilon absorbs representation error such as 50% of 10 = 5.000000001.
  const double exact = percent / 100.0 * static_cast<double>(db_size);
  const auto count = static_cast<std::uint64_t>(std::ceil(exact - 1e-9));
  return std::max<std::uint64_t>(count, 1);
}

ItemDictionary::ItemDictionary(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!ids_.emplace(labels_[i], static_cast<Item>(i)).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate item label '" + labels_[i] + "'");
    }
  }
}

const std::string& ItemDictionary::label(Item id) const {
  if (id >= labels_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown item id " + std::to_string(id));
  }
  return labels_[id];
}

Item ItemDictionary::id(std::string_view label) const {
  const auto it = ids_.find(std::string(label));
  if (it == ids_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown item label '" + std::string(label) + "'");
  }
  return it->second;
}

namespace {

bool is_unsigned_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool numeric_less(std::string_view a, std::string_view b) {
  a.remove_prefix(std::min(a.find_first_not_of('0'), a.size()));
  b.remove_prefix(std::min(b.find_first_not_of('0'), b.size()));
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

TransactionDatabase parse_transactions(std::string_view text, std::string_view name) {
  decode_utf8(text, name);  // validates encoding

  std::vector<std::vector<std::string>> rows;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    rows.push_back(tokens);
  }

  std::vector<std::string> labels;
  for (const auto& row : rows) labels.insert(labels.end(), row.begin(), row.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (std::all_of(labels.begin(), labels.end(), is_unsigned_integer)) {
    std::sort(labels.begin(), labels.end(), numeric_less);
  }

  TransactionDatabase db{{}, ItemDictionary(std::move(labels))};
  db.transactions.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Items items;
    for (const auto& token : rows[r]) items.push_back(db.dictionary.id(token));
    db.transactions.push_back(Transaction::make("T" + std::to_string(r + 1), std::move(items)));
  }
  return db;
}

TransactionDatabase transactions_from_stream(const SymbolStream& stream,
                                             const Alphabet& alphabet) {
  std::vector<std::string> labels;
  labels.reserve(alphabet.size());
  for (Symbol s : alphabet.symbols()) labels.push_back(encode_utf8(s));

  TransactionDatabase db{{}, ItemDictionary(std::move(labels))};
  std::size_t n = 0;
  for (const auto segment : stream.segments()) {
    Items items;
    items.reserve(segment.size());
    for (Symbol s : segment) {
      const auto pos = alphabet.position(s);
      if (!pos) {
        throw Error(ErrorCode::kContractViolation,
                    "stream symbol '" + encode_utf8(s) + "' is not in the alphabet");
      }
      items.push_back(static_cast<Item>(*pos));
    }
    db.transactions.push_back(Transaction::make("S" + std::to_string(++n), std::move(items)));
  }
  return db;
}

std::string join_labels(const Items& items, const ItemDictionary& dictionary) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += dictionary.label(items[i]);
  }
  return out;
}

std::string levels_tsv(std::span<const Level> levels, const ItemDictionary& dictionary) {
  std::string out = "level\titemset\tsupport_count\n";
  for (const auto& level : levels) {
    for (const auto& s : level) {
      out += std::to_string(s.items.size()) + '\t' + join_labels(s.items, dictionary) +
             '\t' + std::to_string(s.support_count) + '\n';
    }
  }
  return out;
}

std::string candidates_tsv(std::span<const LevelTrace> trace,
                           const ItemDictionary& dictionary) {
  std::string out = "level\titemset\tscan_count\n";
  for (const auto& level : trace) {
    for (const auto& s : level.candidates) {
      out += std::to_string(level.size) + '\t' + join_labels(s.items, dictionary) + '\t' +
             std::to_string(s.support_count) + '\n';
    }
  }
  return out;
}

std::string rules_tsv(std::span<const AssociationRule> rules,
                      const ItemDictionary& dictionary) {
  std::string out = "antecedent\tconsequent\tsupport\tconfidence\n";
  for (const auto& r : rules) {
    out += join_labels(r.antecedent, dictionary) + '\t' +
           join_labels(r.consequent, dictionary) + '\t' + format_percent(r.support) + '\t' +
           format_percent(r.confidence) + '\n';
  }
  return out;
}

}  // namespace kbopt::apriori
