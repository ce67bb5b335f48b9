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

#include "kbopt/layout.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "kbopt/error.hpp"
#include "kbopt/text.hpp"

namespace kbopt {

using nlohmann::ordered_json;

HandPartition seed_partition(std::span<const Symbol> ranked) {
  if (ranked.size() < 4) {
    throw Error(ErrorCode::kInsufficientAlphabet,
                "need at least 4 ranked letters to seed both hands, got " +
                    std::to_string(ranked.size()));
  }
  HandPartition p;
  p.right = {ranked[0], ranked[3]};
  p.left = {ranked[1], ranked[2]};
  return p;
}

namespace {

double ratio_percent(std::uint64_t n, std::uint64_t base) {
  return base == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(base) * 100.0;
}

}  // namespace

Association cumulative_association(Symbol symbol, std::span<const Symbol> side,
                                   const NgramTable& digrams, const NgramTable& monograms,
                                   AssociationMode mode) {
  if (std::find(side.begin(), side.end(), symbol) != side.end()) {
    throw Error(ErrorCode::kContractViolation,
                "letter '" + encode_utf8(symbol) + "' is already on this side");
  }
  const std::uint64_t own = monograms.count(std::u32string_view(&symbol, 1));
  Association sum;
  for (Symbol other : side) {
    const Symbol forward[2] = {symbol, other};
    const std::uint64_t n = digrams.count(std::u32string_view(forward, 2));
    sum.support += ratio_percent(n, digrams.total());
    sum.confidence += ratio_percent(n, own);
    if (mode == AssociationMode::kSymmetric) {
      const Symbol backward[2] = {other, symbol};
      const std::uint64_t m = digrams.count(std::u32string_view(backward, 2));
      sum.support += ratio_percent(m, digrams.total());
      sum.confidence += ratio_percent(m, monograms.count(std::u32string_view(&other, 1)));
    }
  }
  return sum;
}

Hand decide_hand(const Association& left, const Association& right, DecisionPolicy policy,
                 std::size_t left_size, std::size_t right_size) {
  if (policy == DecisionPolicy::kLiteral) {
    return left.support > right.support && left.confidence > right.confidence ? Hand::kRight
                                                                              : Hand::kLeft;
  }
  const int votes = (left.support > right.support) - (left.support < right.support) +
                    (left.confidence > right.confidence) -
                    (left.confidence < right.confidence);
  if (votes > 0) return Hand::kRight;
  if (votes < 0) return Hand::kLeft;
  return right_size < left_size ? Hand::kRight : Hand::kLeft;
}

HandPartition partition_letters(std::span<const Symbol> ranked, const NgramTable& digrams,
                                const NgramTable& monograms, const PartitionOptions& options) {
  HandPartition p = seed_partition(ranked);
  for (std::size_t i = 4; i < ranked.size(); ++i) {
    const Symbol letter = ranked[i];
    PlacementDecision d;
    d.rank = i + 1;
    d.symbol = letter;
    d.left = cumulative_association(letter, p.left, digrams, monograms, options.association);
    d.right = cumulative_association(letter, p.right, digrams, monograms, options.association);
    d.hand = decide_hand(d.left, d.right, options.policy, p.left.size(), p.right.size());
    (d.hand == Hand::kRight ? p.right : p.left).push_back(letter);
    p.trace.push_back(d);
  }
  return p;
}

void Layout::validate() const {
  std::set<std::string_view> used;
  for (const auto& [symbol, key_id] : mapping) {
    if (geometry.find(key_id) == nullptr) {
      throw Error(ErrorCode::kUnknownKey, "layout '" + name + "': key '" + key_id +
                                              "' is not in geometry '" + geometry.name + "'");
    }
    if (!used.insert(key_id).second) {
      throw Error(ErrorCode::kDuplicateKey,
                  "layout '" + name + "': key '" + key_id + "' holds more than one symbol");
    }
  }
}

const Key* Layout::key_of(Symbol symbol) const {
  const auto it = mapping.find(symbol);
  return it == mapping.end() ? nullptr : geometry.find(it->second);
}

Placement assign_positions(const HandPartition& partition, const KeyboardGeometry& geometry,
                           const NgramTable& monograms, const Alphabet& alphabet,
                           std::string name) {
  Placement out{Layout{std::move(name), geometry, {}}, {}};
  for (Hand hand : {Hand::kLeft, Hand::kRight}) {
    std::vector<Symbol> letters = hand == Hand::kLeft ? partition.left : partition.right;
    if (letters.empty()) continue;
    const auto keys = geometry.fill_order(hand);
    if (keys.empty()) {
      throw Error(ErrorCode::kGeometry, "geometry '" + geometry.name + "' has no " +
                                            to_string(hand) + "-hand keys");
    }
    std::stable_sort(letters.begin(), letters.end(), [&](Symbol a, Symbol b) {
      const auto ca = monograms.count(std::u32string_view(&a, 1));
      const auto cb = monograms.count(std::u32string_view(&b, 1));
      if (ca != cb) return ca > cb;
      return alphabet.before(a, b);
    });
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i < keys.size()) {
        out.layout.mapping.emplace(letters[i], keys[i]->id);
      } else {
        out.unassigned.push_back(letters[i]);
      }
    }
  }
  return out;
}

std::string layout_json(const Layout& layout) {
  std::map<std::string_view, Symbol> by_key;
  for (const auto& [symbol, key_id] : layout.mapping) by_key.emplace(key_id, symbol);

  ordered_json doc;
  doc["name"] = layout.name;
  doc["geometry"] = layout.geometry.name;
  doc["mapping"] = ordered_json::array();
  for (const auto& key : layout.geometry.keys) {
    const auto it = by_key.find(key.id);
    if (it == by_key.end()) continue;
    ordered_json entry;
    entry["symbol"] = encode_utf8(it->second);
    entry["key_id"] = key.id;
    doc["mapping"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

Layout parse_layout(std::string_view json, std::span<const KeyboardGeometry> geometries,
                    std::string_view source) {
  const std::string where(source);
  auto malformed = [&where](const std::string& what) {
    return Error(ErrorCode::kMalformed, where + ": " + what);
  };

  ordered_json doc;
  try {
    doc = ordered_json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed(e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string() ||
      !doc.contains("geometry") || !doc["geometry"].is_string() ||
      !doc.contains("mapping") || !doc["mapping"].is_array()) {
    throw malformed("expected an object with string 'name', string 'geometry' and list 'mapping'");
  }

  const auto geometry_name = doc["geometry"].get<std::string>();
  const auto geometry = std::find_if(geometries.begin(), geometries.end(),
                                     [&](const KeyboardGeometry& g) { return g.name == geometry_name; });
  if (geometry == geometries.end()) {
    throw Error(ErrorCode::kGeometry, where + ": unknown geometry '" + geometry_name + "'");
  }

  Layout layout{doc["name"].get<std::string>(), *geometry, {}};
  std::set<std::string> used;
  for (const auto& entry : doc["mapping"]) {
    if (!entry.is_object() || !entry.contains("symbol") || !entry["symbol"].is_string() ||
        !entry.contains("key_id") || !entry["key_id"].is_string()) {
      throw malformed("mapping entries need string 'symbol' and 'key_id'");
    }
    const auto text = decode_utf8(entry["symbol"].get<std::string>(), where);
    if (text.size() != 1) throw malformed("each mapping symbol must be one scalar value");
    const auto key_id = entry["key_id"].get<std::string>();
    if (layout.geometry.find(key_id) == nullptr) {
      throw Error(ErrorCode::kUnknownKey, where + ": key '" + key_id +
                                              "' is not in geometry '" + geometry_name + "'");
    }
    if (!used.insert(key_id).second) {
      throw Error(ErrorCode::kDuplicateKey,
                  where + ": key '" + key_id + "' is assigned more than once");
    }
    if (!layout.mapping.emplace(text.front(), key_id).second) {
      throw malformed("symbol '" + encode_utf8(text.front()) + "' is assigned more than once");
    }
  }
  return layout;
}

std::string trace_tsv(const HandPartition& partition) {
  std::string out =
      "rank\tsymbol\tleft_support\tleft_confidence\tright_support\tright_confidence\thand\n";
  for (const auto& d : partition.trace) {
    out += std::to_string(d.rank) + '\t' + encode_utf8(d.symbol) + '\t' +
           format_percent(d.left.support) + '\t' + format_percent(d.left.confidence) + '\t' +
           format_percent(d.right.support) + '\t' + format_percent(d.right.confidence) + '\t' +
           to_string(d.hand) + '\n';
  }
  return out;
}

}  // namespace kbopt
