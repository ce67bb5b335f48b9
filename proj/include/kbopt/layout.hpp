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

// Greedy two-hand partition of ranked letters and frequency-to-effort key
// placement.
//
// The partition seeds ranks 1 and 4 on the right hand and ranks 2 and 3 on
// the left. Every later letter, in rank order, is scored against the letters
// already on each side: the sum of support(xy) and of confidence(x -> y)
// over y on that side. The letter goes RIGHT only when the left sums are
// strictly greater on both measures; otherwise it goes LEFT. A letter strongly
// associated with one hand thus lands on the other, which raises hand
// alternation.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbopt/corpus.hpp"
#include "kbopt/geometry.hpp"
#include "kbopt/ngram.hpp"

namespace kbopt {

enum class AssociationMode {
  kDirected,   // digrams xy only
  kSymmetric,  // xy and yx (not part of the original method)
};

enum class DecisionPolicy {
  kLiteral,       // RIGHT iff left support > right support AND left conf > right conf
  kMajority,      // experimental, see decide_hand()
};

struct Association {
  double support = 0.0;     // percent, summed over the side
  double confidence = 0.0;  // percent, summed over the side

  friend bool operator==(const Association&, const Association&) = default;
};

struct PlacementDecision {
  std::size_t rank = 0;  // 1-based frequency rank
  Symbol symbol = 0;
  Association left;
  Association right;
  Hand hand = Hand::kLeft;
};

struct HandPartition {
  std::vector<Symbol> left;
  std::vector<Symbol> right;
  std::vector<PlacementDecision> trace;  // one entry per non-seed letter
};

struct PartitionOptions {
  AssociationMode association = AssociationMode::kDirected;
  DecisionPolicy policy = DecisionPolicy::kLiteral;
};

// right = [rank1, rank4], left = [rank2, rank3]. Throws
// kInsufficientAlphabet for fewer than four letters.
HandPartition seed_partition(std::span<const Symbol> ranked);

// Absent digrams contribute zero. Throws kContractViolation if `symbol` is
// itself on `side`.
Association cumulative_association(Symbol symbol, std::span<const Symbol> side,
                                   const NgramTable& digrams, const NgramTable& monograms,
                                   AssociationMode mode = AssociationMode::kDirected);

// Majority: each of the two comparisons votes for RIGHT when the left sum is
// larger and for LEFT when the right sum is larger; ties between the votes
// go to the hand holding fewer letters, then LEFT.
Hand decide_hand(const Association& left, const Association& right, DecisionPolicy policy,
                 std::size_t left_size = 0, std::size_t right_size = 0);

HandPartition partition_letters(std::span<const Symbol> ranked, const NgramTable& digrams,
                                const NgramTable& monograms,
                                const PartitionOptions& options = {});

struct Layout {
  std::string name;
  KeyboardGeometry geometry;
  std::map<Symbol, std::string> mapping;  // symbol -> key id

  // Throws kDuplicateKey or kUnknownKey.
  void validate() const;

  // Hand of the key holding `symbol`; nullptr when unmapped.
  const Key* key_of(Symbol symbol) const;
};

struct Placement {
  Layout layout;
  std::vector<Symbol> unassigned;  // letters beyond a hand's key supply
};

// Per hand: letters by frequency (ties by alphabet order) onto keys in
// KeyboardGeometry::fill_order.
Placement assign_positions(const HandPartition& partition, const KeyboardGeometry& geometry,
                           const NgramTable& monograms, const Alphabet& alphabet,
                           std::string name);

// Layout files are JSON: {"name", "geometry", "mapping": [{"symbol", "key_id"}]}.
// Mapping entries are written in geometry key order.
std::string layout_json(const Layout& layout);

// The layout's geometry is looked up by name among `geometries`. Throws
// kMalformed, kGeometry, kDuplicateKey or kUnknownKey.
Layout parse_layout(std::string_view json, std::span<const KeyboardGeometry> geometries,
                    std::string_view source);

// "rank\tsymbol\tleft_support\tleft_confidence\tright_support\tright_confidence\thand"
std::string trace_tsv(const HandPartition& partition);

}  // namespace kbopt
