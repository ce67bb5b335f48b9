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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kbopt {

// A symbol is one Unicode scalar value.
using Symbol = char32_t;

// Ordered, duplicate-free set of symbols eligible for placement. The order is
// the tie-break order for every ranking downstream.
class Alphabet {
 public:
  // Throws kEmptyAlphabet on an empty list, kInvalidArgument on duplicates.
  Alphabet(std::vector<Symbol> symbols, std::string name);

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return symbols_.size(); }

  bool contains(Symbol s) const { return index_.contains(s); }
  std::optional<std::size_t> position(Symbol s) const;

  // Total order on symbols: alphabet position first, then code point for
  // symbols outside the alphabet.
  bool before(Symbol a, Symbol b) const;

  // Lexicographic extension of before() to symbol sequences.
  bool before(std::u32string_view a, std::u32string_view b) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_ && a.name_ == b.name_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::string name_;
  std::unordered_map<Symbol, std::size_t> index_;
};

// Parses the alphabet file format: one symbol per line, '#' lines and blank
// lines ignored, order significant.
Alphabet parse_alphabet(std::string_view text, std::string name);
Alphabet load_alphabet(const std::filesystem::path& path);

// Bangla letters and signs, fixed by data/bangla_alphabet.txt.
Alphabet default_bangla_alphabet();

inline constexpr Symbol kBoundary = static_cast<Symbol>(0xFFFFFFFFu);

inline bool is_boundary(Symbol event) { return event == kBoundary; }

// Sequence of symbol and boundary events. A stream never begins or ends with
// a boundary and never holds two boundaries in a row.
class SymbolStream {
 public:
  class Builder {
   public:
    explicit Builder(std::string source) : source_(std::move(source)) {}
    void symbol(Symbol s);
    // Collapses into an adjacent boundary; ignored at the start of a stream.
    void boundary();
    void append(const SymbolStream& other);
    SymbolStream finish() &&;

   private:
    std::string source_;
    std::vector<Symbol> events_;
  };

  SymbolStream() = default;

  // Throws kContractViolation when the boundary invariants do not hold.
  SymbolStream(std::vector<Symbol> events, std::string source);

  const std::vector<Symbol>& events() const noexcept { return events_; }
  const std::string& source() const noexcept { return source_; }
  std::uint64_t total_symbols() const noexcept { return total_symbols_; }
  bool empty() const noexcept { return events_.empty(); }

  // Maximal boundary-free runs, in stream order. Never empty spans.
  std::vector<std::span<const Symbol>> segments() const;

  // Text with `separator` at each boundary. Loading it again with the same
  // alphabet reproduces the stream when `separator` is outside the alphabet.
  std::u32string render(Symbol separator = U'\n') const;

  friend bool operator==(const SymbolStream& a, const SymbolStream& b) {
    return a.events_ == b.events_;
  }

 private:
  std::vector<Symbol> events_;
  std::string source_;
  std::uint64_t total_symbols_ = 0;
};

enum class Normalization { kNfc, kNone };

// Maps decoded text onto the alphabet: in-alphabet scalars become symbols,
// every maximal run of anything else becomes one boundary.
SymbolStream filter_text(std::u32string_view text, const Alphabet& alphabet,
                         Normalization normalization, std::string source);

// Expands directories (recursively, sorted by path) and keeps command-line
// order otherwise. Throws kMissingPath for a path that does not exist.
std::vector<std::filesystem::path> expand_corpus_paths(
    std::span<const std::filesystem::path> paths);

// Loads, normalizes and filters every file; files are separated by a
// boundary. Throws kMissingPath or kDecode.
SymbolStream load_corpus(std::span<const std::filesystem::path> paths,
                         const Alphabet& alphabet,
                         Normalization normalization = Normalization::kNfc);

}  // namespace kbopt
