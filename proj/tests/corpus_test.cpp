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

#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "kbopt/corpus.hpp"
#include "kbopt/error.hpp"
#include "test_util.hpp"

namespace kbopt {
namespace {

using testing::ascii_alphabet;
using testing::TempDir;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(AlphabetTest, RejectsEmptyAndDuplicates) {
  EXPECT_EQ(code_of([] { Alphabet({}, "empty"); }), ErrorCode::kEmptyAlphabet);
  EXPECT_EQ(code_of([] { Alphabet({U'a', U'b', U'a'}, "dup"); }), ErrorCode::kInvalidArgument);
}

TEST(AlphabetTest, OrderDefinesTieBreak) {
  const Alphabet a({U'c', U'a', U'b'}, "cab");
  EXPECT_TRUE(a.before(U'c', U'a'));
  EXPECT_FALSE(a.before(U'b', U'a'));
  EXPECT_TRUE(a.before(U'b', U'z'));  // members sort before non-members
  EXPECT_TRUE(a.before(std::u32string_view(U"ca"), std::u32string_view(U"ab")));
  EXPECT_EQ(a.position(U'b'), 2u);
  EXPECT_FALSE(a.position(U'z').has_value());
}

TEST(AlphabetTest, ParsesFileFormat) {
  const auto a = parse_alphabet("# comment\nx\n\ny\r\n#z\nz\n", "file");
  EXPECT_EQ(a.symbols(), (std::vector<Symbol>{U'x', U'y', U'z'}));
  EXPECT_EQ(code_of([] { parse_alphabet("ab\n", "bad"); }), ErrorCode::kMalformed);
  EXPECT_EQ(code_of([] { parse_alphabet("# only comments\n", "none"); }),
            ErrorCode::kEmptyAlphabet);
}

TEST(DefaultAlphabetTest, MatchesDataFile) {
  std::ifstream in(KBOPT_SOURCE_DIR "/data/bangla_alphabet.txt");
  ASSERT_TRUE(in);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() != '#') ++lines;
  }
  const auto a = default_bangla_alphabet();
  EXPECT_EQ(a.size(), lines);
  EXPECT_EQ(a.size(), 59u);
}

TEST(DefaultAlphabetTest, NoAsciiNoDigitsDeterministic) {
  const auto a = default_bangla_alphabet();
  for (Symbol s : a.symbols()) {
    EXPECT_GE(s, 0x0980u);
    EXPECT_LE(s, 0x09FFu);
    EXPECT_FALSE(s >= 0x09E6 && s <= 0x09EF) << "digit in alphabet";
  }
  EXPECT_EQ(a, default_bangla_alphabet());
  EXPECT_TRUE(a.contains(U'\u0995'));  // KA
  EXPECT_TRUE(a.contains(U'\u09CB'));  // sign O
}

TEST(DefaultAlphabetTest, EverySymbolIsNfcStable) {
  for (Symbol s : default_bangla_alphabet().symbols()) {
    EXPECT_EQ(nfc(std::u32string(1, s)), std::u32string(1, s)) << std::hex << static_cast<std::uint32_t>(s);
  }
}

TEST(FilterTest, SpaceBecomesBoundary) {
  const auto s = filter_text(U"ab ab", ascii_alphabet(U"ab"), Normalization::kNfc, "t");
  EXPECT_EQ(s.events(), (std::vector<Symbol>{U'a', U'b', kBoundary, U'a', U'b'}));
  EXPECT_EQ(s.total_symbols(), 4u);
}

TEST(FilterTest, RunsCollapseAndEdgesTrim) {
  const auto s = filter_text(U"  a,;  b!!", ascii_alphabet(U"ab"), Normalization::kNone, "t");
  EXPECT_EQ(s.events(), (std::vector<Symbol>{U'a', kBoundary, U'b'}));
  EXPECT_TRUE(filter_text(U"123", ascii_alphabet(U"ab"), Normalization::kNone, "t").empty());
}

// Expected code points come from Python's unicodedata.normalize("NFC", ...).
TEST(FilterTest, DecomposedAndPrecomposedCountAsOneSymbol) {
  const auto alphabet = default_bangla_alphabet();
  // KA + (E + AA) and KA + O: NFC gives KA, U+09CB for both.
  const std::u32string text = U"\u0995\u09C7\u09BE \u0995\u09CB";
  const auto s = filter_text(text, alphabet, Normalization::kNfc, "t");
  EXPECT_EQ(s.events(), (std::vector<Symbol>{0x0995, 0x09CB, kBoundary, 0x0995, 0x09CB}));

  // Without normalization the decomposed pair stays two symbols.
  const auto raw = filter_text(text, alphabet, Normalization::kNone, "t");
  EXPECT_EQ(raw.events(),
            (std::vector<Symbol>{0x0995, 0x09C7, 0x09BE, kBoundary, 0x0995, 0x09CB}));
}

TEST(FilterTest, CompositionExclusionsDecompose) {
  // U+09DF YYA -> U+09AF YA + U+09BC NUKTA under NFC.
  const auto s = filter_text(U"\u09DF", default_bangla_alphabet(), Normalization::kNfc, "t");
  EXPECT_EQ(s.events(), (std::vector<Symbol>{0x09AF, 0x09BC}));
}

TEST(LoadCorpusTest, SeparatesFilesAndSortsDirectories) {
  TempDir dir;
  dir.write("d/b.txt", "bb");
  dir.write("d/a.txt", "aa");
  const auto single = dir.write("single.txt", "ab");
  const std::vector<std::filesystem::path> paths{single, dir / "d"};
  const auto s = load_corpus(paths, ascii_alphabet(U"ab"));
  EXPECT_EQ(s.events(), (std::vector<Symbol>{U'a', U'b', kBoundary, U'a', U'a', kBoundary,
                                             U'b', U'b'}));
}

TEST(LoadCorpusTest, MissingPathAndBadUtf8) {
  TempDir dir;
  const std::vector<std::filesystem::path> missing{dir / "nope.txt"};
  EXPECT_EQ(code_of([&] { load_corpus(missing, ascii_alphabet(U"a")); }),
            ErrorCode::kMissingPath);

  const std::vector<std::filesystem::path> bad{dir.write("bad.txt", "a\xC3\x28")};
  EXPECT_EQ(code_of([&] { load_corpus(bad, ascii_alphabet(U"a")); }), ErrorCode::kDecode);
  const std::vector<std::filesystem::path> overlong{dir.write("overlong.txt", "\xC0\xAF")};
  EXPECT_EQ(code_of([&] { load_corpus(overlong, ascii_alphabet(U"a")); }),
            ErrorCode::kDecode);
}

TEST(LoadCorpusTest, EmptyDirectoryGivesEmptyStream) {
  TempDir dir;
  std::filesystem::create_directories(dir / "empty");
  const std::vector<std::filesystem::path> paths{dir / "empty"};
  EXPECT_TRUE(load_corpus(paths, ascii_alphabet(U"a")).empty());
}

TEST(SymbolStreamTest, RejectsBrokenBoundaryInvariants) {
  EXPECT_EQ(code_of([] { SymbolStream({U'a', kBoundary, kBoundary, U'b'}, "x"); }),
            ErrorCode::kContractViolation);
  EXPECT_EQ(code_of([] { SymbolStream({kBoundary, U'a'}, "x"); }),
            ErrorCode::kContractViolation);
  EXPECT_EQ(code_of([] { SymbolStream({U'a', kBoundary}, "x"); }),
            ErrorCode::kContractViolation);
}

// Properties over random text: boundary collapse, the symbol bound, and
// idempotence of render -> reload.
TEST(CorpusPropertyTest, RandomTextInvariants) {
  std::mt19937 rng(20261019);
  const auto alphabet = ascii_alphabet(U"abcde");
  const std::u32string pool = U"abcde  ,.xyz\u0995\n";
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> len(0, 80);
  for (int trial = 0; trial < 300; ++trial) {
    std::u32string text;
    for (std::size_t i = len(rng); i > 0; --i) text.push_back(pool[pick(rng)]);
    const auto s = filter_text(text, alphabet, Normalization::kNfc, "r");

    std::uint64_t symbols = 0;
    for (std::size_t i = 0; i < s.events().size(); ++i) {
      if (is_boundary(s.events()[i])) {
        ASSERT_TRUE(i > 0 && !is_boundary(s.events()[i - 1]));
      } else {
        ASSERT_TRUE(alphabet.contains(s.events()[i]));
        ++symbols;
      }
    }
    ASSERT_EQ(symbols, s.total_symbols());
    ASSERT_LE(s.total_symbols(), text.size());

    const auto again = filter_text(s.render(U' '), alphabet, Normalization::kNfc, "r2");
    ASSERT_EQ(again.events(), s.events());
  }
}

}  // namespace
}  // namespace kbopt
