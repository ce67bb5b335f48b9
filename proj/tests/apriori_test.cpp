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

#include <random>

#include "kbopt/apriori.hpp"
#include "kbopt/error.hpp"
#include "kbopt/fixtures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace kbopt::apriori {
namespace {

std::vector<Transaction> sample_db() {
  const std::vector<Items> rows = {{1, 2, 5}, {2, 4},    {2, 3},       {1, 2, 4}, {1, 3},
                                   {2, 3},    {1, 3},    {1, 2, 3, 5}, {1, 2, 3}};
  std::vector<Transaction> db;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    db.push_back(Transaction::make("T" + std::to_string(100 * (i + 1)), rows[i]));
  }
  return db;
}

std::vector<ItemSet> sets(std::initializer_list<Items> items) {
  std::vector<ItemSet> out;
  for (const auto& i : items) out.push_back({i, 0});
  return out;
}

std::vector<Items> items_of(const std::vector<ItemSet>& s) {
  std::vector<Items> out;
  for (const auto& x : s) out.push_back(x.items);
  return out;
}

TEST(FrequentItemsTest, SampleDatabase) {
  const auto l1 = find_frequent_items(sample_db(), 2);
  EXPECT_EQ(l1, (Level{{{1}, 6}, {{2}, 7}, {{3}, 6}, {{4}, 2}, {{5}, 2}}));
  EXPECT_EQ(find_frequent_items(sample_db(), 7), (Level{{{2}, 7}}));
  EXPECT_TRUE(find_frequent_items({}, 2).empty());
  EXPECT_THROW(find_frequent_items(sample_db(), 0), Error);
}

TEST(JoinTest, PairsSharingPrefix) {
  const auto l2 = sets({{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  // {2,3,4} comes from joining {2,3} with {2,4}; the prune step removes it
  // because {3,4} is not frequent.
  EXPECT_EQ(items_of(join_candidates(l2)),
            (std::vector<Items>{{1, 2, 3}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}}));
  EXPECT_EQ(items_of(join_candidates(sets({{1, 2, 3}, {1, 2, 5}}))),
            (std::vector<Items>{{1, 2, 3, 5}}));
  EXPECT_TRUE(join_candidates(sets({{1}})).empty());
}

TEST(JoinTest, MixedSizesViolateContract) {
  try {
    join_candidates(sets({{1}, {1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kContractViolation);
  }
}

TEST(PruneTest, DropsCandidatesWithInfrequentSubsets) {
  const auto l2 = sets({{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const auto c3 = sets({{1, 2, 3}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
  EXPECT_EQ(items_of(prune_candidates(c3, l2)), (std::vector<Items>{{1, 2, 3}, {1, 2, 5}}));
  EXPECT_EQ(items_of(prune_candidates(join_candidates(l2), l2)),
            (std::vector<Items>{{1, 2, 3}, {1, 2, 5}}));

  const auto l3 = sets({{1, 2, 3}, {1, 2, 5}});
  EXPECT_TRUE(prune_candidates(sets({{1, 2, 3, 5}}), l3).empty());

  const auto all = sets({{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(items_of(prune_candidates(sets({{1, 2, 3}}), all)), (std::vector<Items>{{1, 2, 3}}));
}

TEST(MineFrequentTest, SampleDatabaseLevelsAndTrace) {
  std::vector<LevelTrace> trace;
  const auto levels = mine_frequent(sample_db(), 2, &trace);
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_EQ(levels[1], (Level{{{1, 2}, 4}, {{1, 3}, 4}, {{1, 5}, 2},
                              {{2, 3}, 4}, {{2, 4}, 2}, {{2, 5}, 2}}));
  EXPECT_EQ(levels[2], (Level{{{1, 2, 3}, 2}, {{1, 2, 5}, 2}}));

  ASSERT_EQ(trace.size(), 4u);
  EXPECT_EQ(trace[1].candidates,
            (std::vector<ItemSet>{{{1, 2}, 4}, {{1, 3}, 4}, {{1, 4}, 1}, {{1, 5}, 2},
                                  {{2, 3}, 4}, {{2, 4}, 2}, {{2, 5}, 2}, {{3, 4}, 0},
                                  {{3, 5}, 1}, {{4, 5}, 0}}));
  EXPECT_EQ(trace[3].size, 4u);
  EXPECT_TRUE(trace[3].candidates.empty());
}

TEST(MineFrequentTest, SingleTransaction) {
  const std::vector<Transaction> db{Transaction::make("T1", {2, 1})};
  const auto levels = mine_frequent(db, 1);
  ASSERT_EQ(levels.size(), 2u);
  EXPECT_EQ(levels[0], (Level{{{1}, 1}, {{2}, 1}}));
  EXPECT_EQ(levels[1], (Level{{{1, 2}, 1}}));
}

TEST(RulesTest, SampleDatabase) {
  const auto db = sample_db();
  const auto levels = mine_frequent(db, 2);

  const auto strict = generate_rules(levels, db.size(), 100.0);
  const auto found = std::find_if(strict.begin(), strict.end(), [](const AssociationRule& r) {
    return r.antecedent == Items{1, 5} && r.consequent == Items{2};
  });
  ASSERT_NE(found, strict.end());
  EXPECT_DOUBLE_EQ(found->confidence, 100.0);
  EXPECT_NEAR(found->support, 200.0 / 9.0, 1e-12);

  const auto loose = generate_rules(levels, db.size(), 70.0);
  EXPECT_TRUE(std::none_of(loose.begin(), loose.end(), [](const AssociationRule& r) {
    return r.antecedent == Items{2} && r.consequent == Items{1, 5};
  }));

  const auto all = generate_rules(levels, db.size(), 0.0);
  std::size_t expected = 0;
  for (const auto& level : levels) {
    for (const auto& f : level) {
      if (f.items.size() >= 2) expected += (std::size_t{1} << f.items.size()) - 2;
    }
  }
  EXPECT_EQ(all.size(), expected);
  const auto weak = std::find_if(all.begin(), all.end(), [](const AssociationRule& r) {
    return r.antecedent == Items{2} && r.consequent == Items{1, 5};
  });
  ASSERT_NE(weak, all.end());
  EXPECT_NEAR(weak->confidence, 200.0 / 7.0, 1e-12);
}

TEST(RulesTest, MissingSubsetIsInternalError) {
  const std::vector<Level> levels{{{{1, 2}, 3}}};
  try {
    generate_rules(levels, 5, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInternal);
  }
}

TEST(MinCountTest, PercentToCeilingCount) {
  EXPECT_EQ(min_count_from_percent(22.0, 9), 2u);
  EXPECT_EQ(min_count_from_percent(50.0, 10), 5u);
  EXPECT_EQ(min_count_from_percent(0.0, 10), 1u);
  EXPECT_EQ(min_count_from_percent(100.0, 9), 9u);
  EXPECT_THROW(min_count_from_percent(101.0, 9), Error);
}

TEST(TransactionFileTest, ParsesSampleFixture) {
  const auto db = parse_transactions(sample_transactions(), "sample");
  ASSERT_EQ(db.transactions.size(), 9u);
  EXPECT_EQ(db.dictionary.size(), 5u);
  EXPECT_EQ(db.dictionary.label(0), "1");
  EXPECT_EQ(db.dictionary.label(4), "5");
  const auto levels = mine_frequent(db.transactions, 2);
  EXPECT_EQ(levels_tsv(levels, db.dictionary),
            "level\titemset\tsupport_count\n"
            "1\t1\t6\n1\t2\t7\n1\t3\t6\n1\t4\t2\n1\t5\t2\n"
            "2\t1,2\t4\n2\t1,3\t4\n2\t1,5\t2\n2\t2,3\t4\n2\t2,4\t2\n2\t2,5\t2\n"
            "3\t1,2,3\t2\n3\t1,2,5\t2\n");
}

TEST(TransactionFileTest, LabelOrdering) {
  const auto numeric = parse_transactions("10 9\n100 2\n", "n");
  EXPECT_EQ(numeric.dictionary.label(0), "2");
  EXPECT_EQ(numeric.dictionary.label(3), "100");
  const auto text = parse_transactions("# c\nbread milk\n\nmilk eggs eggs\n", "t");
  EXPECT_EQ(text.transactions.size(), 2u);
  EXPECT_EQ(text.dictionary.label(0), "bread");
  EXPECT_EQ(text.transactions[1].items, (Items{1, 2}));
}

TEST(TransactionFileTest, FromStream) {
  const auto alphabet = testing::ascii_alphabet(U"abc");
  const auto db = transactions_from_stream(testing::stream_of(U"cab|aa|b"), alphabet);
  ASSERT_EQ(db.transactions.size(), 3u);
  EXPECT_EQ(db.transactions[0].items, (Items{0, 1, 2}));
  EXPECT_EQ(db.transactions[1].items, (Items{0}));
  EXPECT_EQ(db.dictionary.label(2), "c");
}

TEST(RulesTsvTest, Format) {
  const auto db = parse_transactions(sample_transactions(), "sample");
  const auto levels = mine_frequent(db.transactions, 2);
  const auto rules = generate_rules(levels, db.transactions.size(), 100.0);
  const auto tsv = rules_tsv(rules, db.dictionary);
  EXPECT_NE(tsv.find("1,5\t2\t22.222222\t100.000000\n"), std::string::npos);
}

std::vector<Transaction> random_db(std::mt19937& rng, std::uint32_t universe) {
  std::uniform_int_distribution<int> rows(0, 12);
  std::bernoulli_distribution include(0.45);
  std::vector<Transaction> db;
  for (int r = rows(rng); r > 0; --r) {
    Items items;
    for (Item i = 0; i < universe; ++i) {
      if (include(rng)) items.push_back(i);
    }
    db.push_back(Transaction::make("T", items));
  }
  return db;
}

TEST(AprioriPropertyTest, EqualsBruteForceEnumeration) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::uint32_t> universe_size(1, 8);
  std::uniform_int_distribution<std::uint64_t> min_count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto universe = universe_size(rng);
    const auto db = random_db(rng, universe);
    const auto min = min_count(rng);
    std::vector<std::vector<std::uint32_t>> raw;
    for (const auto& t : db) raw.push_back(t.items);

    const auto levels = mine_frequent(db, min);
    const auto expected = oracle::enumerate_frequent(raw, universe, min);
    ASSERT_EQ(levels.size(), expected.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
      ASSERT_EQ(levels[k].size(), expected[k].size());
      for (std::size_t i = 0; i < levels[k].size(); ++i) {
        ASSERT_EQ(levels[k][i].items, expected[k][i].first);
        ASSERT_EQ(levels[k][i].support_count, expected[k][i].second);
      }
    }

    // Downward closure.
    for (std::size_t k = 1; k < levels.size(); ++k) {
      ASSERT_EQ(prune_candidates(levels[k], levels[k - 1]).size(), levels[k].size());
    }

    // Monotonicity in the support threshold.
    const auto higher = mine_frequent(db, min + 1);
    ASSERT_LE(higher.size(), levels.size());
    for (std::size_t k = 0; k < higher.size(); ++k) {
      for (const auto& s : higher[k]) {
        ASSERT_TRUE(std::any_of(levels[k].begin(), levels[k].end(),
                                [&](const ItemSet& x) { return x.items == s.items; }));
      }
    }

    // Rule confidences recomputed from raw counts.
    if (!db.empty()) {
      for (const auto& rule : generate_rules(levels, db.size(), 0.0)) {
        Items whole = rule.antecedent;
        whole.insert(whole.end(), rule.consequent.begin(), rule.consequent.end());
        std::sort(whole.begin(), whole.end());
        const auto f = oracle::direct_count(raw, whole);
        const auto a = oracle::direct_count(raw, rule.antecedent);
        ASSERT_EQ(rule.confidence, static_cast<double>(f) / static_cast<double>(a) * 100.0);
        ASSERT_EQ(rule.support, static_cast<double>(f) / static_cast<double>(db.size()) * 100.0);
      }
    }
  }
}

}  // namespace
}  // namespace kbopt::apriori
