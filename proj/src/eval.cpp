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

#include "kbopt/eval.hpp"

#include <algorithm>
#include <unordered_map>

#include "kbopt/error.hpp"
#include "kbopt/text.hpp"

namespace kbopt {

EvaluationReport evaluate(const Layout& layout, const SymbolStream& stream) {
  std::unordered_map<Symbol, Hand> hands;
  for (const auto& [symbol, key_id] : layout.mapping) {
    const Key* key = layout.geometry.find(key_id);
    if (key == nullptr) {
      throw Error(ErrorCode::kUnknownKey, "layout '" + layout.name + "': key '" + key_id +
                                              "' is not in its geometry");
    }
    hands.emplace(symbol, key->hand);
  }

  EvaluationReport r;
  r.layout_name = layout.name;
  r.total_symbols = stream.total_symbols();
  for (const auto segment : stream.segments()) {
    bool in_run = false;
    Hand previous = Hand::kLeft;
    for (Symbol s : segment) {
      const auto it = hands.find(s);
      if (it == hands.end()) {
        ++r.undetermined;
        in_run = false;
        continue;
      }
      const Hand hand = it->second;
      ++(hand == Hand::kLeft ? r.left_load : r.right_load);
      if (in_run) {
        if (hand != previous) ++r.hand_switching;
      } else {
        ++r.determined_runs;
      }
      in_run = true;
      previous = hand;
    }
  }
  return r;
}

std::vector<ComparisonRow> compare(std::span<const EvaluationReport> reports) {
  std::vector<ComparisonRow> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) {
    ComparisonRow row{r, r.left_load > r.right_load ? r.left_load - r.right_load
                                                     : r.right_load - r.left_load,
                      0.0};
    const std::uint64_t determined = r.left_load + r.right_load;
    if (determined > r.determined_runs) {
      row.switching_rate = static_cast<double>(r.hand_switching) /
                           static_cast<double>(determined - r.determined_runs);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

const std::vector<std::string> kColumns = {
    "Name",          "Hand switching", "left hand load", "Right hand load",
    "Not determine", "Total",          "Imbalance",      "Switching rate"};

std::vector<std::string> cells(const ComparisonRow& row) {
  const auto& r = row.report;
  return {r.layout_name,
          std::to_string(r.hand_switching),
          std::to_string(r.left_load),
          std::to_string(r.right_load),
          std::to_string(r.undetermined),
          std::to_string(r.total_symbols),
          std::to_string(row.imbalance),
          format_percent(row.switching_rate)};
}

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

std::string comparison_tsv(std::span<const ComparisonRow> rows) {
  std::string out =
      "name\thand_switching\tleft_load\tright_load\tundetermined\ttotal_symbols\timbalance"
      "\tswitching_rate\n";
  for (const auto& row : rows) {
    const auto c = cells(row);
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += c[i];
      out += i + 1 == c.size() ? '\n' : '\t';
    }
  }
  return out;
}

std::string comparison_text(std::span<const ComparisonRow> rows) {
  std::vector<std::vector<std::string>> table{kColumns};
  for (const auto& row : rows) table.push_back(cells(row));

  std::vector<std::size_t> widths(kColumns.size(), 0);
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(line[i]));
    }
  }

  std::string out;
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      const std::string pad(widths[i] - display_width(line[i]), ' ');
      // Name column left-aligned, numbers right-aligned.
      out += i == 0 ? line[i] + pad : pad + line[i];
      if (i + 1 < line.size()) out += "  ";
    }
    out += '\n';
  }
  return out;
}

}  // namespace kbopt
