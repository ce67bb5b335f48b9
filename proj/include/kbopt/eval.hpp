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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kbopt/corpus.hpp"
#include "kbopt/layout.hpp"

namespace kbopt {

struct EvaluationReport {
  std::string layout_name;
  std::uint64_t hand_switching = 0;
  std::uint64_t left_load = 0;
  std::uint64_t right_load = 0;
  std::uint64_t undetermined = 0;  // symbols the layout does not map
  std::uint64_t total_symbols = 0;
  // Maximal runs of mapped symbols; boundaries and unmapped symbols end a run.
  std::uint64_t determined_runs = 0;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

// A switch is a pair of adjacent mapped symbols typed by different hands.
// Boundaries and unmapped symbols break adjacency.
EvaluationReport evaluate(const Layout& layout, const SymbolStream& stream);

struct ComparisonRow {
  EvaluationReport report;
  std::uint64_t imbalance = 0;  // |left - right|
  double switching_rate = 0.0;  // switches per adjacent mapped pair; 0 without pairs
};

std::vector<ComparisonRow> compare(std::span<const EvaluationReport> reports);

std::string comparison_tsv(std::span<const ComparisonRow> rows);

// Aligned plain-text table with the same columns.
std::string comparison_text(std::span<const ComparisonRow> rows);

}  // namespace kbopt
