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

#include "kbopt/corpus.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "kbopt/error.hpp"
#include "kbopt/text.hpp"

namespace kbopt {

namespace detail {
extern const std::string_view kBanglaAlphabetData;
}  // namespace detail

namespace fs = std::filesystem;

Alphabet::Alphabet(std::vector<Symbol> symbols, std::string name)
    : symbols_(std::move(symbols)), name_(std::move(name)) {
  if (symbols_.empty()) {
    throw Error(ErrorCode::kEmptyAlphabet, "alphabet '" + name_ + "' is empty");
  }
  index_.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (is_boundary(symbols_[i]) || !index_.emplace(symbols_[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "alphabet '" + name_ + "': duplicate symbol '" +
                      encode_utf8(symbols_[i]) + "'");
    }
  }
}

std::optional<std::size_t> Alphabet::position(Symbol s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::before(Symbol a, Symbol b) const {
  const auto pa = position(a);
  const auto pb = position(b);
  if (pa && pb) return *pa < *pb;
  if (pa || pb) return pa.has_value();
  return a < b;
}

bool Alphabet::before(std::u32string_view a, std::u32string_view b) const {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [this](Symbol x, Symbol y) { return before(x, y); });
}

Alphabet parse_alphabet(std::string_view text, std::string name) {
  std::vector<Symbol> symbols;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::u32string decoded =
        decode_utf8(line, name + ":" + std::to_string(line_no));
    if (decoded.size() != 1) {
      throw Error(ErrorCode::kMalformed, name + ":" + std::to_string(line_no) +
                                             ": expected exactly one symbol per line");
    }
    symbols.push_back(decoded.front());
  }
  return Alphabet(std::move(symbols), std::move(name));
}

Alphabet load_alphabet(const fs::path& path) {
  if (!fs::exists(path)) {
    throw Error(ErrorCode::kMissingPath, path.string() + ": no such file");
  }
  return parse_alphabet(read_file(path), path.string());
}

Alphabet default_bangla_alphabet() {
  return parse_alphabet(detail::kBanglaAlphabetData, "bangla");
}

void SymbolStream::Builder::symbol(Symbol s) { events_.push_back(s); }

void SymbolStream::Builder::boundary() {
  if (!events_.empty() && !is_boundary(events_.back())) events_.push_back(kBoundary);
}

void SymbolStream::Builder::append(const SymbolStream& other) {
  if (other.empty()) return;
  boundary();
  events_.insert(events_.end(), other.events().begin(), other.events().end());
}

SymbolStream SymbolStream::Builder::finish() && {
  if (!events_.empty() && is_boundary(events_.back())) events_.pop_back();
  return SymbolStream(std::move(events_), std::move(source_));
}

SymbolStream::SymbolStream(std::vector<Symbol> events, std::string source)
    : events_(std::move(events)), source_(std::move(source)) {
  bool previous_boundary = true;
  for (Symbol e : events_) {
    if (is_boundary(e)) {
      if (previous_boundary) {
        throw Error(ErrorCode::kContractViolation,
                    "symbol stream has a leading or repeated boundary");
      }
      previous_boundary = true;
    } else {
      previous_boundary = false;
      ++total_symbols_;
    }
  }
  if (!events_.empty() && previous_boundary) {
    throw Error(ErrorCode::kContractViolation, "symbol stream ends with a boundary");
  }
}

std::vector<std::span<const Symbol>> SymbolStream::segments() const {
  std::vector<std::span<const Symbol>> out;
  auto begin = events_.begin();
  for (auto it = events_.begin(); it != events_.end(); ++it) {
    if (is_boundary(*it)) {
      out.emplace_back(begin, it);
      begin = it + 1;
    }
  }
  if (begin != events_.end()) out.emplace_back(begin, events_.end());
  return out;
}

std::u32string SymbolStream::render(Symbol separator) const {
  std::u32string out(events_.begin(), events_.end());
  std::replace(out.begin(), out.end(), kBoundary, separator);
  return out;
}

SymbolStream filter_text(std::u32string_view text, const Alphabet& alphabet,
                         Normalization normalization, std::string source) {
  std::u32string normalized;
  if (normalization == Normalization::kNfc) {
    normalized = nfc(text);
    text = normalized;
  }
  SymbolStream::Builder builder(std::move(source));
  for (Symbol c : text) {
    if (alphabet.contains(c)) {
      builder.symbol(c);
    } else {
      builder.boundary();
    }
  }
  return std::move(builder).finish();
}

std::vector<fs::path> expand_corpus_paths(std::span<const fs::path> paths) {
  std::vector<fs::path> files;
  for (const auto& path : paths) {
    std::error_code ec;
    const auto status = fs::status(path, ec);
    if (ec || !fs::exists(status)) {
      throw Error(ErrorCode::kMissingPath, path.string() + ": no such file or directory");
    }
    if (!fs::is_directory(status)) {
      files.push_back(path);
      continue;
    }
    std::vector<fs::path> entries;
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (entry.is_regular_file()) entries.push_back(entry.path());
    }
    std::sort(entries.begin(), entries.end());
    files.insert(files.end(), entries.begin(), entries.end());
  }
  return files;
}

SymbolStream load_corpus(std::span<const fs::path> paths, const Alphabet& alphabet,
                         Normalization normalization) {
  const std::vector<fs::path> files = expand_corpus_paths(paths);

  std::string source;
  for (const auto& file : files) {
    if (!source.empty()) source += ';';
    source += file.string();
  }
  SymbolStream::Builder builder(std::move(source));

  const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < files.size(); first += batch) {
    const std::size_t last = std::min(files.size(), first + batch);
    std::vector<std::future<SymbolStream>> pending;
    pending.reserve(last - first);
    for (std::size_t i = first; i < last; ++i) {
      pending.push_back(
          std::async(std::launch::async, [&alphabet, normalization, &file = files[i]] {
            const std::string label = file.string();
            return filter_text(decode_utf8(read_file(file), label), alphabet,
                               normalization, label);
          }));
    }
    // get() in path order rethrows the first failing file's error.
    for (auto& part : pending) builder.append(part.get());
  }
  return std::move(builder).finish();
}

}  // namespace kbopt
