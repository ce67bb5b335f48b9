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

#include <filesystem>
#include <string>
#include <string_view>

namespace kbopt {

// Strict UTF-8 decode; throws Error(kDecode) on any invalid sequence.
// `what` names the input in the error message.
std::u32string decode_utf8(std::string_view bytes, std::string_view what);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t symbol);

// Canonical composition (NFC).
std::u32string nfc(std::u32string_view text);

// Fixed six-decimal rendering used by every percentage column.
std::string format_percent(double value);

std::string read_file(const std::filesystem::path& path);

// Writes `contents` to `path` verbatim (binary mode, so LF stays LF).
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace kbopt
