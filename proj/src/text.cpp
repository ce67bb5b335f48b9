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

#include "kbopt/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kbopt/error.hpp"

namespace kbopt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kMissingPath: return "missing path";
    case ErrorCode::kDecode: return "undecodable input";
    case ErrorCode::kEmptyAlphabet: return "empty alphabet";
    case ErrorCode::kAbsentGram: return "absent gram";
    case ErrorCode::kEmptyCorpus: return "empty corpus";
    case ErrorCode::kContractViolation: return "contract violation";
    case ErrorCode::kInsufficientAlphabet: return "insufficient alphabet";
    case ErrorCode::kGeometry: return "geometry error";
    case ErrorCode::kMalformed: return "malformed file";
    case ErrorCode::kDuplicateKey: return "duplicate key assignment";
    case ErrorCode::kUnknownKey: return "unknown key";
    case ErrorCode::kInternal: return "internal error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

std::u32string decode_utf8(std::string_view bytes, std::string_view what) {
  std::u32string out;
  out.reserve(bytes.size());
  const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
  const auto length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t offset = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      throw Error(ErrorCode::kDecode, std::string(what) +
                                          ": invalid UTF-8 at byte offset " +
                                          std::to_string(offset));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 3);
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) throw Error(ErrorCode::kInvalidArgument, "not a Unicode scalar value");
    out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  }
  return out;
}

std::string encode_utf8(char32_t symbol) {
  return encode_utf8(std::u32string_view(&symbol, 1));
}

std::u32string nfc(std::u32string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal, std::string("NFC normalizer unavailable: ") +
                                          u_errorName(status));
  }
  const auto source = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  if (normalizer->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::u32string(text);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = normalizer->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal, std::string("NFC normalization failed: ") +
                                          u_errorName(status));
  }
  std::u32string out(static_cast<size_t>(normalized.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  normalized.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                     static_cast<int32_t>(out.size()), status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInternal, std::string("UTF-32 conversion failed: ") +
                                          u_errorName(status));
  }
  return out;
}

std::string format_percent(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingPath, path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, path.string() + ": read failed");
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, path.string() + ": cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, path.string() + ": write failed");
}

}  // namespace kbopt
