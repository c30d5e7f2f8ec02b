// Copyright 2026 The Text Friction Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "textfriction/preprocess.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "textfriction/error.hpp"

namespace textfriction {
namespace {

// Typographic punctuation and spacing that NFKD leaves non-ASCII.
std::optional<std::string_view> ascii_punctuation(UChar32 c) {
  switch (c) {
    case 0x2018: case 0x2019: case 0x201A: case 0x201B:
    case 0x2032: case 0x02BC: case 0x00B4: case 0x0060:
      return "'";
    case 0x201C: case 0x201D: case 0x201E: case 0x201F:
    case 0x2033: case 0x00AB: case 0x00BB:
      return "\"";
    case 0x2010: case 0x2011: case 0x2012: case 0x2013:
    case 0x2014: case 0x2015: case 0x2212: case 0x00AD:
      return "-";
    case 0x2039: return "<";
    case 0x203A: return ">";
    case 0x2022: case 0x00B7: return "*";
    case 0x00A0: case 0x2007: case 0x202F: case 0x3000:
      return " ";
    default:
      if (c >= 0x2000 && c <= 0x200A) return " ";
      return std::nullopt;
  }
}

class Folder {
 public:
  Folder() {
    UErrorCode status = U_ZERO_ERROR;
    nfkd_ = icu::Normalizer2::getNFKDInstance(status);
    if (U_FAILURE(status)) {
      throw std::runtime_error(std::string("ICU NFKD unavailable: ") +
                               u_errorName(status));
    }
  }

  void append(UChar32 c, Transliteration& out) const {
    if (c < 0x80) {
      out.text.push_back(static_cast<char>(c));
      return;
    }
    if (auto p = ascii_punctuation(c)) {
      out.text.append(*p);
      return;
    }
    UErrorCode status = U_ZERO_ERROR;
    const icu::UnicodeString decomposed =
        nfkd_->normalize(icu::UnicodeString(c), status);
    bool kept = false;
    if (U_SUCCESS(status)) {
      for (int32_t i = 0; i < decomposed.length();) {
        const UChar32 d = decomposed.char32At(i);
        i += U16_LENGTH(d);
        if (d < 0x80) {
          out.text.push_back(static_cast<char>(d));
          kept = true;
        } else if (auto p = ascii_punctuation(d)) {
          out.text.append(*p);
          kept = true;
        }
        // Combining marks and non-ASCII base characters are dropped.
      }
    }
    if (!kept) ++out.dropped;
  }

 private:
  const icu::Normalizer2* nfkd_ = nullptr;
};

const Folder& folder() {
  static const Folder instance;
  return instance;
}

// Bounds of the line containing position `pos` (end excludes the newline).
std::pair<std::size_t, std::size_t> line_around(std::string_view text,
                                                std::size_t pos) {
  const std::size_t nl_before = text.rfind('\n', pos);
  const std::size_t begin = nl_before == std::string_view::npos ? 0 : nl_before + 1;
  std::size_t end = text.find('\n', pos);
  if (end == std::string_view::npos) end = text.size();
  return {begin, end};
}

}  // namespace

Encoding parse_encoding(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lowered == "utf8" || lowered == "utf-8") return Encoding::kUtf8;
  if (lowered == "ascii") return Encoding::kAscii;
  throw DomainError("unknown encoding: " + std::string(name));
}

Transliteration transliterate(std::string_view raw, Encoding encoding) {
  Transliteration out;
  out.text.reserve(raw.size());
  if (encoding == Encoding::kAscii) {
    for (const char ch : raw) {
      if (static_cast<unsigned char>(ch) < 0x80) {
        out.text.push_back(ch);
      } else {
        ++out.invalid_bytes;
      }
    }
    return out;
  }

  const auto* bytes = reinterpret_cast<const uint8_t*>(raw.data());
  const auto length = static_cast<int32_t>(raw.size());
  const Folder& fold = folder();
  for (int32_t i = 0; i < length;) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      ++out.invalid_bytes;
      continue;
    }
    fold.append(c, out);
  }
  return out;
}

LetterStream to_letter_stream(std::string_view text) {
  LetterStream stream;
  stream.source_len_ = text.size();
  stream.letters_.reserve(text.size());
  for (const char ch : text) {
    if (ch >= 'A' && ch <= 'Z') {
      stream.letters_.push_back(static_cast<char>(ch + ('a' - 'A')));
    } else if (ch >= 'a' && ch <= 'z') {
      stream.letters_.push_back(ch);
    }
  }
  return stream;
}

StrippedText strip_gutenberg_boilerplate(std::string_view text) {
  const std::size_t start = text.find("*** START OF");
  const std::size_t end = text.find("*** END OF");
  if (start != std::string_view::npos && end != std::string_view::npos &&
      end < start) {
    return {std::string(text), true};
  }
  std::size_t body_begin = 0;
  std::size_t body_end = text.size();
  if (start != std::string_view::npos) {
    const std::size_t line_end = line_around(text, start).second;
    body_begin = line_end < text.size() ? line_end + 1 : line_end;
  }
  if (end != std::string_view::npos) {
    body_end = line_around(text, end).first;
  }
  if (body_end < body_begin) body_end = body_begin;
  return {std::string(text.substr(body_begin, body_end - body_begin)), false};
}

}  // namespace textfriction
