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

#ifndef TEXTFRICTION_PREPROCESS_HPP_
#define TEXTFRICTION_PREPROCESS_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace textfriction {

enum class Encoding { kUtf8, kAscii };

// Parses "utf8" / "ascii" (case-insensitive); throws DomainError otherwise.
Encoding parse_encoding(std::string_view name);

struct Transliteration {
  std::string text;               // ASCII only
  std::size_t invalid_bytes = 0;  // malformed sequences, replaced then dropped
  std::size_t dropped = 0;        // valid characters with no ASCII mapping
};

// Folds raw input to ASCII. Latin letters lose their diacritics via
// compatibility decomposition, typographic punctuation becomes its ASCII
// counterpart, and everything else is dropped. Never throws on bad input.
Transliteration transliterate(std::string_view raw,
                              Encoding encoding = Encoding::kUtf8);

// Lowercase letters a..z in reading order.
class LetterStream {
 public:
  LetterStream() = default;

  std::string_view letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  // Byte length of the text the stream was reduced from.
  std::size_t source_len() const { return source_len_; }

 private:
  friend LetterStream to_letter_stream(std::string_view text);
  std::string letters_;
  std::size_t source_len_ = 0;
};

// Lowercases A-Z and removes every other non-letter byte.
LetterStream to_letter_stream(std::string_view text);

struct StrippedText {
  std::string text;
  // END marker found before START; text is returned unchanged.
  bool misordered_markers = false;
};

// Removes the Project Gutenberg header (through the "*** START OF" line) and
// footer (from the "*** END OF" line). Text without markers is unchanged.
StrippedText strip_gutenberg_boilerplate(std::string_view text);

}  // namespace textfriction

#endif  // TEXTFRICTION_PREPROCESS_HPP_
