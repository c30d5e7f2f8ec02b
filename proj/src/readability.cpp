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

#include "textfriction/readability.hpp"

#include <cctype>
#include <string>

#include "textfriction/error.hpp"

namespace textfriction {
namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

// Appends the words of `text` and returns how many were found.
std::size_t split_words(std::string_view text,
                        std::vector<std::string_view>& words) {
  std::size_t found = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_letter(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size()) {
      if (is_letter(text[j])) {
        ++j;
      } else if (text[j] == '\'' && j + 1 < text.size() &&
                 is_letter(text[j + 1])) {
        j += 2;
      } else {
        break;
      }
    }
    words.push_back(text.substr(i, j - i));
    ++found;
    i = j;
  }
  return found;
}

void check_counts(const TextCounts& counts) {
  if (counts.words == 0 || counts.sentences == 0) {
    throw DomainError("readability needs at least one word and one sentence");
  }
}

}  // namespace

Tokens tokenize(std::string_view text) {
  Tokens tokens;
  std::size_t start = 0;
  auto close = [&](std::size_t end) {
    const std::string_view sentence = text.substr(start, end - start);
    if (split_words(sentence, tokens.words) > 0) {
      tokens.sentences.push_back(sentence);
    }
    start = end;
  };
  for (std::size_t i = 0; i < text.size();) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_terminator(text[j])) ++j;
    if (j == text.size() || is_space(text[j])) close(j);
    i = j;
  }
  if (start < text.size()) close(text.size());
  if (tokens.words.empty()) throw DomainError("unscorable text");
  return tokens;
}

int count_syllables(std::string_view word) {
  std::string w;
  w.reserve(word.size());
  for (const char c : word) {
    if (c != '\'') w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  int groups = 0;
  bool in_group = false;
  for (const char c : w) {
    const bool vowel = is_vowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  const std::size_t n = w.size();
  if (groups > 1 && n >= 3) {
    const bool own_e_group = !is_vowel(w[n - 2]) && w[n - 1] == 'e';
    const bool consonant_le = w[n - 2] == 'l' && !is_vowel(w[n - 3]);
    if (own_e_group && !consonant_le) {
      --groups;
    } else if (w[n - 1] == 'd' && w[n - 2] == 'e' && !is_vowel(w[n - 3]) &&
               w[n - 3] != 't' && w[n - 3] != 'd') {
      --groups;
    }
  }
  return groups < 1 ? 1 : groups;
}

TextCounts count_text(std::string_view text) {
  const Tokens tokens = tokenize(text);
  TextCounts counts;
  counts.words = tokens.words.size();
  counts.sentences = tokens.sentences.size();
  for (const auto word : tokens.words) {
    counts.syllables += static_cast<std::size_t>(count_syllables(word));
  }
  return counts;
}

double flesch_reading_ease(const TextCounts& counts) {
  check_counts(counts);
  const double w = static_cast<double>(counts.words);
  return 206.835 - 1.015 * (w / static_cast<double>(counts.sentences)) -
         84.6 * (static_cast<double>(counts.syllables) / w);
}

double flesch_kincaid_grade(const TextCounts& counts) {
  check_counts(counts);
  const double w = static_cast<double>(counts.words);
  return 0.39 * (w / static_cast<double>(counts.sentences)) +
         11.8 * (static_cast<double>(counts.syllables) / w) - 15.59;
}

ReadabilityScore score_text(std::string_view text) {
  const TextCounts counts = count_text(text);
  return {flesch_reading_ease(counts), flesch_kincaid_grade(counts)};
}

}  // namespace textfriction
