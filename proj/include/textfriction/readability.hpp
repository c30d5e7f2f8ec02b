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

#ifndef TEXTFRICTION_READABILITY_HPP_
#define TEXTFRICTION_READABILITY_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace textfriction {

struct Tokens {
  std::vector<std::string_view> sentences;
  std::vector<std::string_view> words;
};

// Sentences end at a run of '.', '!' or '?' followed by whitespace or the end
// of text; sentences without a word are discarded. Words are maximal runs of
// ASCII letters, keeping apostrophes that sit between two letters. The views
// point into `text`. Throws DomainError("unscorable text") if there is no
// word.
Tokens tokenize(std::string_view text);

// Vowel groups (a e i o u y) with two silent endings removed: a final 'e'
// after a consonant, except consonant + "le"; and a final "ed" after a
// consonant other than 't' or 'd'. Never less than 1.
int count_syllables(std::string_view word);

struct TextCounts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
};

TextCounts count_text(std::string_view text);

// 206.835 - 1.015 (words/sentences) - 84.6 (syllables/words), unclamped.
// Throws DomainError when words or sentences is zero.
double flesch_reading_ease(const TextCounts& counts);

// 0.39 (words/sentences) + 11.8 (syllables/words) - 15.59.
double flesch_kincaid_grade(const TextCounts& counts);

struct ReadabilityScore {
  double ease = 0.0;
  double grade = 0.0;
};

ReadabilityScore score_text(std::string_view text);

}  // namespace textfriction

#endif  // TEXTFRICTION_READABILITY_HPP_
