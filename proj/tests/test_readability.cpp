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

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "textfriction/error.hpp"

namespace tf = textfriction;

TEST_CASE("tokenize") {
  SUBCASE("two sentences") {
    const auto t = tf::tokenize("I ran. You hid!");
    CHECK(t.sentences.size() == 2);
    CHECK(t.words.size() == 4);
  }
  SUBCASE("abbreviations split sentences") {
    const auto t = tf::tokenize("Mr. Smith left.");
    CHECK(t.sentences.size() == 2);
    CHECK(t.words.size() == 3);
  }
  SUBCASE("internal apostrophes stay in the word") {
    const auto t = tf::tokenize("don't stop");
    CHECK(t.sentences.size() == 1);
    REQUIRE(t.words.size() == 2);
    CHECK(t.words[0] == "don't");
  }
  SUBCASE("edge apostrophes and terminator runs") {
    const auto t = tf::tokenize("'Tis the dogs' toy!!! Really?! 3.14 is pi... ok");
    CHECK(t.words[0] == "Tis");
    CHECK(t.words[2] == "dogs");
    CHECK(t.sentences.size() == 4);
  }
  SUBCASE("empty sentences are discarded") {
    const auto t = tf::tokenize("... Hello. ! ? World.");
    CHECK(t.sentences.size() == 2);
    CHECK(t.words.size() == 2);
  }
  CHECK_THROWS_WITH_AS(tf::tokenize("123 ... !!"), "unscorable text", tf::DomainError);
  CHECK_THROWS_AS(tf::tokenize(""), tf::DomainError);
}

TEST_CASE("count_syllables") {
  CHECK(tf::count_syllables("cat") == 1);
  CHECK(tf::count_syllables("reading") == 2);
  CHECK(tf::count_syllables("table") == 2);
  CHECK(tf::count_syllables("the") == 1);
  CHECK(tf::count_syllables("whole") == 1);
  CHECK(tf::count_syllables("people") == 2);
  CHECK(tf::count_syllables("walked") == 1);
  CHECK(tf::count_syllables("wanted") == 2);
  CHECK(tf::count_syllables("carried") == 2);
  CHECK(tf::count_syllables("Don't") == 1);
  CHECK(tf::count_syllables("rhythm") == 1);
  CHECK(tf::count_syllables("qqq") == 1);
}

TEST_CASE("count_syllables is at least 1 for any word") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> letter(0, 25);
  std::uniform_int_distribution<int> len(1, 12);
  for (int i = 0; i < 2000; ++i) {
    std::string w(static_cast<std::size_t>(len(rng)), 'a');
    for (auto& c : w) c = static_cast<char>('a' + letter(rng));
    CHECK(tf::count_syllables(w) >= 1);
  }
}

TEST_CASE("Flesch formulas") {
  const tf::TextCounts counts{100, 10, 130};
  CHECK(tf::flesch_reading_ease(counts) == doctest::Approx(86.705).epsilon(1e-12));
  CHECK(tf::flesch_kincaid_grade(counts) == doctest::Approx(3.65).epsilon(1e-12));
  CHECK(tf::flesch_reading_ease({100, 100, 100}) == doctest::Approx(121.22).epsilon(1e-12));
  CHECK_THROWS_AS(tf::flesch_reading_ease({0, 1, 0}), tf::DomainError);
  CHECK_THROWS_AS(tf::flesch_kincaid_grade({10, 0, 10}), tf::DomainError);
}

TEST_CASE("more syllables means harder text") {
  for (std::size_t syl = 100; syl < 400; syl += 7) {
    const tf::TextCounts a{100, 8, syl};
    const tf::TextCounts b{100, 8, syl + 1};
    CHECK(tf::flesch_reading_ease(b) < tf::flesch_reading_ease(a));
    CHECK(tf::flesch_kincaid_grade(b) > tf::flesch_kincaid_grade(a));
  }
}

TEST_CASE("duplicated text scores the same") {
  const std::string text =
      "The quick brown fox jumped over the lazy dog. It was not amused! "
      "Who would be, really? Nobody, I think.";
  const auto once = tf::count_text(text);
  const auto twice = tf::count_text(text + " " + text);
  CHECK(twice.words == 2 * once.words);
  CHECK(twice.sentences == 2 * once.sentences);
  CHECK(twice.syllables == 2 * once.syllables);
  const auto a = tf::score_text(text);
  const auto b = tf::score_text(text + " " + text);
  CHECK(a.ease == doctest::Approx(b.ease).epsilon(1e-12));
  CHECK(a.grade == doctest::Approx(b.grade).epsilon(1e-12));
  CHECK(once.syllables >= once.words);
}

TEST_CASE("syllable counts agree with the pronouncing dictionary") {
  std::ifstream in(TEXTFRICTION_TEST_DATA "/syllable_oracle.tsv");
  REQUIRE(in);
  int total = 0;
  int agree = 0;
  for (std::string line; std::getline(in, line);) {
    std::istringstream row(line);
    std::string word;
    std::string counts;
    std::getline(row, word, '\t');
    std::getline(row, counts);
    const int ours = tf::count_syllables(word);
    bool match = false;
    std::istringstream options(counts);
    for (std::string c; std::getline(options, c, ',');) match |= std::stoi(c) == ours;
    ++total;
    agree += match;
  }
  CHECK(total == 200);
  MESSAGE("agreement " << agree << "/" << total);
  CHECK(agree >= 170);
}
