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

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include "textfriction/coefficients.hpp"
#include "textfriction/error.hpp"

namespace tf = textfriction;

namespace {

std::string ascii(std::string_view utf8) { return tf::transliterate(utf8).text; }

}  // namespace

// Expected strings come from Python's unicodedata.normalize("NFKD", ...) with
// every non-ASCII code point removed.
TEST_CASE("transliterate strips diacritics") {
  CHECK(ascii("na\xC3\xAFve caf\xC3\xA9") == "naive cafe");
  CHECK(ascii("\xC3\x85ngstr\xC3\xB6m") == "Angstrom");
  CHECK(ascii("\xEF\xAC\x81ne \xEF\xAC\x82our") == "fine flour");
  CHECK(ascii("Dvo\xC5\x99\xC3\xA1k \xC5\x81\xC3\xB3\x64\xC5\xBA") == "Dvorak odz");
  CHECK(ascii("S\xC3\xA3o Paulo \xC2\xBD") == "Sao Paulo 12");
  CHECK(ascii("\xEF\xBC\xA6\xEF\xBD\x95\xEF\xBD\x8C\xEF\xBD\x8C") == "Full");
}

TEST_CASE("letters without a Latin decomposition are dropped") {
  const auto t = tf::transliterate("\xC5\x92uvre stra\xC3\x9F\x65");
  CHECK(t.text == "uvre strae");
  CHECK(t.dropped == 2);
  CHECK(t.invalid_bytes == 0);
}

TEST_CASE("transliterate is the identity on ASCII") {
  CHECK(ascii("plain ascii") == "plain ascii");
  CHECK(ascii("") == "");
  CHECK(ascii("Tabs\tand\r\nnewlines!") == "Tabs\tand\r\nnewlines!");
}

TEST_CASE("typographic punctuation maps to ASCII") {
  CHECK(ascii("\xE2\x80\x9CHello\xE2\x80\x9D \xE2\x80\x94 world") == "\"Hello\" - world");
  CHECK(ascii("don\xE2\x80\x99t") == "don't");
  CHECK(ascii("wait\xE2\x80\xA6") == "wait...");
  CHECK(ascii("a\xC2\xA0" "b") == "a b");
}

TEST_CASE("invalid UTF-8 is dropped and counted") {
  const auto t = tf::transliterate("\xFF" "abc\xC3");
  CHECK(t.text == "abc");
  CHECK(t.invalid_bytes == 2);
  const auto overlong = tf::transliterate("x\xC0\xAFy");
  CHECK(overlong.text == "xy");
  CHECK(overlong.invalid_bytes >= 1);
}

TEST_CASE("ascii encoding drops high bytes") {
  const auto t = tf::transliterate("caf\xC3\xA9!", tf::Encoding::kAscii);
  CHECK(t.text == "caf!");
  CHECK(t.invalid_bytes == 2);
}

TEST_CASE("parse_encoding") {
  CHECK(tf::parse_encoding("utf8") == tf::Encoding::kUtf8);
  CHECK(tf::parse_encoding("UTF-8") == tf::Encoding::kUtf8);
  CHECK(tf::parse_encoding("ascii") == tf::Encoding::kAscii);
  CHECK_THROWS_AS(tf::parse_encoding("latin1"), tf::DomainError);
}

TEST_CASE("to_letter_stream") {
  CHECK(tf::to_letter_stream("Hello, World!\n").letters() == "helloworld");
  CHECK(tf::to_letter_stream("Q.E.D. 42").letters() == "qed");
  const auto empty = tf::to_letter_stream("");
  CHECK(empty.empty());
  CHECK(empty.source_len() == 0);
  const auto s = tf::to_letter_stream("ab 12");
  CHECK(s.size() == 2);
  CHECK(s.source_len() == 5);
}

TEST_CASE("letter stream properties on random ASCII") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> byte(0, 127);
  std::uniform_int_distribution<int> len(0, 400);
  for (int iter = 0; iter < 200; ++iter) {
    std::string s(static_cast<std::size_t>(len(rng)), ' ');
    for (auto& c : s) c = static_cast<char>(byte(rng));
    const auto stream = tf::to_letter_stream(s);

    // Idempotent.
    CHECK(tf::to_letter_stream(stream.letters()).letters() == stream.letters());

    // Case-insensitive.
    std::string upper = s;
    std::string lower = s;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    CHECK(tf::to_letter_stream(upper).letters() == tf::to_letter_stream(lower).letters());

    // Every symbol indexes the coefficient table.
    CHECK(stream.size() <= stream.source_len());
    for (const char c : stream.letters()) CHECK_NOTHROW(tf::default_table().sc(c));
  }
}

TEST_CASE("strip_gutenberg_boilerplate") {
  const std::string header = "Title page\n*** START OF THE PROJECT GUTENBERG EBOOK X ***\n";
  const std::string body = "Chapter 1\nIt was a dark night.\n";
  const std::string footer = "*** END OF THE PROJECT GUTENBERG EBOOK X ***\nLicense text\n";

  SUBCASE("both markers") {
    const auto r = tf::strip_gutenberg_boilerplate(header + body + footer);
    CHECK(r.text == body);
    CHECK_FALSE(r.misordered_markers);
  }
  SUBCASE("no markers") {
    CHECK(tf::strip_gutenberg_boilerplate(body).text == body);
  }
  SUBCASE("start marker only") {
    CHECK(tf::strip_gutenberg_boilerplate(header + body).text == body);
  }
  SUBCASE("end marker only") {
    CHECK(tf::strip_gutenberg_boilerplate(body + footer).text == body);
  }
  SUBCASE("end before start is left alone") {
    const std::string text = footer + body + header;
    const auto r = tf::strip_gutenberg_boilerplate(text);
    CHECK(r.text == text);
    CHECK(r.misordered_markers);
  }
  SUBCASE("start marker on the last line") {
    CHECK(tf::strip_gutenberg_boilerplate("x\n*** START OF IT ***").text.empty());
  }
}
