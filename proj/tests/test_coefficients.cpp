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

#include "textfriction/coefficients.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>
#include <vector>

#include "support/oracles.hpp"
#include "textfriction/error.hpp"

namespace tf = textfriction;
using tf::testing::kPrintedCoefficients;
using tf::testing::kPrintedFrequencies;

TEST_CASE("scaled_complement reproduces the printed table") {
  CHECK(tf::scaled_complement(0.1116) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(tf::scaled_complement(0.0020) == doctest::Approx(1.0));
  CHECK(tf::scaled_complement(0.0850) == doctest::Approx(0.2427).epsilon(5e-5 / 0.2427));
  for (int i = 0; i < 26; ++i) {
    CAPTURE(static_cast<char>('a' + i));
    CHECK(std::abs(tf::scaled_complement(kPrintedFrequencies[i]) - kPrintedCoefficients[i]) <
          5e-5);
  }
}

TEST_CASE("scaled_complement rejects out-of-range frequencies") {
  CHECK_THROWS_AS(tf::scaled_complement(0.0), tf::DomainError);
  CHECK_THROWS_AS(tf::scaled_complement(1.0), tf::DomainError);
  CHECK_THROWS_AS(tf::scaled_complement(-0.1), tf::DomainError);
  CHECK_THROWS_AS(tf::scaled_complement(0.5), tf::DomainError);     // 1-f below min
  CHECK_THROWS_AS(tf::scaled_complement(0.0005), tf::DomainError);  // 1-f above max
  CHECK_THROWS_AS(tf::scaled_complement(0.05, 0.9, 0.9), tf::DomainError);
}

TEST_CASE("scaled_complement is strictly decreasing in f") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> f(0.0020, 0.1116);
  for (int i = 0; i < 1000; ++i) {
    double a = f(rng);
    double b = f(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(tf::scaled_complement(a) > tf::scaled_complement(b));
  }
}

TEST_CASE("median") {
  const std::vector<double> two{0.0, 1.0};
  CHECK(tf::median(two) == 0.5);
  const std::vector<double> flat(26, 0.5);
  CHECK(tf::median(flat) == 0.5);
  const std::vector<double> odd{3.0, 1.0, 2.0};
  CHECK(tf::median(odd) == 2.0);
  CHECK(tf::median(kPrintedCoefficients) == doctest::Approx(0.7363).epsilon(1e-12));
  CHECK_THROWS_AS(tf::median(std::vector<double>{}), tf::DomainError);
}

TEST_CASE("build_table matches the printed table") {
  const tf::CoefficientTable table = tf::build_table();
  for (int i = 0; i < 26; ++i) {
    const char letter = static_cast<char>('a' + i);
    CAPTURE(letter);
    CHECK(table.sc(letter) == kPrintedCoefficients[i]);
    CHECK(table.freq(letter) == kPrintedFrequencies[i]);
  }
  CHECK(table.sc('n') == 0.4115);
  CHECK(table.sc('z') == 0.9936);
  CHECK(table.sc('e') == 0.0);
  CHECK(table.sc('q') == 1.0);
  CHECK(table.sc('j') == 1.0);
  CHECK(std::abs(table.patch() - 0.7363) < 1e-4);

  std::vector<double> sorted(table.coefficients().begin(), table.coefficients().end());
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[12] == 0.7290);
  CHECK(sorted[13] == 0.7436);
}

TEST_CASE("table invariants") {
  const tf::CoefficientTable& table = tf::default_table();
  double total = 0.0;
  for (const double f : table.frequencies()) total += f;
  CHECK(std::abs(total - 1.0) <= 0.005);
  for (const double sc : table.coefficients()) {
    CHECK(sc >= 0.0);
    CHECK(sc <= 1.0);
  }
  for (char x = 'a'; x <= 'z'; ++x) {
    for (char y = 'a'; y <= 'z'; ++y) {
      if (table.freq(x) > table.freq(y)) CHECK(table.sc(x) <= table.sc(y));
    }
  }
  CHECK(table.min_complement() == 0.8884);
  CHECK(table.max_complement() == 0.9980);
}

TEST_CASE("repeated builds are bit-identical") {
  const auto a = tf::build_table();
  const auto b = tf::build_table();
  CHECK(std::memcmp(a.coefficients().data(), b.coefficients().data(),
                    sizeof(double) * 26) == 0);
  CHECK(a.patch() == b.patch());
}

TEST_CASE("letters outside a-z are rejected") {
  const auto& table = tf::default_table();
  CHECK_THROWS_AS(table.sc('A'), tf::DomainError);
  CHECK_THROWS_AS(table.freq('{'), tf::DomainError);
}

TEST_CASE("TSV export") {
  std::ostringstream out;
  tf::default_table().write_tsv(out);
  const std::string tsv = out.str();
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 26);
  CHECK(tsv.rfind("a\t0.0850\t0.2427\n", 0) == 0);
  CHECK(tsv.find("q\t0.0020\t1.0000\n") != std::string::npos);
}
