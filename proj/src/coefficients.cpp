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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "textfriction/error.hpp"

namespace textfriction {
namespace {

// Frequency of each letter a..z in English text.
constexpr std::array<double, kAlphabetSize> kEnglishFrequency = {
    0.0850, 0.0207, 0.0454, 0.0338, 0.1116, 0.0181, 0.0247, 0.0300, 0.0754,
    0.0020, 0.0110, 0.0549, 0.0301, 0.0665, 0.0716, 0.0317, 0.0020, 0.0758,
    0.0574, 0.0695, 0.0363, 0.0101, 0.0129, 0.0029, 0.0178, 0.0027};

// Absorbs the representation error of 1 - f at the table's end points.
constexpr double kRangeSlack = 1e-12;

double round4(double x) { return std::round(x * 1e4) / 1e4; }

}  // namespace

double scaled_complement(double f, double min_c, double max_c) {
  if (!(f > 0.0 && f < 1.0)) {
    throw DomainError("frequency must lie in (0, 1), got " + std::to_string(f));
  }
  if (!(max_c > min_c)) {
    throw DomainError("complement range is empty");
  }
  const double c = 1.0 - f;
  if (c < min_c - kRangeSlack || c > max_c + kRangeSlack) {
    throw DomainError("complement " + std::to_string(c) + " outside [" +
                      std::to_string(min_c) + ", " + std::to_string(max_c) +
                      "]");
  }
  return std::clamp((c - min_c) / (max_c - min_c), 0.0, 1.0);
}

double median(std::span<const double> values) {
  if (values.empty()) throw DomainError("median of an empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[mid];
  return (sorted[mid - 1] + sorted[mid]) / 2.0;
}

int CoefficientTable::index(char letter) {
  if (letter < 'a' || letter > 'z') {
    throw DomainError(std::string("not a lowercase letter: '") + letter + "'");
  }
  return letter - 'a';
}

void CoefficientTable::write_tsv(std::ostream& out) const {
  char line[64];
  for (int i = 0; i < kAlphabetSize; ++i) {
    std::snprintf(line, sizeof line, "%c\t%.4f\t%.4f\n", 'a' + i, freq_[i],
                  sc_[i]);
    out << line;
  }
}

CoefficientTable build_table() {
  CoefficientTable table;
  table.freq_ = kEnglishFrequency;
  for (int i = 0; i < kAlphabetSize; ++i) {
    table.sc_[i] = round4(scaled_complement(table.freq_[i], table.min_c_,
                                            table.max_c_));
  }
  table.patch_ = median(table.sc_);
  return table;
}

const CoefficientTable& default_table() {
  static const CoefficientTable table = build_table();
  return table;
}

}  // namespace textfriction
