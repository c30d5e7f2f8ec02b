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

#ifndef TEXTFRICTION_COEFFICIENTS_HPP_
#define TEXTFRICTION_COEFFICIENTS_HPP_

#include <array>
#include <iosfwd>
#include <span>

namespace textfriction {

inline constexpr int kAlphabetSize = 26;

// Bounds of (1 - f) over the English letter-frequency table. Held at their
// printed 4-decimal values so the derived coefficients reproduce the
// published table exactly.
inline constexpr double kMinComplement = 0.8884;
inline constexpr double kMaxComplement = 0.9980;

// Maps a frequency onto [0, 1]: the most frequent letter gets 0, the least
// frequent gets 1. Throws DomainError if f is outside (0, 1) or 1 - f lies
// outside [min_c, max_c].
double scaled_complement(double f, double min_c = kMinComplement,
                         double max_c = kMaxComplement);

// Middle element, or the mean of the two middle elements for even sizes.
// Throws DomainError on empty input.
double median(std::span<const double> values);

// English letter frequencies and their friction coefficients (the scaled
// complements, rounded to 4 decimals). Immutable once built.
class CoefficientTable {
 public:
  // Letters are 'a'..'z'; anything else throws DomainError.
  double freq(char letter) const { return freq_[index(letter)]; }
  double sc(char letter) const { return sc_[index(letter)]; }

  const std::array<double, kAlphabetSize>& frequencies() const { return freq_; }
  const std::array<double, kAlphabetSize>& coefficients() const { return sc_; }

  double min_complement() const { return min_c_; }
  double max_complement() const { return max_c_; }

  // Median of the 26 coefficients; the default sliding-patch value.
  double patch() const { return patch_; }

  // letter<TAB>frequency<TAB>scaled complement, one row per letter.
  void write_tsv(std::ostream& out) const;

 private:
  friend CoefficientTable build_table();
  CoefficientTable() = default;

  static int index(char letter);

  std::array<double, kAlphabetSize> freq_{};
  std::array<double, kAlphabetSize> sc_{};
  double min_c_ = kMinComplement;
  double max_c_ = kMaxComplement;
  double patch_ = 0.0;
};

CoefficientTable build_table();

// Process-wide shared table; built on first use.
const CoefficientTable& default_table();

}  // namespace textfriction

#endif  // TEXTFRICTION_COEFFICIENTS_HPP_
