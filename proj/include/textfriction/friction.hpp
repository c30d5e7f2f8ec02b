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

#ifndef TEXTFRICTION_FRICTION_HPP_
#define TEXTFRICTION_FRICTION_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "textfriction/coefficients.hpp"
#include "textfriction/kernels.hpp"
#include "textfriction/preprocess.hpp"

namespace textfriction {

inline constexpr std::size_t kSurfaceWidth = 100;
inline constexpr std::size_t kWindowRows = 100;

// Friction coefficients laid out row-major, `width` cells per row. Only
// complete rows are kept.
class TextSurface {
 public:
  // Adopts `cells` as rows of `width`; a trailing partial row is dropped.
  // Throws DomainError if width is 0, there is not one complete row, or a
  // cell lies outside [0, 1].
  static TextSurface from_cells(std::vector<double> cells, std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rows() const { return rows_; }
  double cell(std::size_t x, std::size_t y) const { return cells_[y * width_ + x]; }
  std::span<const double> cells() const { return cells_; }
  std::span<const double> row(std::size_t y) const {
    return std::span<const double>(cells_).subspan(y * width_, width_);
  }
  // Letters past the last complete row.
  std::size_t dropped() const { return dropped_; }

 private:
  TextSurface() = default;
  friend TextSurface build_surface(const LetterStream&, const CoefficientTable&,
                                   std::size_t);

  std::vector<double> cells_;
  std::size_t width_ = 0;
  std::size_t rows_ = 0;
  std::size_t dropped_ = 0;
};

// cell(x, y) = sc(stream[y * width + x]). Throws DomainError("no alphabetic
// content") on an empty stream and for width 0.
TextSurface build_surface(const LetterStream& stream,
                          const CoefficientTable& table = default_table(),
                          std::size_t width = kSurfaceWidth);

struct ProfileStats {
  double mean = 0.0;
  double stddev = 0.0;  // population form, divisor n
  std::size_t n_windows = 0;
};

// Mean and population standard deviation. Throws DomainError when empty.
ProfileStats profile_stats(std::span<const double> values);

struct FrictionProfile {
  std::vector<double> values;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t window_rows = kWindowRows;
  double patch = 0.0;
};

// Slides a uniform patch of `window_rows` full-width rows down the surface,
// one row at a time. values[y] = patch * (sum of cells in rows y ..
// y + window_rows - 1), for every y in [0, rows - window_rows]. Throws
// DomainError("text too short for window") when rows < window_rows.
FrictionProfile sliding_friction(const TextSurface& surface,
                                 double patch = default_table().patch(),
                                 std::size_t window_rows = kWindowRows,
                                 kernels::Isa isa = kernels::active_isa());

// Per-text data file: the name on the first line, then one
// "value<TAB>value-mean" line per window, both "%f".
void write_profile(std::ostream& out, std::string_view name,
                   const FrictionProfile& profile);

}  // namespace textfriction

#endif  // TEXTFRICTION_FRICTION_HPP_
