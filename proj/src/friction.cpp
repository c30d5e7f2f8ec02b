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

#include "textfriction/friction.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "textfriction/error.hpp"

namespace textfriction {

TextSurface TextSurface::from_cells(std::vector<double> cells,
                                    std::size_t width) {
  if (width == 0) throw DomainError("surface width must be positive");
  const std::size_t rows = cells.size() / width;
  if (rows == 0) throw DomainError("surface needs at least one complete row");
  TextSurface surface;
  surface.dropped_ = cells.size() - rows * width;
  cells.resize(rows * width);
  for (const double c : cells) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw DomainError("surface cell outside [0, 1]: " + std::to_string(c));
    }
  }
  surface.cells_ = std::move(cells);
  surface.width_ = width;
  surface.rows_ = rows;
  return surface;
}

TextSurface build_surface(const LetterStream& stream,
                          const CoefficientTable& table, std::size_t width) {
  if (stream.empty()) throw DomainError("no alphabetic content");
  if (width == 0) throw DomainError("surface width must be positive");
  const auto& lut = table.coefficients();
  TextSurface surface;
  surface.width_ = width;
  surface.rows_ = stream.size() / width;
  surface.dropped_ = stream.size() - surface.rows_ * width;
  surface.cells_.resize(surface.rows_ * width);
  const std::string_view letters = stream.letters();
  for (std::size_t i = 0; i < surface.cells_.size(); ++i) {
    surface.cells_[i] = lut[letters[i] - 'a'];
  }
  return surface;
}

ProfileStats profile_stats(std::span<const double> values) {
  if (values.empty()) throw DomainError("statistics of an empty profile");
  const auto n = static_cast<double>(values.size());
  double total = 0.0;
  for (const double v : values) total += v;
  const double mean = total / n;
  double sumsqr = 0.0;
  for (const double v : values) sumsqr += (v - mean) * (v - mean);
  return {mean, std::sqrt(sumsqr / n), values.size()};
}

FrictionProfile sliding_friction(const TextSurface& surface, double patch,
                                 std::size_t window_rows, kernels::Isa isa) {
  if (window_rows == 0) throw DomainError("window must span at least one row");
  if (surface.rows() < window_rows) {
    throw DomainError("text too short for window");
  }
  // Each cell is read once here; a window is then a sum of row totals.
  std::vector<double> row_totals(surface.rows());
  kernels::row_sums(surface.cells(), surface.width(), row_totals, isa);

  const auto& kernel = kernels::kernel_set(isa);
  FrictionProfile profile;
  profile.window_rows = window_rows;
  profile.patch = patch;
  profile.values.resize(surface.rows() - window_rows + 1);
  for (std::size_t y = 0; y < profile.values.size(); ++y) {
    profile.values[y] = patch * kernel.sum(row_totals.data() + y, window_rows);
  }
  const ProfileStats stats = profile_stats(profile.values);
  profile.mean = stats.mean;
  profile.stddev = stats.stddev;
  return profile;
}

void write_profile(std::ostream& out, std::string_view name,
                   const FrictionProfile& profile) {
  out << name << '\n';
  char line[96];
  for (const double v : profile.values) {
    const int len = std::snprintf(line, sizeof line, "%f\t%f\n", v,
                                  v - profile.mean);
    out.write(line, len);
  }
}

}  // namespace textfriction
