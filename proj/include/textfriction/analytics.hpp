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

#ifndef TEXTFRICTION_ANALYTICS_HPP_
#define TEXTFRICTION_ANALYTICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace textfriction {

struct Point {
  double mean_friction = 0.0;
  double ease = 0.0;
};

struct RegressionModel {
  double slope = 0.0;      // ease per unit of mean friction
  double intercept = 0.0;  // ease
  double r = 0.0;          // Pearson correlation; 0 when ease is constant
  std::size_t n = 0;
};

// Published fit of reading ease against mean friction over the 32-text
// corpus: ease = -687 + 0.225 MF. Kept for comparison with fresh fits.
inline constexpr RegressionModel kReferenceModel{0.225, -687.0, 0.0, 32};

// Ordinary least squares of ease on mean friction. Throws DomainError for
// fewer than two points or when every mean friction is equal.
RegressionModel ols_fit(std::span<const Point> points);

inline double predict_ease(const RegressionModel& model, double mean_friction) {
  return model.intercept + model.slope * mean_friction;
}

struct Bin {
  double lower = 0.0;
  std::size_t count = 0;
};

struct Histogram {
  double bin_width = 0.0;
  // Contiguous half-open bins [lower, lower + bin_width), k * bin_width
  // aligned, from the bin holding the minimum to the bin holding the maximum.
  std::vector<Bin> bins;
};

inline constexpr double kDefaultBinWidth = 2.0;

// Throws DomainError for empty input, non-finite values or bin_width <= 0.
Histogram histogram(std::span<const double> values,
                    double bin_width = kDefaultBinWidth);

}  // namespace textfriction

#endif  // TEXTFRICTION_ANALYTICS_HPP_
