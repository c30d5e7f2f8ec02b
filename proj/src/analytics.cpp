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

#include "textfriction/analytics.hpp"

#include <algorithm>
#include <cmath>

#include "textfriction/error.hpp"

namespace textfriction {
namespace {

constexpr long long kMaxBins = 1'000'000;

}  // namespace

RegressionModel ols_fit(std::span<const Point> points) {
  if (points.size() < 2) throw DomainError("regression needs at least two points");
  const auto n = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : points) {
    mx += p.mean_friction;
    my += p.ease;
  }
  mx /= n;
  my /= n;
  // Centered sums keep the fit stable when MF sits far from zero.
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& p : points) {
    const double dx = p.mean_friction - mx;
    const double dy = p.ease - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) {
    throw DomainError("regression is degenerate: all mean friction values equal");
  }
  RegressionModel model;
  model.n = points.size();
  model.slope = sxy / sxx;
  model.intercept = my - model.slope * mx;
  model.r = syy > 0.0 ? std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0) : 0.0;
  return model;
}

Histogram histogram(std::span<const double> values, double bin_width) {
  if (!(bin_width > 0.0)) throw DomainError("histogram bin width must be positive");
  if (values.empty()) throw DomainError("histogram of an empty list");
  for (const double v : values) {
    if (!std::isfinite(v)) throw DomainError("histogram value is not finite");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const auto first = static_cast<long long>(std::floor(*lo / bin_width));
  const auto last = static_cast<long long>(std::floor(*hi / bin_width));
  if (last - first >= kMaxBins) {
    throw DomainError("histogram would need too many bins; widen the bins");
  }
  Histogram h;
  h.bin_width = bin_width;
  h.bins.resize(static_cast<std::size_t>(last - first + 1));
  for (std::size_t i = 0; i < h.bins.size(); ++i) {
    h.bins[i].lower = static_cast<double>(first + static_cast<long long>(i)) * bin_width;
  }
  for (const double v : values) {
    const auto k = static_cast<long long>(std::floor(v / bin_width));
    ++h.bins[static_cast<std::size_t>(k - first)].count;
  }
  return h;
}

}  // namespace textfriction
