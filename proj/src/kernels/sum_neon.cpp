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

#include <arm_neon.h>

#include "textfriction/kernels.hpp"

namespace textfriction::kernels::detail {

double sum_neon(const double* values, std::size_t n) {
  // lo holds lanes 0-1, hi holds lanes 2-3.
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vld1q_f64(values + i));
    hi = vaddq_f64(hi, vld1q_f64(values + i + 2));
  }
  const float64x2_t folded = vaddq_f64(lo, hi);
  double total = vgetq_lane_f64(folded, 0) + vgetq_lane_f64(folded, 1);
  for (; i < n; ++i) total += values[i];
  return total;
}

void row_sums_neon(const double* cells, std::size_t width, double* out,
                   std::size_t rows) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = sum_neon(cells + r * width, width);
  }
}

}  // namespace textfriction::kernels::detail
