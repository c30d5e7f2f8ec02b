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

#include "textfriction/kernels.hpp"

namespace textfriction::kernels::detail {

double sum_scalar(const double* values, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lane[0] += values[i];
    lane[1] += values[i + 1];
    lane[2] += values[i + 2];
    lane[3] += values[i + 3];
  }
  double total = (lane[0] + lane[2]) + (lane[1] + lane[3]);
  for (; i < n; ++i) total += values[i];
  return total;
}

void row_sums_scalar(const double* cells, std::size_t width, double* out,
                     std::size_t rows) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = sum_scalar(cells + r * width, width);
  }
}

}  // namespace textfriction::kernels::detail
