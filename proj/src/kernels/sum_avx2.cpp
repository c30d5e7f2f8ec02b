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

// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "textfriction/kernels.hpp"

namespace textfriction::kernels::detail {

double sum_avx2(const double* values, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(values + i));
  }
  // (l0 + l2, l1 + l3), then the two halves.
  const __m128d folded =
      _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double total = _mm_cvtsd_f64(folded) +
                 _mm_cvtsd_f64(_mm_unpackhi_pd(folded, folded));
  for (; i < n; ++i) total += values[i];
  return total;
}

void row_sums_avx2(const double* cells, std::size_t width, double* out,
                   std::size_t rows) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = sum_avx2(cells + r * width, width);
  }
}

}  // namespace textfriction::kernels::detail
