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

#ifndef TEXTFRICTION_KERNELS_HPP_
#define TEXTFRICTION_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

// Reduction kernels behind the sliding-friction engine.
//
// Every variant accumulates into four interleaved lanes (lane j takes the
// elements whose index is j mod 4), folds the lanes as (l0 + l2) + (l1 + l3)
// and then adds the tail left to right. Fixing the order makes the scalar
// reference and the vector variants bit-identical, so output files do not
// depend on the host CPU.

namespace textfriction::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

// Best available ISA, unless TEXTFRICTION_ISA=scalar|avx2|neon selects an
// available one.
Isa active_isa();

struct KernelSet {
  double (*sum)(const double* values, std::size_t n);
  // out[r] = sum(cells[r*width .. r*width + width)) for r < out.size().
  void (*row_sums)(const double* cells, std::size_t width, double* out,
                   std::size_t rows);
};

// Throws DomainError for an ISA that is not available.
const KernelSet& kernel_set(Isa isa);

inline double sum(std::span<const double> values, Isa isa = active_isa()) {
  return kernel_set(isa).sum(values.data(), values.size());
}

// Throws DomainError if cells.size() < out.size() * width.
void row_sums(std::span<const double> cells, std::size_t width,
              std::span<double> out, Isa isa = active_isa());

namespace detail {
double sum_scalar(const double* values, std::size_t n);
void row_sums_scalar(const double* cells, std::size_t width, double* out,
                     std::size_t rows);
#if defined(TEXTFRICTION_HAVE_AVX2)
double sum_avx2(const double* values, std::size_t n);
void row_sums_avx2(const double* cells, std::size_t width, double* out,
                   std::size_t rows);
#endif
#if defined(TEXTFRICTION_HAVE_NEON)
double sum_neon(const double* values, std::size_t n);
void row_sums_neon(const double* cells, std::size_t width, double* out,
                   std::size_t rows);
#endif
}  // namespace detail

}  // namespace textfriction::kernels

#endif  // TEXTFRICTION_KERNELS_HPP_
