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

#include <cstdlib>
#include <string>

#include "textfriction/error.hpp"
#include "textfriction/kernels.hpp"

namespace textfriction::kernels {
namespace {

constexpr KernelSet kScalar{detail::sum_scalar, detail::row_sums_scalar};
#if defined(TEXTFRICTION_HAVE_AVX2)
constexpr KernelSet kAvx2{detail::sum_avx2, detail::row_sums_avx2};
#endif
#if defined(TEXTFRICTION_HAVE_NEON)
constexpr KernelSet kNeon{detail::sum_neon, detail::row_sums_neon};
#endif

Isa detect() {
  if (const char* forced = std::getenv("TEXTFRICTION_ISA")) {
    const std::string name(forced);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (name == isa_name(isa) && isa_available(isa)) return isa;
    }
  }
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(TEXTFRICTION_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(TEXTFRICTION_HAVE_NEON)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const KernelSet& kernel_set(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return kScalar;
#if defined(TEXTFRICTION_HAVE_AVX2)
    case Isa::kAvx2:
      if (isa_available(isa)) return kAvx2;
      break;
#endif
#if defined(TEXTFRICTION_HAVE_NEON)
    case Isa::kNeon:
      return kNeon;
#endif
    default:
      break;
  }
  throw DomainError("kernel ISA not available: " + std::string(isa_name(isa)));
}

void row_sums(std::span<const double> cells, std::size_t width,
              std::span<double> out, Isa isa) {
  if (width == 0 || cells.size() / width < out.size()) {
    throw DomainError("row_sums: cell buffer smaller than rows x width");
  }
  kernel_set(isa).row_sums(cells.data(), width, out.data(), out.size());
}

}  // namespace textfriction::kernels
