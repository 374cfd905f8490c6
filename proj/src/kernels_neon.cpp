// Copyright 2026 The Softset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softset/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace softset::kernels::neon {
namespace {

constexpr std::size_t kStep = 2;

inline bool nonzero(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

void bit_and(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    vst1q_u64(out.data() + i, vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

void bit_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    vst1q_u64(out.data() + i, vorrq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

void bit_andnot(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    // vbicq(x, y) = x & ~y
    vst1q_u64(out.data() + i, vbicq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

bool any(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    if (nonzero(vld1q_u64(a.data() + i))) return true;
  }
  for (; i < n; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    if (nonzero(vandq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)))) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    if (nonzero(vbicq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)))) return false;
  }
  for (; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool equal(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    if (nonzero(veorq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)))) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += vaddv_u8(vcnt_u8(vcreate_u8(w)));
  return total;
}

constexpr KernelTable kTable{bit_and, bit_or, bit_andnot, any, intersects, is_subset, equal, popcount};

}  // namespace

const KernelTable& table() { return kTable; }

}  // namespace softset::kernels::neon

#endif
