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

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

#define SOFTSET_AVX2 __attribute__((target("avx2,popcnt")))

namespace softset::kernels::avx2 {
namespace {

// 4 words per 256-bit lane group; tails fall through to scalar loops.
constexpr std::size_t kStep = 4;

SOFTSET_AVX2 inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

SOFTSET_AVX2 inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

SOFTSET_AVX2 void bit_and(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    store(out.data() + i, _mm256_and_si256(load(a.data() + i), load(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

SOFTSET_AVX2 void bit_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    store(out.data() + i, _mm256_or_si256(load(a.data() + i), load(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

SOFTSET_AVX2 void bit_andnot(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    // _mm256_andnot_si256(x, y) computes ~x & y.
    store(out.data() + i, _mm256_andnot_si256(load(b.data() + i), load(a.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

SOFTSET_AVX2 bool any(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    const __m256i v = load(a.data() + i);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

SOFTSET_AVX2 bool intersects(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    if (!_mm256_testz_si256(load(a.data() + i), load(b.data() + i))) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

SOFTSET_AVX2 bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    // testc(b, a) is 1 iff (~b & a) == 0.
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
  }
  for (; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

SOFTSET_AVX2 bool equal(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kStep <= n; i += kStep) {
    const __m256i x = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

SOFTSET_AVX2 std::size_t popcount(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += static_cast<std::size_t>(_mm_popcnt_u64(w));
  return total;
}

constexpr KernelTable kTable{bit_and, bit_or, bit_andnot, any, intersects, is_subset, equal, popcount};

}  // namespace

const KernelTable& table() { return kTable; }

}  // namespace softset::kernels::avx2

#endif
