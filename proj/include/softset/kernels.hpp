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

#pragma once

// Word-level bit kernels behind ObjectSet. Every kernel has a scalar
// reference implementation plus SIMD variants; the variant used at run time
// is picked once from CPU features and can be overridden for testing.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace softset::kernels {

using Word = std::uint64_t;

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view to_string(Backend backend);
std::optional<Backend> backend_from_string(std::string_view name);

// All binary kernels require equal-length inputs; `out` may alias an input.
struct KernelTable {
  void (*bit_and)(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
  void (*bit_or)(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
  // out = a & ~b
  void (*bit_andnot)(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
  bool (*any)(std::span<const Word> a);
  // (a & b) != 0
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
  // (a & ~b) == 0
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  bool (*equal)(std::span<const Word> a, std::span<const Word> b);
  std::size_t (*popcount)(std::span<const Word> a);
};

namespace scalar {
const KernelTable& table();
}
#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
const KernelTable& table();
}
#endif
#if defined(__aarch64__)
namespace neon {
const KernelTable& table();
}
#endif

bool backend_available(Backend backend);
// Table for a specific backend; falls back to scalar when unavailable.
const KernelTable& table_for(Backend backend);

// Active backend. The initial choice honours SOFTSET_KERNELS=scalar|avx2|neon
// when set and available, otherwise the best supported one.
Backend active_backend();
const KernelTable& active();
// Returns false (and changes nothing) if the backend is not available.
bool set_active_backend(Backend backend);

}  // namespace softset::kernels
