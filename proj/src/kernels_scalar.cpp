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

#include <bit>

#include "softset/kernels.hpp"

namespace softset::kernels::scalar {
namespace {

void bit_and(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

void bit_or(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] | b[i];
}

void bit_andnot(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & ~b[i];
}

bool any(std::span<const Word> a) {
  for (Word w : a) {
    if (w != 0) return true;
  }
  return false;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool equal(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::size_t popcount(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

constexpr KernelTable kTable{bit_and, bit_or, bit_andnot, any, intersects, is_subset, equal, popcount};

}  // namespace

const KernelTable& table() { return kTable; }

}  // namespace softset::kernels::scalar
