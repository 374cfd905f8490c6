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

#include <atomic>
#include <cstdlib>

#include "softset/kernels.hpp"

namespace softset::kernels {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
  }
  return "scalar";
}

std::optional<Backend> backend_from_string(std::string_view name) {
  if (name == "scalar") return Backend::kScalar;
  if (name == "avx2") return Backend::kAvx2;
  if (name == "neon") return Backend::kNeon;
  return std::nullopt;
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_for(Backend backend) {
  if (!backend_available(backend)) return scalar::table();
  switch (backend) {
#if defined(__x86_64__) || defined(__i386__)
    case Backend::kAvx2: return avx2::table();
#endif
#if defined(__aarch64__)
    case Backend::kNeon: return neon::table();
#endif
    default: return scalar::table();
  }
}

namespace {

Backend detect() {
  if (const char* env = std::getenv("SOFTSET_KERNELS")) {
    if (auto requested = backend_from_string(env); requested && backend_available(*requested)) {
      return *requested;
    }
  }
  if (backend_available(Backend::kAvx2)) return Backend::kAvx2;
  if (backend_available(Backend::kNeon)) return Backend::kNeon;
  return Backend::kScalar;
}

struct State {
  std::atomic<Backend> backend{detect()};
  std::atomic<const KernelTable*> table{&table_for(backend.load())};
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Backend active_backend() { return state().backend.load(std::memory_order_relaxed); }

const KernelTable& active() { return *state().table.load(std::memory_order_relaxed); }

bool set_active_backend(Backend backend) {
  if (!backend_available(backend)) return false;
  state().backend.store(backend, std::memory_order_relaxed);
  state().table.store(&table_for(backend), std::memory_order_relaxed);
  return true;
}

}  // namespace softset::kernels
