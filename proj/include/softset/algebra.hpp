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

#include "softset/soft_set.hpp"

// Relations and operations on soft sets over one shared context. Binary
// operations throw ContextMismatch when their arguments belong to different
// contexts. Every result is a freshly normalized soft set.
namespace softset::algebra {

// (F, A) ⊆ (G, B): A ⊆ B and F(e) ⊆ G(e) for every e in A.
bool is_subset(const SoftSet& s, const SoftSet& t);
// Mutual inclusion.
bool equals(const SoftSet& s, const SoftSet& t);

// Domain {e ∈ A ∩ B | F(e) ∩ G(e) ≠ ∅}, image F(e) ∩ G(e).
SoftSet intersection(const SoftSet& s, const SoftSet& t);
// Domain A ∪ B; image F(e), G(e) or F(e) ∪ G(e) depending on which side defines e.
SoftSet union_of(const SoftSet& s, const SoftSet& t);
// Relative to (U, E): drops parameters with F(e) = U, maps the rest to
// U \ F(e) and every undefined parameter to U.
SoftSet complement(const SoftSet& s);
// Domain A \ {e ∈ A ∩ B | F(e) ⊆ G(e)}; image F(e) \ G(e) on A ∩ B, else F(e).
SoftSet difference(const SoftSet& s, const SoftSet& t);

}  // namespace softset::algebra
