// Copyright 2026 The bisect-order Authors
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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bisect_order/config.hpp"
#include "bisect_order/graph.hpp"
#include "bisect_order/permutation.hpp"

namespace bisect_order {

struct SliceStats {
    std::size_t offset = 0;
    std::size_t size = 0;
    std::size_t iterations = 0;
    /// Moved vertices (two per swapped pair) over slice size, per iteration.
    std::vector<double> swapped_fraction;
    double cost_before = 0.0;
    double cost_after = 0.0;
};

struct LevelStats {
    std::size_t level = 0;
    std::vector<SliceStats> slices;  // sorted by offset
};

struct ReorderTrace {
    std::vector<LevelStats> levels;
};

/// Seed for the bisection at (level, offset).
std::uint64_t derive_seed(std::uint64_t seed, std::size_t level, std::size_t offset);

/// Recursive graph bisection over the data vertices of `graph`.
Permutation recursive_bisection(const BipartiteGraph& graph, const ReorderConfig& config,
                                ReorderTrace* trace = nullptr);

/// Runs recursive_bisection and returns only its per-level trace.
ReorderTrace order_stats(const ReorderConfig& config, const BipartiteGraph& graph);

} // namespace bisect_order
