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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

#include "bisect_order/graph.hpp"
#include "bisect_order/permutation.hpp"

namespace bisect_order {

/// Bits needed to represent x: 1 + floor(log2 x), for x >= 1.
constexpr unsigned int_log(std::uint64_t x) noexcept { return static_cast<unsigned>(std::bit_width(x)); }

struct LogGapResult {
    std::uint64_t total = 0;  // bits
    std::uint64_t gaps = 0;
    double avg = 0.0;         // total / gaps, 0 without gaps
};

/// Sum over queries of int_log of consecutive rank differences.
LogGapResult loggap(const BipartiteGraph& graph, const Permutation& perm);

struct MLogAResult {
    std::uint64_t total = 0;
    std::uint64_t edges = 0;
    double avg = 0.0;
    bool directed = false;  // computed over the directed edge set
};

/// Sum over edges of int_log |rank(u) - rank(v)|, averaged over edges.
MLogAResult mloga_cost(const PlainGraph& graph, const Permutation& perm);

/// buckets[i] counts gaps g with 2^i <= g < 2^(i+1).
struct GapHistogram {
    std::array<std::uint64_t, 64> buckets{};

    std::uint64_t total() const noexcept;
    friend bool operator==(const GapHistogram&, const GapHistogram&) = default;
};

GapHistogram gap_histogram(const BipartiteGraph& graph, const Permutation& perm);

/// Sample Pearson correlation. Throws PreconditionError on size mismatch or
/// fewer than two points, UndefinedCorrelationError on zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

} // namespace bisect_order
