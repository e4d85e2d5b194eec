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
#include <span>
#include <utility>
#include <vector>

#include "bisect_order/config.hpp"
#include "bisect_order/graph.hpp"

namespace bisect_order {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Working state of one bisection over a slice of data vertices.
///
/// Vertices and queries are indexed locally: local vertex i is `vertices[i]`,
/// local query j is `queries[j]`. Only queries with at least one neighbor in
/// the slice are present. `adj` lists, for each local vertex, the local ids of
/// its queries in the same order as `graph.queries_of(vertex)`.
struct PartitionState {
    std::vector<VertexId> vertices;
    std::vector<Side> side;
    std::size_t n1 = 0;
    std::size_t n2 = 0;

    std::vector<VertexId> queries;
    std::vector<std::uint32_t> deg1;
    std::vector<std::uint32_t> deg2;

    std::vector<std::uint64_t> adj_offsets{0};
    std::vector<std::uint32_t> adj;

    std::size_t size() const noexcept { return vertices.size(); }
    std::span<const std::uint32_t> local_queries(std::size_t i) const
    {
        return {adj.data() + adj_offsets[i], adj.data() + adj_offsets[i + 1]};
    }

    /// Arbitrary assignment; n1/n2 are the side counts. Used directly by tests
    /// and by init_partition.
    static PartitionState build(const BipartiteGraph& graph, std::span<const VertexId> vertices,
                                std::span<const Side> sides);

    /// Moves local vertex i to the other side and updates deg1/deg2. n1 and n2
    /// are left untouched.
    void flip(std::size_t i);
};

/// Orders the slice by `strategy` and puts the first floor(|slice|/2)
/// vertices on the left. Throws DegenerateRangeError for |slice| < 2.
PartitionState init_partition(const BipartiteGraph& graph, std::span<const VertexId> slice, InitStrategy strategy,
                              std::uint64_t seed, std::size_t minhash_k = 10);

/// Sum over queries of deg1*log2(n1/(deg1+1)) + deg2*log2(n2/(deg2+1)).
double partition_cost(const BipartiteGraph& graph, const PartitionState& state);

/// Per local vertex: cost decrease if it switched sides with n1, n2 fixed.
struct MoveGains {
    std::vector<double> gains;
};

MoveGains compute_move_gains(const BipartiteGraph& graph, const PartitionState& state, bool parallel = false);

/// One pass of pairwise exchanges using the (stale) gains. Returns the number
/// of swapped pairs.
std::size_t run_swap_iteration(const BipartiteGraph& graph, PartitionState& state, const MoveGains& gains,
                               bool parallel = false);

struct BisectTrace {
    std::size_t iterations = 0;
    std::vector<std::size_t> swapped_pairs;
    double cost_before = 0.0;
    double cost_after = 0.0;
};

/// Runs gain/swap iterations until no pair is exchanged or `config.max_iters`
/// is reached, then rewrites `slice` with the left side first. Both halves keep
/// the relative order they had right after initialization.
std::pair<std::span<VertexId>, std::span<VertexId>> bisect(const BipartiteGraph& graph, std::span<VertexId> slice,
                                                           const ReorderConfig& config, std::uint64_t seed,
                                                           BisectTrace* trace = nullptr);

} // namespace bisect_order
