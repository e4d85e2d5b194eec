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

#include "bisect_order/bisect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/parallel_sort.h>

#include "bisect_order/baselines.hpp"
#include "bisect_order/error.hpp"
#include "local_subgraph.hpp"

namespace bisect_order {

namespace {

/// Estimated bits for `deg` neighbors spread over `n` slots.
inline double cost_term(std::uint32_t deg, double log2_n)
{
    if (deg == 0)
        return 0.0;
    return deg * (log2_n - std::log2(static_cast<double>(deg) + 1.0));
}

inline double log2_size(std::size_t n) { return n == 0 ? 0.0 : std::log2(static_cast<double>(n)); }

template <class F>
void for_each_index(std::size_t n, bool parallel, F&& f)
{
    if (parallel) {
        tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n, 1024), [&](const tbb::blocked_range<std::size_t>& r) {
            for (std::size_t i = r.begin(); i != r.end(); ++i)
                f(i);
        });
    } else {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
    }
}

} // namespace

PartitionState PartitionState::build(const BipartiteGraph& graph, std::span<const VertexId> vertices,
                                     std::span<const Side> sides)
{
    if (vertices.size() != sides.size())
        throw PreconditionError("one side per vertex is required");
    auto sub = detail::build_local_subgraph(graph, vertices, false);

    PartitionState s;
    s.vertices.assign(vertices.begin(), vertices.end());
    s.side.assign(sides.begin(), sides.end());
    s.queries = std::move(sub.queries);
    s.adj_offsets = std::move(sub.v_off);
    s.adj = std::move(sub.v_adj);
    s.deg1.assign(s.queries.size(), 0);
    s.deg2.assign(s.queries.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto& deg = s.side[i] == Side::Left ? s.deg1 : s.deg2;
        for (std::uint32_t q : s.local_queries(i))
            ++deg[q];
        if (s.side[i] == Side::Left)
            ++s.n1;
        else
            ++s.n2;
    }
    return s;
}

void PartitionState::flip(std::size_t i)
{
    auto& from = side[i] == Side::Left ? deg1 : deg2;
    auto& to = side[i] == Side::Left ? deg2 : deg1;
    for (std::uint32_t q : local_queries(i)) {
        --from[q];
        ++to[q];
    }
    side[i] = other(side[i]);
}

PartitionState init_partition(const BipartiteGraph& graph, std::span<const VertexId> slice, InitStrategy strategy,
                              std::uint64_t seed, std::size_t minhash_k)
{
    if (slice.size() < 2)
        throw DegenerateRangeError("cannot bisect a range of " + std::to_string(slice.size()) + " vertices");

    std::vector<VertexId> ordered;
    switch (strategy) {
    case InitStrategy::Random:
        ordered = shuffle_slice(slice, seed);
        break;
    case InitStrategy::Natural:
        ordered.assign(slice.begin(), slice.end());
        break;
    case InitStrategy::BFS:
        ordered = bfs_order_slice(graph, slice);
        break;
    case InitStrategy::Minhash:
        ordered = minhash_order_slice(graph, slice, minhash_k, seed);
        break;
    }

    std::vector<Side> sides(ordered.size(), Side::Right);
    std::fill_n(sides.begin(), ordered.size() / 2, Side::Left);
    return PartitionState::build(graph, ordered, sides);
}

double partition_cost(const BipartiteGraph&, const PartitionState& state)
{
    const double l1 = log2_size(state.n1);
    const double l2 = log2_size(state.n2);
    double cost = 0.0;
    for (std::size_t q = 0; q < state.queries.size(); ++q)
        cost += cost_term(state.deg1[q], l1) + cost_term(state.deg2[q], l2);
    return cost;
}

MoveGains compute_move_gains(const BipartiteGraph&, const PartitionState& state, bool parallel)
{
    const double l1 = log2_size(state.n1);
    const double l2 = log2_size(state.n2);
    const std::size_t nq = state.queries.size();

    // Per query, the cost decrease when one neighbor leaves the left (right) side.
    std::vector<double> leave_left(nq);
    std::vector<double> leave_right(nq);
    for_each_index(nq, parallel, [&](std::size_t q) {
        const std::uint32_t d1 = state.deg1[q];
        const std::uint32_t d2 = state.deg2[q];
        const double now = cost_term(d1, l1) + cost_term(d2, l2);
        leave_left[q] = d1 ? now - (cost_term(d1 - 1, l1) + cost_term(d2 + 1, l2)) : 0.0;
        leave_right[q] = d2 ? now - (cost_term(d1 + 1, l1) + cost_term(d2 - 1, l2)) : 0.0;
    });

    MoveGains out;
    out.gains.resize(state.size());
    for_each_index(state.size(), parallel, [&](std::size_t i) {
        const auto& delta = state.side[i] == Side::Left ? leave_left : leave_right;
        double g = 0.0;
        for (std::uint32_t q : state.local_queries(i))
            g += delta[q];
        out.gains[i] = g;
    });
    return out;
}

std::size_t run_swap_iteration(const BipartiteGraph&, PartitionState& state, const MoveGains& gains, bool parallel)
{
    std::vector<std::uint32_t> left;
    std::vector<std::uint32_t> right;
    left.reserve(state.n1);
    right.reserve(state.n2);
    for (std::uint32_t i = 0; i < state.size(); ++i)
        (state.side[i] == Side::Left ? left : right).push_back(i);

    const auto& g = gains.gains;
    auto by_gain = [&](std::uint32_t a, std::uint32_t b) {
        if (g[a] != g[b])
            return g[a] > g[b];
        return state.vertices[a] < state.vertices[b];
    };
    if (parallel) {
        tbb::parallel_sort(left.begin(), left.end(), by_gain);
        tbb::parallel_sort(right.begin(), right.end(), by_gain);
    } else {
        std::sort(left.begin(), left.end(), by_gain);
        std::sort(right.begin(), right.end(), by_gain);
    }

    std::size_t swapped = 0;
    const std::size_t pairs = std::min(left.size(), right.size());
    for (std::size_t i = 0; i < pairs; ++i) {
        if (!(g[left[i]] + g[right[i]] > 0.0))
            break;
        state.flip(left[i]);
        state.flip(right[i]);
        ++swapped;
    }
    return swapped;
}

std::pair<std::span<VertexId>, std::span<VertexId>> bisect(const BipartiteGraph& graph, std::span<VertexId> slice,
                                                           const ReorderConfig& config, std::uint64_t seed,
                                                           BisectTrace* trace)
{
    PartitionState state = init_partition(graph, slice, config.init_strategy, seed, config.minhash_k);
    const bool parallel = config.parallel && slice.size() >= config.parallel_threshold;

    if (trace) {
        *trace = BisectTrace{};
        trace->cost_before = partition_cost(graph, state);
    }
    for (std::size_t it = 0; it < config.max_iters; ++it) {
        const MoveGains gains = compute_move_gains(graph, state, parallel);
        const std::size_t swapped = run_swap_iteration(graph, state, gains, parallel);
        if (trace) {
            ++trace->iterations;
            trace->swapped_pairs.push_back(swapped);
        }
        if (swapped == 0)
            break;
    }
    if (trace)
        trace->cost_after = partition_cost(graph, state);

    std::size_t l = 0;
    std::size_t r = state.n1;
    for (std::size_t i = 0; i < state.size(); ++i)
        slice[state.side[i] == Side::Left ? l++ : r++] = state.vertices[i];
    return {slice.subspan(0, state.n1), slice.subspan(state.n1)};
}

} // namespace bisect_order
