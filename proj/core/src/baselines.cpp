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

#include "bisect_order/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bisect_order/hash.hpp"
#include "local_subgraph.hpp"

namespace bisect_order {

Permutation natural_order(const BipartiteGraph& graph) { return Permutation::identity(graph.num_data()); }

std::vector<VertexId> shuffle_slice(std::span<const VertexId> slice, std::uint64_t seed)
{
    std::vector<VertexId> out(slice.begin(), slice.end());
    Rng rng(seed);
    for (std::size_t i = out.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(out[i - 1], out[j]);
    }
    return out;
}

Permutation random_order(std::size_t n, std::uint64_t seed)
{
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    return Permutation::from_order(shuffle_slice(ids, seed));
}

std::vector<VertexId> bfs_order_slice(const BipartiteGraph& graph, std::span<const VertexId> slice)
{
    const auto sub = detail::build_local_subgraph(graph, slice, true);
    const std::size_t n = slice.size();
    std::vector<bool> seen_vertex(n, false);
    std::vector<bool> seen_query(sub.queries.size(), false);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);

    std::vector<VertexId> out;
    out.reserve(n);
    for (std::uint32_t start = 0; start < n; ++start) {
        if (seen_vertex[start])
            continue;
        seen_vertex[start] = true;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t v = queue[head];
            out.push_back(slice[v]);
            for (std::uint64_t e = sub.v_off[v]; e < sub.v_off[v + 1]; ++e) {
                const std::uint32_t q = sub.v_adj[e];
                if (seen_query[q])
                    continue;
                seen_query[q] = true;
                for (std::uint64_t f = sub.q_off[q]; f < sub.q_off[q + 1]; ++f) {
                    const std::uint32_t u = sub.q_adj[f];
                    if (!seen_vertex[u]) {
                        seen_vertex[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    return out;
}

Permutation bfs_order(const BipartiteGraph& graph, BfsSeedRule)
{
    std::vector<VertexId> ids(graph.num_data());
    std::iota(ids.begin(), ids.end(), VertexId{0});
    return Permutation::from_order(bfs_order_slice(graph, ids));
}

std::vector<std::uint64_t> minhash_signature(const BipartiteGraph& graph, VertexId v, std::size_t k,
                                             std::uint64_t seed)
{
    std::vector<std::uint64_t> sig(k, std::numeric_limits<std::uint64_t>::max());
    const auto queries = graph.queries_of(v);
    for (std::size_t i = 0; i < k; ++i) {
        const auto h = MulXorHash::from_seed(seed, i);
        for (VertexId q : queries)
            sig[i] = std::min(sig[i], h(q));
    }
    return sig;
}

std::vector<VertexId> minhash_order_slice(const BipartiteGraph& graph, std::span<const VertexId> slice,
                                          std::size_t k, std::uint64_t seed)
{
    const std::size_t n = slice.size();
    std::vector<std::uint64_t> sigs(n * k, std::numeric_limits<std::uint64_t>::max());
    for (std::size_t i = 0; i < k; ++i) {
        const auto h = MulXorHash::from_seed(seed, i);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
            for (VertexId q : graph.queries_of(slice[j]))
                m = std::min(m, h(q));
            sigs[j * k + i] = m;
        }
    }

    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto* sa = sigs.data() + std::size_t(a) * k;
        const auto* sb = sigs.data() + std::size_t(b) * k;
        for (std::size_t i = 0; i < k; ++i)
            if (sa[i] != sb[i])
                return sa[i] < sb[i];
        return slice[a] < slice[b];
    });

    std::vector<VertexId> out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = slice[idx[j]];
    return out;
}

Permutation minhash_order(const BipartiteGraph& graph, std::size_t k, std::uint64_t seed)
{
    std::vector<VertexId> ids(graph.num_data());
    std::iota(ids.begin(), ids.end(), VertexId{0});
    return Permutation::from_order(minhash_order_slice(graph, ids, k, seed));
}

} // namespace bisect_order
