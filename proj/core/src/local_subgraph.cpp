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

#include "local_subgraph.hpp"

namespace bisect_order::detail {

namespace {

constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

// Per-thread query -> local id map. Every entry is kAbsent between calls.
std::vector<std::uint32_t>& query_scratch(std::size_t num_queries)
{
    thread_local std::vector<std::uint32_t> map;
    if (map.size() < num_queries)
        map.resize(num_queries, kAbsent);
    return map;
}

} // namespace

LocalSubgraph build_local_subgraph(const BipartiteGraph& graph, std::span<const VertexId> slice, bool with_reverse)
{
    LocalSubgraph sub;
    auto& map = query_scratch(graph.num_queries());

    std::size_t edges = 0;
    for (VertexId v : slice)
        edges += graph.data_degree(v);
    sub.v_off.reserve(slice.size() + 1);
    sub.v_adj.reserve(edges);

    for (VertexId v : slice) {
        for (VertexId q : graph.queries_of(v)) {
            std::uint32_t& local = map[q];
            if (local == kAbsent) {
                local = static_cast<std::uint32_t>(sub.queries.size());
                sub.queries.push_back(q);
            }
            sub.v_adj.push_back(local);
        }
        sub.v_off.push_back(sub.v_adj.size());
    }
    for (VertexId q : sub.queries)
        map[q] = kAbsent;

    if (with_reverse) {
        sub.q_off.assign(sub.queries.size() + 1, 0);
        for (std::uint32_t q : sub.v_adj)
            ++sub.q_off[q + 1];
        for (std::size_t q = 0; q < sub.queries.size(); ++q)
            sub.q_off[q + 1] += sub.q_off[q];
        sub.q_adj.resize(sub.v_adj.size());
        std::vector<std::uint64_t> cursor(sub.q_off.begin(), sub.q_off.end() - 1);
        for (std::size_t i = 0; i < slice.size(); ++i)
            for (std::uint64_t e = sub.v_off[i]; e < sub.v_off[i + 1]; ++e)
                sub.q_adj[cursor[sub.v_adj[e]]++] = static_cast<std::uint32_t>(i);
    }
    return sub;
}

} // namespace bisect_order::detail
