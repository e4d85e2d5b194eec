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

#include <cstdint>
#include <span>
#include <vector>

#include "bisect_order/graph.hpp"

namespace bisect_order::detail {

/// The part of a bipartite graph seen by a slice of data vertices.
///
/// Local vertex i is slice[i]. Local queries are numbered in first-encounter
/// order while scanning the slice. `v_adj` keeps each vertex's queries in
/// graph order; `q_adj` (optional) lists each query's local vertices in slot
/// order.
struct LocalSubgraph {
    std::vector<VertexId> queries;
    std::vector<std::uint64_t> v_off{0};
    std::vector<std::uint32_t> v_adj;
    std::vector<std::uint64_t> q_off;
    std::vector<std::uint32_t> q_adj;
};

LocalSubgraph build_local_subgraph(const BipartiteGraph& graph, std::span<const VertexId> slice, bool with_reverse);

} // namespace bisect_order::detail
