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
#include <vector>

#include "bisect_order/graph.hpp"
#include "bisect_order/permutation.hpp"

namespace bisect_order {

enum class BfsSeedRule { LowestId };

Permutation natural_order(const BipartiteGraph& graph);
Permutation random_order(std::size_t n, std::uint64_t seed);

/// Breadth-first search alternating data and query layers. Components are
/// started from the lowest-id unvisited data vertex.
Permutation bfs_order(const BipartiteGraph& graph, BfsSeedRule rule = BfsSeedRule::LowestId);

/// Lexicographic order of k minwise hashes of the adjacency sets, ties by id.
Permutation minhash_order(const BipartiteGraph& graph, std::size_t k = 10, std::uint64_t seed = 0);

// Slice variants used to initialize bisection. They return the slice's
// vertices in the new order; "lowest id" there means earliest slot.

std::vector<VertexId> shuffle_slice(std::span<const VertexId> slice, std::uint64_t seed);
std::vector<VertexId> bfs_order_slice(const BipartiteGraph& graph, std::span<const VertexId> slice);
std::vector<VertexId> minhash_order_slice(const BipartiteGraph& graph, std::span<const VertexId> slice,
                                          std::size_t k, std::uint64_t seed);

/// Minwise-hash signature of one data vertex; all-max when it has no queries.
std::vector<std::uint64_t> minhash_signature(const BipartiteGraph& graph, VertexId v, std::size_t k,
                                             std::uint64_t seed);

} // namespace bisect_order
