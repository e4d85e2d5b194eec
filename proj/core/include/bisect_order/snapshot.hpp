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
#include <iosfwd>
#include <vector>

#include "bisect_order/graph.hpp"

namespace bisect_order {

// Binary snapshot layout, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "BOBG"
//   4       4     version (u32, currently 1)
//   8       8     num_queries (u64)
//   16      8     num_data (u64)
//   24      8     num_edges (u64)
//   32      8*(num_queries+1)  forward offsets (u64)
//   ...     4*num_edges        forward data ids (u32)
//
// Data-vertex labels live in a separate text sidecar, one label per line.

inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(std::ostream& out, const BipartiteGraph& g);
BipartiteGraph read_snapshot(std::istream& in);

void write_labels(std::ostream& out, const BipartiteGraph& g);
std::vector<Label> read_labels(std::istream& in);

// Little-endian fixed-width helpers shared by the binary formats.
void put_u32(std::ostream& out, std::uint32_t v);
void put_u64(std::ostream& out, std::uint64_t v);
std::uint32_t get_u32(std::istream& in);
std::uint64_t get_u64(std::istream& in);

} // namespace bisect_order
