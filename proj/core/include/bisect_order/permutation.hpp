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
#include <iosfwd>
#include <span>
#include <vector>

#include "bisect_order/graph.hpp"

namespace bisect_order {

/// Bijection between data-vertex ids and 0-based ranks.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n);
    /// `order[pos]` is the vertex placed at `pos`. Throws ValidationError if
    /// `order` is not a bijection on [0, n).
    static Permutation from_order(std::vector<VertexId> order);
    /// `ranks[v]` is the position of vertex `v`.
    static Permutation from_ranks(std::vector<VertexId> ranks);

    std::size_t size() const noexcept { return rank_.size(); }
    VertexId rank(VertexId v) const { return rank_[v]; }
    VertexId at(std::size_t pos) const { return inverse_[pos]; }
    std::span<const VertexId> ranks() const noexcept { return rank_; }
    std::span<const VertexId> order() const noexcept { return inverse_; }

    /// Rank of v under `then` applied after this: then.rank(this.rank(v)).
    Permutation compose(const Permutation& then) const;
    Permutation reversed() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<VertexId> rank_;
    std::vector<VertexId> inverse_;
};

bool is_bijection(std::span<const VertexId> values);

// Text format: one line per data vertex in id order, "original_label new_rank".
void write_permutation_text(std::ostream& out, const Permutation& p, const BipartiteGraph& g);
/// Labels are resolved against `g`; every vertex must appear exactly once.
Permutation read_permutation_text(std::istream& in, const BipartiteGraph& g);

// Binary format: magic "BOPM", u32 version, u64 n, then n u32 ranks (LE).
void write_permutation_binary(std::ostream& out, const Permutation& p);
Permutation read_permutation_binary(std::istream& in);

} // namespace bisect_order
