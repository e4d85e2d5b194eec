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
#include <iosfwd>
#include <span>
#include <vector>

namespace bisect_order {

using VertexId = std::uint32_t;
using Label = std::int64_t;

/// Simple graph in CSR form, as loaded from an edge list.
///
/// Vertex ids are dense and 0-based; `labels[v]` holds the id that appeared in
/// the input. Undirected graphs store every edge in both endpoint lists.
struct PlainGraph {
    std::size_t num_vertices = 0;
    bool directed = false;
    std::vector<std::uint64_t> offsets{0};
    std::vector<VertexId> targets;
    std::vector<Label> labels;

    std::span<const VertexId> neighbors(VertexId v) const
    {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets[v + 1] - offsets[v]; }

    /// Distinct edges; an undirected edge counts once.
    std::size_t num_edges() const { return directed ? targets.size() : targets.size() / 2; }
};

/// Bipartite graph G = (Q u D, E) with both adjacency directions materialized.
///
/// Immutable after construction. Each forward (query -> data) list is strictly
/// increasing; the reverse (data -> query) lists are derived from it and are
/// strictly increasing as well.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Builds from CSR forward adjacency. Throws FormatError if any list is not
    /// strictly increasing or an id is out of range.
    BipartiteGraph(std::size_t num_queries, std::size_t num_data, std::vector<std::uint64_t> fwd_offsets,
                   std::vector<VertexId> fwd_ids);

    static BipartiteGraph from_lists(std::size_t num_data, const std::vector<std::vector<VertexId>>& lists);

    std::size_t num_queries() const noexcept { return num_queries_; }
    std::size_t num_data() const noexcept { return num_data_; }
    std::size_t num_edges() const noexcept { return fwd_ids_.size(); }

    std::span<const VertexId> data_of(VertexId q) const
    {
        return {fwd_ids_.data() + fwd_offsets_[q], fwd_ids_.data() + fwd_offsets_[q + 1]};
    }
    std::span<const VertexId> queries_of(VertexId d) const
    {
        return {rev_ids_.data() + rev_offsets_[d], rev_ids_.data() + rev_offsets_[d + 1]};
    }
    std::size_t query_degree(VertexId q) const { return fwd_offsets_[q + 1] - fwd_offsets_[q]; }
    std::size_t data_degree(VertexId d) const { return rev_offsets_[d + 1] - rev_offsets_[d]; }

    const std::vector<std::uint64_t>& fwd_offsets() const noexcept { return fwd_offsets_; }
    const std::vector<VertexId>& fwd_ids() const noexcept { return fwd_ids_; }
    const std::vector<std::uint64_t>& rev_offsets() const noexcept { return rev_offsets_; }
    const std::vector<VertexId>& rev_ids() const noexcept { return rev_ids_; }

    /// Original labels of data vertices; empty means "label == id".
    const std::vector<Label>& data_labels() const noexcept { return data_labels_; }
    void set_data_labels(std::vector<Label> labels);
    Label data_label(VertexId d) const { return data_labels_.empty() ? Label(d) : data_labels_[d]; }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b)
    {
        return a.num_queries_ == b.num_queries_ && a.num_data_ == b.num_data_ &&
               a.fwd_offsets_ == b.fwd_offsets_ && a.fwd_ids_ == b.fwd_ids_ && a.rev_offsets_ == b.rev_offsets_ &&
               a.rev_ids_ == b.rev_ids_;
    }

private:
    std::size_t num_queries_ = 0;
    std::size_t num_data_ = 0;
    std::vector<std::uint64_t> fwd_offsets_{0};
    std::vector<VertexId> fwd_ids_;
    std::vector<std::uint64_t> rev_offsets_{0};
    std::vector<VertexId> rev_ids_;
    std::vector<Label> data_labels_;
};

/// Reads whitespace-separated "u v" pairs, one per line; '#' starts a comment
/// line. Ids are compacted in first-appearance order, self-loops and duplicate
/// edges are dropped.
PlainGraph load_edge_list(std::istream& in, bool directed);

/// One query per edge, adjacent to both endpoints. Undirected input only.
BipartiteGraph to_bipartite_per_edge(const PlainGraph& g);

/// One query per vertex whose list is the vertex's (out-)neighbors.
BipartiteGraph to_bipartite_per_vertex(const PlainGraph& g);

/// Reads one posting list per line: term id, then strictly increasing doc ids.
/// Lists shorter than `min_list_len` are skipped; the surviving doc ids are
/// compacted preserving their numeric order.
BipartiteGraph load_postings(std::istream& in, std::size_t min_list_len);

} // namespace bisect_order
