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

#include "bisect_order/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "bisect_order/error.hpp"

namespace bisect_order {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

/// Splits `line` on whitespace and parses every token as an integer.
/// Returns false on a non-integer token.
bool parse_integers(std::string_view line, std::vector<std::int64_t>& out)
{
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i]))
            ++i;
        if (i == line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j]))
            ++j;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j)
            return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

bool skippable(std::string_view line)
{
    for (char c : line) {
        if (c == '#')
            return true;
        if (!is_space(c))
            return false;
    }
    return true;
}

/// CSR from (source, target) pairs; lists sorted and deduplicated.
void build_csr(std::size_t n, std::vector<std::pair<VertexId, VertexId>>& edges, std::vector<std::uint64_t>& offsets,
               std::vector<VertexId>& targets)
{
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    offsets.assign(n + 1, 0);
    for (auto [u, v] : edges)
        ++offsets[u + 1];
    for (std::size_t i = 0; i < n; ++i)
        offsets[i + 1] += offsets[i];
    targets.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        targets[i] = edges[i].second;
}

} // namespace

BipartiteGraph::BipartiteGraph(std::size_t num_queries, std::size_t num_data, std::vector<std::uint64_t> fwd_offsets,
                               std::vector<VertexId> fwd_ids)
    : num_queries_(num_queries), num_data_(num_data), fwd_offsets_(std::move(fwd_offsets)),
      fwd_ids_(std::move(fwd_ids))
{
    if (fwd_offsets_.size() != num_queries_ + 1 || fwd_offsets_.front() != 0 ||
        fwd_offsets_.back() != fwd_ids_.size())
        throw FormatError("forward offsets do not match the edge array");
    for (std::size_t q = 0; q < num_queries_; ++q) {
        if (fwd_offsets_[q] > fwd_offsets_[q + 1])
            throw FormatError("forward offsets are not monotone at query " + std::to_string(q));
        for (std::uint64_t e = fwd_offsets_[q]; e < fwd_offsets_[q + 1]; ++e) {
            if (fwd_ids_[e] >= num_data_)
                throw FormatError("data id out of range in query " + std::to_string(q));
            if (e > fwd_offsets_[q] && fwd_ids_[e - 1] >= fwd_ids_[e])
                throw FormatError("list of query " + std::to_string(q) + " is not strictly increasing");
        }
    }

    rev_offsets_.assign(num_data_ + 1, 0);
    for (VertexId d : fwd_ids_)
        ++rev_offsets_[d + 1];
    for (std::size_t d = 0; d < num_data_; ++d)
        rev_offsets_[d + 1] += rev_offsets_[d];
    rev_ids_.resize(fwd_ids_.size());
    std::vector<std::uint64_t> cursor(rev_offsets_.begin(), rev_offsets_.end() - 1);
    for (std::size_t q = 0; q < num_queries_; ++q)
        for (std::uint64_t e = fwd_offsets_[q]; e < fwd_offsets_[q + 1]; ++e)
            rev_ids_[cursor[fwd_ids_[e]]++] = static_cast<VertexId>(q);
}

BipartiteGraph BipartiteGraph::from_lists(std::size_t num_data, const std::vector<std::vector<VertexId>>& lists)
{
    std::vector<std::uint64_t> offsets{0};
    std::vector<VertexId> ids;
    for (const auto& list : lists) {
        ids.insert(ids.end(), list.begin(), list.end());
        offsets.push_back(ids.size());
    }
    return BipartiteGraph(lists.size(), num_data, std::move(offsets), std::move(ids));
}

void BipartiteGraph::set_data_labels(std::vector<Label> labels)
{
    if (!labels.empty() && labels.size() != num_data_)
        throw ValidationError("label count " + std::to_string(labels.size()) + " does not match " +
                              std::to_string(num_data_) + " data vertices");
    data_labels_ = std::move(labels);
}

PlainGraph load_edge_list(std::istream& in, bool directed)
{
    PlainGraph g;
    g.directed = directed;
    std::unordered_map<Label, VertexId> ids;
    auto compact = [&](Label label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(g.labels.size()));
        if (inserted)
            g.labels.push_back(label);
        return it->second;
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::int64_t> fields;
    std::string line;
    std::size_t line_no = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line))
            continue;
        if (!parse_integers(line, fields) || fields.size() != 2)
            throw ParseError("expected two integer vertex ids", line_no);
        any = true;
        const VertexId u = compact(fields[0]);
        const VertexId v = compact(fields[1]);
        if (u == v)
            continue;
        edges.emplace_back(u, v);
        if (!directed)
            edges.emplace_back(v, u);
    }
    if (!any)
        throw EmptyGraphError("edge list contains no edges");

    g.num_vertices = g.labels.size();
    build_csr(g.num_vertices, edges, g.offsets, g.targets);
    return g;
}

BipartiteGraph to_bipartite_per_edge(const PlainGraph& g)
{
    if (g.directed)
        throw UnsupportedReductionError("per-edge reduction requires an undirected graph");
    std::vector<std::uint64_t> offsets{0};
    std::vector<VertexId> ids;
    ids.reserve(g.targets.size());
    for (VertexId u = 0; u < g.num_vertices; ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (v <= u)
                continue;
            ids.push_back(u);
            ids.push_back(v);
            offsets.push_back(ids.size());
        }
    }
    const std::size_t num_queries = offsets.size() - 1;
    BipartiteGraph b(num_queries, g.num_vertices, std::move(offsets), std::move(ids));
    b.set_data_labels(g.labels);
    return b;
}

BipartiteGraph to_bipartite_per_vertex(const PlainGraph& g)
{
    BipartiteGraph b(g.num_vertices, g.num_vertices, g.offsets, g.targets);
    b.set_data_labels(g.labels);
    return b;
}

BipartiteGraph load_postings(std::istream& in, std::size_t min_list_len)
{
    std::vector<std::vector<std::int64_t>> kept;
    std::vector<std::int64_t> fields;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line))
            continue;
        if (!parse_integers(line, fields))
            throw ParseError("expected a term id followed by integer doc ids", line_no);
        const std::int64_t term = fields.front();
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i] < 0)
                throw FormatError("negative doc id in posting list of term " + std::to_string(term));
            if (i > 1 && fields[i - 1] >= fields[i])
                throw FormatError("posting list of term " + std::to_string(term) + " is not strictly increasing");
        }
        if (fields.size() - 1 < min_list_len)
            continue;
        kept.emplace_back(fields.begin() + 1, fields.end());
    }

    std::vector<std::int64_t> docs;
    for (const auto& list : kept)
        docs.insert(docs.end(), list.begin(), list.end());
    std::sort(docs.begin(), docs.end());
    docs.erase(std::unique(docs.begin(), docs.end()), docs.end());

    std::vector<std::uint64_t> offsets{0};
    std::vector<VertexId> ids;
    for (const auto& list : kept) {
        for (std::int64_t doc : list)
            ids.push_back(static_cast<VertexId>(std::lower_bound(docs.begin(), docs.end(), doc) - docs.begin()));
        offsets.push_back(ids.size());
    }
    BipartiteGraph b(kept.size(), docs.size(), std::move(offsets), std::move(ids));
    b.set_data_labels(std::vector<Label>(docs.begin(), docs.end()));
    return b;
}

} // namespace bisect_order
