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

#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bisect_order/hash.hpp"

namespace bisect_order::testkit {

namespace {

std::vector<VertexId> random_relabel(std::size_t n, std::uint64_t seed)
{
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    Rng rng(seed);
    for (std::size_t i = n; i > 1; --i)
        std::swap(ids[i - 1], ids[rng.below(i)]);
    return ids;
}

std::vector<Edge> edges_of(const PlainGraph& g)
{
    std::vector<Edge> out;
    for (VertexId u = 0; u < g.num_vertices; ++u)
        for (VertexId v : g.neighbors(u))
            if (g.directed || u < v)
                out.emplace_back(u, v);
    return out;
}

std::size_t draw_count(Rng& rng, double mean)
{
    const double whole = std::floor(mean);
    return static_cast<std::size_t>(whole) + (rng.uniform() < mean - whole ? 1 : 0);
}

} // namespace

PlainGraph make_plain(std::size_t n, const std::vector<Edge>& edges, bool directed)
{
    std::vector<Edge> all;
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        all.emplace_back(u, v);
        if (!directed)
            all.emplace_back(v, u);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    PlainGraph g;
    g.num_vertices = n;
    g.directed = directed;
    g.offsets.assign(n + 1, 0);
    for (auto [u, v] : all)
        ++g.offsets[u + 1];
    for (std::size_t i = 0; i < n; ++i)
        g.offsets[i + 1] += g.offsets[i];
    for (auto [u, v] : all)
        g.targets.push_back(v);
    g.labels.resize(n);
    std::iota(g.labels.begin(), g.labels.end(), Label{0});
    return g;
}

PlainGraph scramble(const PlainGraph& g, std::uint64_t seed)
{
    const auto relabel = random_relabel(g.num_vertices, seed);
    std::vector<Edge> edges;
    for (auto [u, v] : edges_of(g))
        edges.emplace_back(relabel[u], relabel[v]);
    return make_plain(g.num_vertices, edges, g.directed);
}

PlainGraph planted_partition(std::size_t n, std::size_t blocks, double deg_in, double deg_out, std::uint64_t seed)
{
    Rng rng(seed);
    const std::size_t block_size = n / blocks;
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) {
        const std::size_t block = std::min(v / block_size, blocks - 1);
        const std::size_t lo = block * block_size;
        const std::size_t hi = block + 1 == blocks ? n : lo + block_size;
        for (std::size_t i = draw_count(rng, deg_in / 2); i > 0; --i)
            edges.emplace_back(v, static_cast<VertexId>(lo + rng.below(hi - lo)));
        for (std::size_t i = draw_count(rng, deg_out / 2); i > 0; --i)
            edges.emplace_back(v, static_cast<VertexId>(rng.below(n)));
    }
    return scramble(make_plain(n, edges, false), seed ^ 0xabcdefULL);
}

PlainGraph geometric_graph(std::size_t n, double avg_degree, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.uniform();
        y[i] = rng.uniform();
    }
    const double radius = std::sqrt(avg_degree / (static_cast<double>(n) * 3.14159265358979));
    const std::size_t cells = std::max<std::size_t>(1, static_cast<std::size_t>(1.0 / radius));
    std::vector<std::vector<VertexId>> grid(cells * cells);
    auto cell_of = [&](double c) { return std::min(cells - 1, static_cast<std::size_t>(c * cells)); };
    for (VertexId i = 0; i < n; ++i)
        grid[cell_of(x[i]) * cells + cell_of(y[i])].push_back(i);

    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
        const std::size_t cx = cell_of(x[i]);
        const std::size_t cy = cell_of(y[i]);
        for (std::size_t gx = cx ? cx - 1 : 0; gx <= std::min(cells - 1, cx + 1); ++gx)
            for (std::size_t gy = cy ? cy - 1 : 0; gy <= std::min(cells - 1, cy + 1); ++gy)
                for (VertexId j : grid[gx * cells + gy]) {
                    if (j <= i)
                        continue;
                    const double dx = x[i] - x[j];
                    const double dy = y[i] - y[j];
                    if (dx * dx + dy * dy <= radius * radius)
                        edges.emplace_back(i, j);
                }
    }
    return scramble(make_plain(n, edges, false), seed ^ 0x1234ULL);
}

PlainGraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        edges.emplace_back(static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)));
    return make_plain(n, edges, false);
}

BipartiteGraph synthetic_index(std::size_t terms, std::size_t docs, std::size_t topics, double p_home,
                               double p_noise, std::uint64_t seed)
{
    Rng rng(seed);
    const auto relabel = random_relabel(docs, seed ^ 0x77ULL);
    std::vector<std::vector<VertexId>> lists(terms);
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t home = t % topics;
        for (std::size_t d = 0; d < docs; ++d) {
            const double p = d % topics == home ? p_home : p_noise;
            if (rng.uniform() < p)
                lists[t].push_back(relabel[d]);
        }
        std::sort(lists[t].begin(), lists[t].end());
    }
    return BipartiteGraph::from_lists(docs, lists);
}

BipartiteGraph random_bipartite(std::size_t queries, std::size_t data, double p, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::vector<VertexId>> lists(queries);
    for (auto& list : lists)
        for (VertexId d = 0; d < data; ++d)
            if (rng.uniform() < p)
                list.push_back(d);
    return BipartiteGraph::from_lists(data, lists);
}

std::vector<CorpusGraph> corpus()
{
    std::vector<CorpusGraph> out;
    out.push_back({"planted-2k", to_bipartite_per_vertex(planted_partition(2048, 32, 10.0, 2.0, 11))});
    out.push_back({"geometric-4k", to_bipartite_per_vertex(geometric_graph(4096, 12.0, 12))});
    out.push_back({"index-4k", synthetic_index(300, 4096, 16, 0.3, 0.02, 13)});
    out.push_back({"planted-edge-1k", to_bipartite_per_edge(planted_partition(1024, 16, 8.0, 1.0, 14))});
    return out;
}

} // namespace bisect_order::testkit
