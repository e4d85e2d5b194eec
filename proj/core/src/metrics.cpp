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

#include "bisect_order/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <tbb/blocked_range.h>
#include <tbb/parallel_reduce.h>

#include "bisect_order/error.hpp"

namespace bisect_order {

namespace {

void check_size(const BipartiteGraph& graph, const Permutation& perm)
{
    if (perm.size() != graph.num_data())
        throw ValidationError("permutation has " + std::to_string(perm.size()) + " entries, graph has " +
                              std::to_string(graph.num_data()) + " data vertices");
}

/// Calls f(gap) for every gap of every query's sorted rank list.
template <class Acc, class F>
Acc reduce_gaps(const BipartiteGraph& graph, const Permutation& perm, Acc zero, F&& f)
{
    return tbb::parallel_reduce(
        tbb::blocked_range<std::size_t>(0, graph.num_queries(), 256), zero,
        [&](const tbb::blocked_range<std::size_t>& r, Acc acc) {
            std::vector<VertexId> ranks;
            for (std::size_t q = r.begin(); q != r.end(); ++q) {
                const auto data = graph.data_of(static_cast<VertexId>(q));
                if (data.size() < 2)
                    continue;
                ranks.resize(data.size());
                for (std::size_t i = 0; i < data.size(); ++i)
                    ranks[i] = perm.rank(data[i]);
                std::sort(ranks.begin(), ranks.end());
                for (std::size_t i = 1; i < ranks.size(); ++i)
                    f(acc, static_cast<std::uint64_t>(ranks[i] - ranks[i - 1]));
            }
            return acc;
        },
        [](Acc a, const Acc& b) {
            a += b;
            return a;
        });
}

struct GapSums {
    std::uint64_t bits = 0;
    std::uint64_t gaps = 0;
    GapSums& operator+=(const GapSums& o)
    {
        bits += o.bits;
        gaps += o.gaps;
        return *this;
    }
};

struct HistogramAcc {
    GapHistogram h;
    HistogramAcc& operator+=(const HistogramAcc& o)
    {
        for (std::size_t i = 0; i < h.buckets.size(); ++i)
            h.buckets[i] += o.h.buckets[i];
        return *this;
    }
};

} // namespace

LogGapResult loggap(const BipartiteGraph& graph, const Permutation& perm)
{
    check_size(graph, perm);
    const GapSums sums = reduce_gaps(graph, perm, GapSums{}, [](GapSums& acc, std::uint64_t gap) {
        acc.bits += int_log(gap);
        ++acc.gaps;
    });
    LogGapResult out;
    out.total = sums.bits;
    out.gaps = sums.gaps;
    out.avg = sums.gaps ? static_cast<double>(sums.bits) / static_cast<double>(sums.gaps) : 0.0;
    return out;
}

MLogAResult mloga_cost(const PlainGraph& graph, const Permutation& perm)
{
    if (perm.size() != graph.num_vertices)
        throw ValidationError("permutation has " + std::to_string(perm.size()) + " entries, graph has " +
                              std::to_string(graph.num_vertices) + " vertices");
    MLogAResult out;
    out.directed = graph.directed;
    for (VertexId u = 0; u < graph.num_vertices; ++u) {
        for (VertexId v : graph.neighbors(u)) {
            if (!graph.directed && v < u)
                continue;
            const VertexId a = perm.rank(u);
            const VertexId b = perm.rank(v);
            out.total += int_log(a > b ? a - b : b - a);
            ++out.edges;
        }
    }
    out.avg = out.edges ? static_cast<double>(out.total) / static_cast<double>(out.edges) : 0.0;
    return out;
}

std::uint64_t GapHistogram::total() const noexcept
{
    return std::accumulate(buckets.begin(), buckets.end(), std::uint64_t{0});
}

GapHistogram gap_histogram(const BipartiteGraph& graph, const Permutation& perm)
{
    check_size(graph, perm);
    return reduce_gaps(graph, perm, HistogramAcc{}, [](HistogramAcc& acc, std::uint64_t gap) {
               ++acc.h.buckets[int_log(gap) - 1];
           }).h;
}

double pearson(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size())
        throw PreconditionError("pearson needs equally sized samples");
    if (xs.size() < 2)
        throw PreconditionError("pearson needs at least two points");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw UndefinedCorrelationError("correlation is undefined for a constant sample");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

} // namespace bisect_order
