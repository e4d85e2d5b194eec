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

#include "bisect_order/reorder.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <utility>

#include <tbb/parallel_invoke.h>

#include "bisect_order/bisect.hpp"
#include "bisect_order/hash.hpp"

namespace bisect_order {

std::uint64_t derive_seed(std::uint64_t seed, std::size_t level, std::size_t offset)
{
    return splitmix64(seed ^ splitmix64(splitmix64(level) ^ (static_cast<std::uint64_t>(offset) * 0x2545f4914f6cdd1dULL)));
}

namespace {

class TraceCollector {
public:
    void add(std::size_t level, SliceStats stats)
    {
        std::lock_guard lock(mutex_);
        records_.emplace_back(level, std::move(stats));
    }

    ReorderTrace finish() &&
    {
        std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first < b.first : a.second.offset < b.second.offset;
        });
        ReorderTrace trace;
        for (auto& [level, stats] : records_) {
            if (trace.levels.empty() || trace.levels.back().level != level)
                trace.levels.push_back(LevelStats{level, {}});
            trace.levels.back().slices.push_back(std::move(stats));
        }
        return trace;
    }

private:
    std::mutex mutex_;
    std::vector<std::pair<std::size_t, SliceStats>> records_;
};

struct Recursion {
    const BipartiteGraph& graph;
    const ReorderConfig& config;
    std::span<VertexId> slots;
    TraceCollector* collector;

    void run(std::size_t offset, std::size_t size, std::size_t level, std::size_t remaining) const
    {
        if (size <= 1 || remaining == 0)
            return;
        BisectTrace bt;
        auto slice = slots.subspan(offset, size);
        auto [left, right] = bisect(graph, slice, config, derive_seed(config.seed, level, offset),
                                    collector ? &bt : nullptr);
        if (collector) {
            SliceStats stats;
            stats.offset = offset;
            stats.size = size;
            stats.iterations = bt.iterations;
            stats.cost_before = bt.cost_before;
            stats.cost_after = bt.cost_after;
            for (std::size_t pairs : bt.swapped_pairs)
                stats.swapped_fraction.push_back(2.0 * static_cast<double>(pairs) / static_cast<double>(size));
            collector->add(level, std::move(stats));
        }

        const std::size_t left_size = left.size();
        auto do_left = [&] { run(offset, left_size, level + 1, remaining - 1); };
        auto do_right = [&] { run(offset + left_size, size - left_size, level + 1, remaining - 1); };
        if (config.parallel && size >= config.parallel_threshold) {
            tbb::parallel_invoke(do_left, do_right);
        } else {
            do_left();
            do_right();
        }
    }
};

} // namespace

Permutation recursive_bisection(const BipartiteGraph& graph, const ReorderConfig& config, ReorderTrace* trace)
{
    const std::size_t n = graph.num_data();
    std::vector<VertexId> slots(n);
    std::iota(slots.begin(), slots.end(), VertexId{0});

    TraceCollector collector;
    Recursion rec{graph, config, slots, trace ? &collector : nullptr};
    rec.run(0, n, 0, config.effective_depth(n));

    if (trace)
        *trace = std::move(collector).finish();
    return Permutation::from_order(std::move(slots));
}

ReorderTrace order_stats(const ReorderConfig& config, const BipartiteGraph& graph)
{
    ReorderTrace trace;
    recursive_bisection(graph, config, &trace);
    return trace;
}

} // namespace bisect_order
