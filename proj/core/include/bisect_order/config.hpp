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
#include <optional>
#include <string>
#include <string_view>

namespace bisect_order {

enum class InitStrategy { Random, Natural, BFS, Minhash };

std::string_view to_string(InitStrategy s);
/// Accepts "random", "natural", "bfs", "minhash". Throws PreconditionError.
InitStrategy parse_init_strategy(std::string_view name);

struct ReorderConfig {
    InitStrategy init_strategy = InitStrategy::Random;
    std::size_t max_iters = 20;
    /// Number of bisection levels; unset means default_depth(n).
    std::optional<std::size_t> depth_cutoff;
    std::uint64_t seed = 0;
    bool parallel = true;
    /// Slices smaller than this run sequentially in the owning worker.
    std::size_t parallel_threshold = 4096;
    /// Hash functions used by the Minhash initialization.
    std::size_t minhash_k = 10;

    /// ceil(log2 n) - 5, never below 1.
    static std::size_t default_depth(std::size_t n);
    std::size_t effective_depth(std::size_t n) const;
};

} // namespace bisect_order
