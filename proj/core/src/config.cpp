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

#include "bisect_order/config.hpp"

#include <bit>
#include <string>

#include "bisect_order/error.hpp"

namespace bisect_order {

std::string_view to_string(InitStrategy s)
{
    switch (s) {
    case InitStrategy::Random:
        return "random";
    case InitStrategy::Natural:
        return "natural";
    case InitStrategy::BFS:
        return "bfs";
    case InitStrategy::Minhash:
        return "minhash";
    }
    return "unknown";
}

InitStrategy parse_init_strategy(std::string_view name)
{
    if (name == "random")
        return InitStrategy::Random;
    if (name == "natural")
        return InitStrategy::Natural;
    if (name == "bfs")
        return InitStrategy::BFS;
    if (name == "minhash")
        return InitStrategy::Minhash;
    throw PreconditionError("unknown init strategy '" + std::string(name) + "'");
}

std::size_t ReorderConfig::default_depth(std::size_t n)
{
    if (n <= 1)
        return 1;
    const std::size_t ceil_log2 = std::bit_width(n - 1);
    return ceil_log2 > 6 ? ceil_log2 - 5 : 1;
}

std::size_t ReorderConfig::effective_depth(std::size_t n) const
{
    const std::size_t d = depth_cutoff ? *depth_cutoff : default_depth(n);
    return d < 1 ? 1 : d;
}

} // namespace bisect_order
