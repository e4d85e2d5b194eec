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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bisect_order/codecs.hpp"
#include "bisect_order/graph.hpp"
#include "bisect_order/metrics.hpp"
#include "bisect_order/permutation.hpp"

namespace bisect_order {

struct OrderingReport {
    std::uint64_t loggap_total = 0;
    std::uint64_t gap_count = 0;
    double loggap_avg = 0.0;
    std::optional<double> log_avg;  // needs the plain graph
    bool log_directed = false;
    GapHistogram histogram;
    std::map<std::string, double> bits_per_edge;  // keyed by codec name
};

OrderingReport make_report(const BipartiteGraph& graph, const Permutation& perm, const std::vector<Codec>& codecs,
                           const PlainGraph* plain = nullptr, bool include_list_headers = false);

/// Single-line JSON object with fields loggap_total, loggap_avg, log_avg,
/// histogram and bits_per_edge.{codec}. Extra key/value pairs go first.
std::string to_json(const OrderingReport& report, const std::map<std::string, std::string>& extra = {});

} // namespace bisect_order
