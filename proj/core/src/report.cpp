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

#include "bisect_order/report.hpp"

#include <nlohmann/json.hpp>

#include "bisect_order/error.hpp"

namespace bisect_order {

OrderingReport make_report(const BipartiteGraph& graph, const Permutation& perm, const std::vector<Codec>& codecs,
                           const PlainGraph* plain, bool include_list_headers)
{
    OrderingReport r;
    const LogGapResult lg = loggap(graph, perm);
    r.loggap_total = lg.total;
    r.gap_count = lg.gaps;
    r.loggap_avg = lg.avg;
    r.histogram = gap_histogram(graph, perm);
    if (plain) {
        const MLogAResult ml = mloga_cost(*plain, perm);
        r.log_avg = ml.avg;
        r.log_directed = ml.directed;
    }
    for (Codec c : codecs)
        r.bits_per_edge[std::string(codec_name(c))] = bits_per_edge(graph, perm, c, include_list_headers);
    return r;
}

std::string to_json(const OrderingReport& report, const std::map<std::string, std::string>& extra)
{
    nlohmann::ordered_json j;
    for (const auto& [k, v] : extra)
        j[k] = v;
    j["loggap_total"] = report.loggap_total;
    j["gap_count"] = report.gap_count;
    j["loggap_avg"] = report.loggap_avg;
    if (report.log_avg) {
        j["log_avg"] = *report.log_avg;
        j["log_edges"] = report.log_directed ? "directed" : "undirected";
    } else {
        j["log_avg"] = nullptr;
    }
    // Trailing empty buckets are trimmed; bucket i covers gaps in [2^i, 2^(i+1)).
    std::size_t used = report.histogram.buckets.size();
    while (used > 0 && report.histogram.buckets[used - 1] == 0)
        --used;
    j["histogram"] = std::vector<std::uint64_t>(report.histogram.buckets.begin(),
                                                report.histogram.buckets.begin() + static_cast<std::ptrdiff_t>(used));
    nlohmann::ordered_json bpe = nlohmann::ordered_json::object();
    for (const auto& [codec, bits] : report.bits_per_edge)
        bpe[codec] = bits;
    j["bits_per_edge"] = bpe;
    return j.dump();
}

} // namespace bisect_order
