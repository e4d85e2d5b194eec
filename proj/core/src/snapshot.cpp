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

#include "bisect_order/snapshot.hpp"

#include <array>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "bisect_order/error.hpp"

namespace bisect_order {

namespace {

constexpr std::array<char, 4> kMagic{'B', 'O', 'B', 'G'};

// Refuses headers that would need more memory than any plausible input.
constexpr std::uint64_t kMaxCount = std::uint64_t(1) << 40;

} // namespace

void put_u32(std::ostream& out, std::uint32_t v)
{
    char buf[4];
    for (int i = 0; i < 4; ++i)
        buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(buf, 4);
}

void put_u64(std::ostream& out, std::uint64_t v)
{
    char buf[8];
    for (int i = 0; i < 8; ++i)
        buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(buf, 8);
}

std::uint32_t get_u32(std::istream& in)
{
    unsigned char buf[4];
    if (!in.read(reinterpret_cast<char*>(buf), 4))
        throw FormatError("truncated binary input");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i)
        v = (v << 8) | buf[i];
    return v;
}

std::uint64_t get_u64(std::istream& in)
{
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8))
        throw FormatError("truncated binary input");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | buf[i];
    return v;
}

void write_snapshot(std::ostream& out, const BipartiteGraph& g)
{
    out.write(kMagic.data(), kMagic.size());
    put_u32(out, kSnapshotVersion);
    put_u64(out, g.num_queries());
    put_u64(out, g.num_data());
    put_u64(out, g.num_edges());
    for (std::uint64_t off : g.fwd_offsets())
        put_u64(out, off);
    for (VertexId id : g.fwd_ids())
        put_u32(out, id);
}

BipartiteGraph read_snapshot(std::istream& in)
{
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic)
        throw FormatError("not a bipartite graph snapshot (bad magic)");
    const std::uint32_t version = get_u32(in);
    if (version != kSnapshotVersion)
        throw FormatError("unsupported snapshot version " + std::to_string(version));
    const std::uint64_t num_queries = get_u64(in);
    const std::uint64_t num_data = get_u64(in);
    const std::uint64_t num_edges = get_u64(in);
    if (num_queries > kMaxCount || num_data > kMaxCount || num_edges > kMaxCount)
        throw FormatError("snapshot header counts are implausibly large");

    std::vector<std::uint64_t> offsets(num_queries + 1);
    for (auto& off : offsets)
        off = get_u64(in);
    std::vector<VertexId> ids(num_edges);
    for (auto& id : ids)
        id = get_u32(in);
    return BipartiteGraph(num_queries, num_data, std::move(offsets), std::move(ids));
}

void write_labels(std::ostream& out, const BipartiteGraph& g)
{
    for (VertexId d = 0; d < g.num_data(); ++d)
        out << g.data_label(d) << '\n';
}

std::vector<Label> read_labels(std::istream& in)
{
    std::vector<Label> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        try {
            std::size_t used = 0;
            labels.push_back(std::stoll(line, &used));
            if (used != line.size())
                throw ParseError("trailing characters in label", line_no);
        } catch (const std::logic_error&) {
            throw ParseError("expected an integer label", line_no);
        }
    }
    return labels;
}

} // namespace bisect_order
