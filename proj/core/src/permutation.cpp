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

#include "bisect_order/permutation.hpp"

#include <array>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>

#include "bisect_order/error.hpp"
#include "bisect_order/snapshot.hpp"

namespace bisect_order {

namespace {

constexpr std::array<char, 4> kPermMagic{'B', 'O', 'P', 'M'};
constexpr std::uint32_t kPermVersion = 1;

std::vector<VertexId> invert(const std::vector<VertexId>& values)
{
    std::vector<VertexId> inv(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        inv[values[i]] = static_cast<VertexId>(i);
    return inv;
}

} // namespace

bool is_bijection(std::span<const VertexId> values)
{
    std::vector<bool> seen(values.size(), false);
    for (VertexId v : values) {
        if (v >= values.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::identity(std::size_t n)
{
    Permutation p;
    p.rank_.resize(n);
    std::iota(p.rank_.begin(), p.rank_.end(), VertexId{0});
    p.inverse_ = p.rank_;
    return p;
}

Permutation Permutation::from_order(std::vector<VertexId> order)
{
    if (!is_bijection(order))
        throw ValidationError("order is not a permutation of [0, " + std::to_string(order.size()) + ")");
    Permutation p;
    p.rank_ = invert(order);
    p.inverse_ = std::move(order);
    return p;
}

Permutation Permutation::from_ranks(std::vector<VertexId> ranks)
{
    if (!is_bijection(ranks))
        throw ValidationError("ranks are not a permutation of [0, " + std::to_string(ranks.size()) + ")");
    Permutation p;
    p.inverse_ = invert(ranks);
    p.rank_ = std::move(ranks);
    return p;
}

Permutation Permutation::compose(const Permutation& then) const
{
    if (then.size() != size())
        throw ValidationError("cannot compose permutations of different sizes");
    std::vector<VertexId> ranks(size());
    for (std::size_t v = 0; v < size(); ++v)
        ranks[v] = then.rank(rank_[v]);
    return from_ranks(std::move(ranks));
}

Permutation Permutation::reversed() const
{
    std::vector<VertexId> ranks(size());
    for (std::size_t v = 0; v < size(); ++v)
        ranks[v] = static_cast<VertexId>(size() - 1 - rank_[v]);
    return from_ranks(std::move(ranks));
}

void write_permutation_text(std::ostream& out, const Permutation& p, const BipartiteGraph& g)
{
    if (p.size() != g.num_data())
        throw ValidationError("permutation size does not match the graph");
    for (VertexId v = 0; v < p.size(); ++v)
        out << g.data_label(v) << ' ' << p.rank(v) << '\n';
}

Permutation read_permutation_text(std::istream& in, const BipartiteGraph& g)
{
    std::unordered_map<Label, VertexId> by_label;
    by_label.reserve(g.num_data());
    for (VertexId v = 0; v < g.num_data(); ++v)
        by_label.emplace(g.data_label(v), v);

    constexpr VertexId kUnset = ~VertexId{0};
    std::vector<VertexId> ranks(g.num_data(), kUnset);
    std::size_t seen = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        long long label = 0;
        unsigned long long rank = 0;
        char extra = 0;
        if (std::sscanf(line.c_str(), "%lld %llu %c", &label, &rank, &extra) != 2)
            throw ParseError("expected \"original_label new_rank\"", line_no);
        auto it = by_label.find(label);
        if (it == by_label.end())
            throw ValidationError("line " + std::to_string(line_no) + ": label " + std::to_string(label) +
                                  " is not a data vertex of the graph");
        if (ranks[it->second] != kUnset)
            throw ValidationError("line " + std::to_string(line_no) + ": label " + std::to_string(label) +
                                  " listed twice");
        if (rank >= g.num_data())
            throw ValidationError("line " + std::to_string(line_no) + ": rank out of range");
        ranks[it->second] = static_cast<VertexId>(rank);
        ++seen;
    }
    if (seen != g.num_data())
        throw ValidationError("permutation covers " + std::to_string(seen) + " vertices, graph has " +
                              std::to_string(g.num_data()));
    return Permutation::from_ranks(std::move(ranks));
}

void write_permutation_binary(std::ostream& out, const Permutation& p)
{
    out.write(kPermMagic.data(), kPermMagic.size());
    put_u32(out, kPermVersion);
    put_u64(out, p.size());
    for (VertexId r : p.ranks())
        put_u32(out, r);
}

Permutation read_permutation_binary(std::istream& in)
{
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kPermMagic)
        throw FormatError("not a binary permutation file (bad magic)");
    if (get_u32(in) != kPermVersion)
        throw FormatError("unsupported permutation file version");
    const std::uint64_t n = get_u64(in);
    if (n > (std::uint64_t(1) << 32))
        throw FormatError("permutation size is implausibly large");
    std::vector<VertexId> ranks(n);
    for (auto& r : ranks)
        r = get_u32(in);
    return Permutation::from_ranks(std::move(ranks));
}

} // namespace bisect_order
