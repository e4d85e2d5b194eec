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

#include "bisect_order/codecs.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include <tbb/blocked_range.h>
#include <tbb/parallel_reduce.h>

#include "bisect_order/bit_stream.hpp"
#include "bisect_order/error.hpp"

namespace bisect_order {

namespace {

void require_strictly_increasing(std::span<const std::uint32_t> list)
{
    for (std::size_t i = 1; i < list.size(); ++i)
        if (list[i - 1] >= list[i])
            throw PreconditionError("list is not strictly increasing at position " + std::to_string(i));
}

void require_universe(std::span<const std::uint32_t> list, std::uint64_t universe)
{
    if (!list.empty() && universe <= list.back())
        throw PreconditionError("universe " + std::to_string(universe) + " does not exceed the largest element " +
                                std::to_string(list.back()));
}

/// Value fed to the gap codecs at position i.
inline std::uint64_t gap_at(std::span<const std::uint32_t> list, std::size_t i)
{
    return i == 0 ? list[0] : std::uint64_t(list[i]) - list[i - 1];
}

inline std::uint64_t varbyte_bytes(std::uint64_t v)
{
    const unsigned width = std::max(1u, static_cast<unsigned>(std::bit_width(v)));
    return (width + 6) / 7;
}

inline std::uint64_t gamma_bits(std::uint64_t x) { return 2 * (std::bit_width(x) - 1) + 1; }

inline unsigned ef_low_width(std::size_t k, std::uint64_t universe)
{
    return universe > k ? static_cast<unsigned>(std::bit_width(universe / k) - 1) : 0u;
}

inline std::uint64_t ef_high_length(std::size_t k, std::uint64_t universe, unsigned l)
{
    return k + ((universe - 1) >> l) + 1;
}

// Centered minimal binary code for y in [0, r).
struct CenteredCode {
    std::uint64_t r;
    unsigned b;            // ceil(log2 r)
    std::uint64_t shorts;  // values coded with b - 1 bits
    std::uint64_t half;    // rotation that centers the short codewords

    explicit CenteredCode(std::uint64_t range)
        : r(range), b(static_cast<unsigned>(std::bit_width(range - 1))), shorts((std::uint64_t(1) << b) - range),
          half((range - shorts) / 2)
    {
    }

    std::uint64_t length(std::uint64_t y) const
    {
        if (r == 1)
            return 0;
        return rotate(y) < shorts ? b - 1 : b;
    }

    std::uint64_t rotate(std::uint64_t y) const { return (y + r - half) % r; }

    void write(BitWriter& out, std::uint64_t y) const
    {
        if (r == 1)
            return;
        const std::uint64_t z = rotate(y);
        if (z < shorts)
            out.put_bits(z, b - 1);
        else
            out.put_bits(z + shorts, b);
    }

    std::uint64_t read(BitReader& in) const
    {
        if (r == 1)
            return 0;
        std::uint64_t z = in.get_bits(b - 1);
        if (z >= shorts)
            z = ((z << 1) | static_cast<std::uint64_t>(in.get_bit())) - shorts;
        if (z >= r)
            throw FormatError("interpolative code out of range");
        return (z + half) % r;
    }
};

void bic_encode(BitWriter& out, std::span<const std::uint32_t> list, std::uint64_t low, std::uint64_t high)
{
    if (list.empty())
        return;
    const std::size_t mid = (list.size() - 1) / 2;
    const std::uint64_t lo = low + mid;
    const std::uint64_t hi = high - (list.size() - 1 - mid);
    const std::uint64_t x = list[mid];
    CenteredCode(hi - lo + 1).write(out, x - lo);
    bic_encode(out, list.subspan(0, mid), low, x - 1);
    bic_encode(out, list.subspan(mid + 1), x + 1, high);
}

std::uint64_t bic_bits(std::span<const std::uint32_t> list, std::uint64_t low, std::uint64_t high)
{
    if (list.empty())
        return 0;
    const std::size_t mid = (list.size() - 1) / 2;
    const std::uint64_t lo = low + mid;
    const std::uint64_t hi = high - (list.size() - 1 - mid);
    const std::uint64_t x = list[mid];
    return CenteredCode(hi - lo + 1).length(x - lo) + bic_bits(list.subspan(0, mid), low, x - 1) +
           bic_bits(list.subspan(mid + 1), x + 1, high);
}

void bic_decode(BitReader& in, std::span<std::uint32_t> out, std::uint64_t low, std::uint64_t high)
{
    if (out.empty())
        return;
    const std::size_t mid = (out.size() - 1) / 2;
    const std::uint64_t lo = low + mid;
    const std::uint64_t hi = high - (out.size() - 1 - mid);
    const std::uint64_t x = lo + CenteredCode(hi - lo + 1).read(in);
    out[mid] = static_cast<std::uint32_t>(x);
    bic_decode(in, out.subspan(0, mid), low, x - 1);
    bic_decode(in, out.subspan(mid + 1), x + 1, high);
}

EncodedList finish(Codec codec, BitWriter&& w, std::size_t count, std::uint64_t universe)
{
    EncodedList e;
    e.codec = codec;
    e.bit_length = w.size();
    e.payload = std::move(w).take();
    e.count = count;
    e.universe = universe;
    return e;
}

} // namespace

std::string_view codec_name(Codec c)
{
    switch (c) {
    case Codec::VarByte:
        return "varbyte";
    case Codec::Gamma:
        return "gamma";
    case Codec::EliasFano:
        return "ef";
    case Codec::Interpolative:
        return "bic";
    }
    return "unknown";
}

Codec parse_codec(std::string_view name)
{
    for (Codec c : all_codecs())
        if (codec_name(c) == name)
            return c;
    throw PreconditionError("unknown codec '" + std::string(name) + "' (expected varbyte, gamma, ef or bic)");
}

std::vector<Codec> all_codecs() { return {Codec::VarByte, Codec::Gamma, Codec::EliasFano, Codec::Interpolative}; }

EncodedList encode_gap_varbyte(std::span<const std::uint32_t> list)
{
    require_strictly_increasing(list);
    BitWriter w;
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::uint64_t v = gap_at(list, i);
        do {
            std::uint64_t byte = v & 0x7f;
            v >>= 7;
            if (v)
                byte |= 0x80;
            w.put_bits(byte, 8);
        } while (v);
    }
    return finish(Codec::VarByte, std::move(w), list.size(), 0);
}

EncodedList encode_gap_gamma(std::span<const std::uint32_t> list)
{
    require_strictly_increasing(list);
    BitWriter w;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::uint64_t x = i == 0 ? std::uint64_t(list[0]) + 1 : gap_at(list, i);
        const unsigned n = static_cast<unsigned>(std::bit_width(x) - 1);
        w.put_unary_zeros(n);
        w.put_bits(x, n + 1);
    }
    return finish(Codec::Gamma, std::move(w), list.size(), 0);
}

EncodedList encode_elias_fano(std::span<const std::uint32_t> list, std::uint64_t universe)
{
    require_strictly_increasing(list);
    require_universe(list, universe);
    BitWriter w;
    const std::size_t k = list.size();
    if (k == 0)
        return finish(Codec::EliasFano, std::move(w), 0, universe);
    const unsigned l = ef_low_width(k, universe);
    const std::uint64_t mask = (std::uint64_t(1) << l) - 1;
    for (std::uint32_t x : list)
        w.put_bits(x & mask, l);
    std::uint64_t pos = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t target = (std::uint64_t(list[i]) >> l) + i;
        w.put_unary_zeros(target - pos);
        w.put_bit(true);
        pos = target + 1;
    }
    w.put_unary_zeros(ef_high_length(k, universe, l) - pos);
    return finish(Codec::EliasFano, std::move(w), k, universe);
}

EncodedList encode_interpolative(std::span<const std::uint32_t> list, std::uint64_t universe)
{
    require_strictly_increasing(list);
    require_universe(list, universe);
    BitWriter w;
    if (!list.empty())
        bic_encode(w, list, 0, universe - 1);
    return finish(Codec::Interpolative, std::move(w), list.size(), universe);
}

EncodedList encode(Codec codec, std::span<const std::uint32_t> list, std::uint64_t universe)
{
    switch (codec) {
    case Codec::VarByte:
        return encode_gap_varbyte(list);
    case Codec::Gamma:
        return encode_gap_gamma(list);
    case Codec::EliasFano:
        return encode_elias_fano(list, universe);
    case Codec::Interpolative:
        return encode_interpolative(list, universe);
    }
    throw PreconditionError("unknown codec");
}

std::vector<std::uint32_t> decode(const EncodedList& e)
{
    BitReader in(e.payload, e.bit_length);
    std::vector<std::uint32_t> out(e.count);
    switch (e.codec) {
    case Codec::VarByte: {
        std::uint64_t prev = 0;
        for (std::size_t i = 0; i < e.count; ++i) {
            std::uint64_t v = 0;
            unsigned shift = 0;
            for (;;) {
                const std::uint64_t byte = in.get_bits(8);
                v |= (byte & 0x7f) << shift;
                shift += 7;
                if (!(byte & 0x80))
                    break;
                if (shift > 63)
                    throw FormatError("varbyte value overflows 64 bits");
            }
            prev = i == 0 ? v : prev + v;
            out[i] = static_cast<std::uint32_t>(prev);
        }
        break;
    }
    case Codec::Gamma: {
        std::uint64_t prev = 0;
        for (std::size_t i = 0; i < e.count; ++i) {
            unsigned n = 0;
            while (!in.get_bit())
                if (++n > 63)
                    throw FormatError("gamma prefix too long");
            const std::uint64_t x = (std::uint64_t(1) << n) | in.get_bits(n);
            prev = i == 0 ? x - 1 : prev + x;
            out[i] = static_cast<std::uint32_t>(prev);
        }
        break;
    }
    case Codec::EliasFano: {
        if (e.count == 0)
            break;
        const unsigned l = ef_low_width(e.count, e.universe);
        for (std::size_t i = 0; i < e.count; ++i)
            out[i] = static_cast<std::uint32_t>(in.get_bits(l));
        std::uint64_t pos = 0;
        for (std::size_t i = 0; i < e.count; ++pos) {
            if (in.get_bit()) {
                out[i] = static_cast<std::uint32_t>(((pos - i) << l) | out[i]);
                ++i;
            }
        }
        break;
    }
    case Codec::Interpolative:
        if (e.count)
            bic_decode(in, out, 0, e.universe - 1);
        break;
    }
    return out;
}

std::uint64_t gamma_closed_form_bits(std::span<const std::uint32_t> list)
{
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::uint64_t x = i == 0 ? std::uint64_t(list[0]) + 1 : gap_at(list, i);
        bits += 2 * static_cast<std::uint64_t>(std::bit_width(x) - 1) + 1;
    }
    return bits;
}

std::uint64_t encoded_bits(Codec codec, std::span<const std::uint32_t> list, std::uint64_t universe)
{
    switch (codec) {
    case Codec::VarByte: {
        std::uint64_t bytes = 0;
        for (std::size_t i = 0; i < list.size(); ++i)
            bytes += varbyte_bytes(gap_at(list, i));
        return 8 * bytes;
    }
    case Codec::Gamma:
        return gamma_closed_form_bits(list);
    case Codec::EliasFano: {
        if (list.empty())
            return 0;
        const unsigned l = ef_low_width(list.size(), universe);
        return list.size() * l + ef_high_length(list.size(), universe, l);
    }
    case Codec::Interpolative:
        return list.empty() ? 0 : bic_bits(list, 0, universe - 1);
    }
    return 0;
}

std::uint64_t max_bits_per_element(Codec codec, std::uint64_t universe)
{
    const std::uint64_t u = std::max<std::uint64_t>(universe, 2);
    switch (codec) {
    case Codec::VarByte:
        return 8 * varbyte_bytes(u);
    case Codec::Gamma:
        return gamma_bits(u);
    case Codec::EliasFano:
        // A low part plus the one-bit terminator and one extra bucket bit.
        return static_cast<std::uint64_t>(std::bit_width(u)) + 2;
    case Codec::Interpolative:
        return static_cast<std::uint64_t>(std::bit_width(u - 1));
    }
    return 0;
}

std::uint64_t list_header_bits(Codec codec, std::size_t count, std::uint64_t universe)
{
    const bool needs_universe = codec == Codec::EliasFano || codec == Codec::Interpolative;
    return 8 * varbyte_bytes(count) + (needs_universe && count ? 8 * varbyte_bytes(universe) : 0);
}

double bits_per_edge(const BipartiteGraph& graph, const Permutation& perm, Codec codec, bool include_list_headers)
{
    if (perm.size() != graph.num_data())
        throw ValidationError("permutation size does not match the graph");
    if (graph.num_edges() == 0)
        return 0.0;
    const std::uint64_t total = tbb::parallel_reduce(
        tbb::blocked_range<std::size_t>(0, graph.num_queries(), 256), std::uint64_t{0},
        [&](const tbb::blocked_range<std::size_t>& r, std::uint64_t acc) {
            std::vector<std::uint32_t> ranks;
            for (std::size_t q = r.begin(); q != r.end(); ++q) {
                const auto data = graph.data_of(static_cast<VertexId>(q));
                ranks.resize(data.size());
                for (std::size_t i = 0; i < data.size(); ++i)
                    ranks[i] = perm.rank(data[i]);
                std::sort(ranks.begin(), ranks.end());
                const std::uint64_t universe = ranks.empty() ? 0 : std::uint64_t(ranks.back()) + 1;
                acc += encoded_bits(codec, ranks, universe);
                if (include_list_headers)
                    acc += list_header_bits(codec, ranks.size(), universe);
            }
            return acc;
        },
        [](std::uint64_t a, std::uint64_t b) { return a + b; });
    return static_cast<double>(total) / static_cast<double>(graph.num_edges());
}

} // namespace bisect_order
