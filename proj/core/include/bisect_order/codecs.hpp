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
#include <span>
#include <string_view>
#include <vector>

#include "bisect_order/graph.hpp"
#include "bisect_order/permutation.hpp"

namespace bisect_order {

// Bitstream layouts. Bits are written most-significant first within a byte.
//
// varbyte  First element, then each gap, as 7-bit groups low group first;
//          the top bit of a byte is set when another byte follows.
// gamma    First element + 1, then each gap, as Elias gamma: floor(log2 x)
//          zero bits followed by x in floor(log2 x) + 1 bits.
// ef       Elias-Fano with l = floor(log2(universe / k)) (0 when k >= universe):
//          k low parts of l bits, then a high bitvector of
//          k + ((universe - 1) >> l) + 1 bits with bit (x_i >> l) + i set.
// bic      Binary interpolative: the middle element is coded within its
//          feasible interval with a centered minimal binary code, then the
//          left half, then the right half. A value whose interval holds a
//          single candidate costs zero bits.
//
// Element count and universe are carried out of band.

enum class Codec { VarByte, Gamma, EliasFano, Interpolative };

std::string_view codec_name(Codec c);
/// Accepts "varbyte", "gamma", "ef", "bic". Throws PreconditionError.
Codec parse_codec(std::string_view name);
std::vector<Codec> all_codecs();

struct EncodedList {
    Codec codec = Codec::Gamma;
    std::uint64_t bit_length = 0;
    std::vector<std::uint8_t> payload;
    std::size_t count = 0;
    std::uint64_t universe = 0;
};

// All encoders require a strictly increasing list and throw PreconditionError
// otherwise. `universe` must exceed the largest element.
EncodedList encode_gap_varbyte(std::span<const std::uint32_t> list);
EncodedList encode_gap_gamma(std::span<const std::uint32_t> list);
EncodedList encode_elias_fano(std::span<const std::uint32_t> list, std::uint64_t universe);
EncodedList encode_interpolative(std::span<const std::uint32_t> list, std::uint64_t universe);

/// `universe` is ignored by the gap codecs.
EncodedList encode(Codec codec, std::span<const std::uint32_t> list, std::uint64_t universe);
std::vector<std::uint32_t> decode(const EncodedList& encoded);

/// Size of encode(codec, list, universe) without materializing the payload.
std::uint64_t encoded_bits(Codec codec, std::span<const std::uint32_t> list, std::uint64_t universe);

/// Sum of 2*floor(log2 g) + 1 over the gamma-coded values.
std::uint64_t gamma_closed_form_bits(std::span<const std::uint32_t> list);

/// Largest number of bits a single element can cost under `codec`.
std::uint64_t max_bits_per_element(Codec codec, std::uint64_t universe);

/// Bits of per-list metadata added when headers are included: the count as
/// varbyte, plus the universe for ef and bic.
std::uint64_t list_header_bits(Codec codec, std::size_t count, std::uint64_t universe);

/// Encodes every query's neighbor ranks under `perm` and returns total bits
/// over the number of edges. Each list is coded with universe = its largest
/// rank + 1, which travels with the list metadata.
double bits_per_edge(const BipartiteGraph& graph, const Permutation& perm, Codec codec,
                     bool include_list_headers = false);

} // namespace bisect_order
