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
#include <vector>

#include "bisect_order/error.hpp"

namespace bisect_order {

/// Append-only bit sequence, most-significant bit first within each byte.
class BitWriter {
public:
    void put_bit(bool bit)
    {
        if ((size_ & 7) == 0)
            bytes_.push_back(0);
        if (bit)
            bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
        ++size_;
    }

    /// Writes the low `width` bits of `value`, high bit first.
    void put_bits(std::uint64_t value, unsigned width)
    {
        for (unsigned i = width; i-- > 0;)
            put_bit((value >> i) & 1u);
    }

    void put_unary_zeros(std::uint64_t count)
    {
        for (std::uint64_t i = 0; i < count; ++i)
            put_bit(false);
    }

    std::uint64_t size() const noexcept { return size_; }
    std::vector<std::uint8_t> take() && { return std::move(bytes_); }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t size_ = 0;
};

class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_length)
        : bytes_(bytes), size_(bit_length)
    {
    }

    bool get_bit()
    {
        if (pos_ >= size_)
            throw FormatError("bit stream exhausted");
        const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t get_bits(unsigned width)
    {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < width; ++i)
            v = (v << 1) | static_cast<std::uint64_t>(get_bit());
        return v;
    }

    std::uint64_t position() const noexcept { return pos_; }
    std::uint64_t remaining() const noexcept { return size_ - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t size_;
    std::uint64_t pos_ = 0;
};

} // namespace bisect_order
