/*
   Copyright 2026 The iotchain Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iotchain {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

// 20-byte account identifier, derived from a public key digest.
struct Address {
    std::array<uint8_t, 20> bytes{};

    auto operator<=>(const Address&) const = default;

    static constexpr Address zero() noexcept { return Address{}; }
    [[nodiscard]] bool is_zero() const noexcept { return *this == zero(); }
};

// 32-byte digest (URI digests, state commitments, transaction ids).
struct Hash32 {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Hash32&) const = default;
};

inline std::string to_hex(BytesView data) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

inline std::string to_hex(const Address& a) { return to_hex(BytesView{a.bytes}); }
inline std::string to_hex(const Hash32& h) { return to_hex(BytesView{h.bytes}); }

inline int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

inline Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("odd-length hex string");
    }
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        const int hi = hex_nibble(hex[i]);
        const int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            throw std::invalid_argument("invalid hex digit");
        }
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

template <size_t N>
std::array<uint8_t, N> array_from_hex(std::string_view hex) {
    const Bytes raw = from_hex(hex);
    if (raw.size() != N) {
        throw std::invalid_argument("hex string has wrong length");
    }
    std::array<uint8_t, N> out{};
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

inline Address address_from_hex(std::string_view hex) { return Address{array_from_hex<20>(hex)}; }
inline Hash32 hash_from_hex(std::string_view hex) { return Hash32{array_from_hex<32>(hex)}; }

}  // namespace iotchain
