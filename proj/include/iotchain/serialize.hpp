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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <iotchain/bytes.hpp>

namespace iotchain {

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical binary encoding: big-endian fixed-width integers, 32-bit
// length-prefixed variable byte strings. Every structure serialized for
// signing, hashing or export goes through these two classes so replicas
// agree bit-exactly.
class Writer {
  public:
    void put_u8(uint8_t v) { buf_.push_back(v); }

    void put_u32(uint32_t v) {
        for (int shift = 24; shift >= 0; shift -= 8) {
            buf_.push_back(static_cast<uint8_t>(v >> shift));
        }
    }

    void put_u64(uint64_t v) {
        for (int shift = 56; shift >= 0; shift -= 8) {
            buf_.push_back(static_cast<uint8_t>(v >> shift));
        }
    }

    void put_bool(bool v) { put_u8(v ? 1 : 0); }

    void put_raw(BytesView data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

    void put_sized(BytesView data) {
        put_u32(static_cast<uint32_t>(data.size()));
        put_raw(data);
    }

    void put_string(std::string_view s) {
        put_sized(BytesView{reinterpret_cast<const uint8_t*>(s.data()), s.size()});
    }

    void put_address(const Address& a) { put_raw(BytesView{a.bytes}); }
    void put_hash(const Hash32& h) { put_raw(BytesView{h.bytes}); }

    [[nodiscard]] const Bytes& bytes() const noexcept { return buf_; }
    Bytes take() noexcept { return std::move(buf_); }

  private:
    Bytes buf_;
};

class Reader {
  public:
    explicit Reader(BytesView data) : data_{data} {}

    uint8_t get_u8() { return *next(1); }

    uint32_t get_u32() {
        const uint8_t* p = next(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v = (v << 8) | p[i];
        }
        return v;
    }

    uint64_t get_u64() {
        const uint8_t* p = next(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v = (v << 8) | p[i];
        }
        return v;
    }

    bool get_bool() { return get_u8() != 0; }

    BytesView get_raw(size_t n) { return BytesView{next(n), n}; }

    Bytes get_sized() {
        const uint32_t n = get_u32();
        const BytesView v = get_raw(n);
        return Bytes{v.begin(), v.end()};
    }

    std::string get_string() {
        const uint32_t n = get_u32();
        const BytesView v = get_raw(n);
        return std::string{reinterpret_cast<const char*>(v.data()), v.size()};
    }

    Address get_address() {
        Address a;
        const BytesView v = get_raw(a.bytes.size());
        std::copy(v.begin(), v.end(), a.bytes.begin());
        return a;
    }

    Hash32 get_hash() {
        Hash32 h;
        const BytesView v = get_raw(h.bytes.size());
        std::copy(v.begin(), v.end(), h.bytes.begin());
        return h;
    }

    [[nodiscard]] size_t remaining() const noexcept { return data_.size() - pos_; }
    [[nodiscard]] bool done() const noexcept { return remaining() == 0; }

    void expect_done() const {
        if (!done()) {
            throw DecodeError("trailing bytes after decode");
        }
    }

  private:
    const uint8_t* next(size_t n) {
        if (remaining() < n) {
            throw DecodeError("unexpected end of input");
        }
        const uint8_t* p = data_.data() + pos_;
        pos_ += n;
        return p;
    }

    BytesView data_;
    size_t pos_{0};
};

}  // namespace iotchain
