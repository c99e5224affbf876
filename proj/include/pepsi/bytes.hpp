#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pepsi {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(ByteView b) {
    return std::string(b.begin(), b.end());
}

inline void append(Bytes& out, ByteView b) {
    out.insert(out.end(), b.begin(), b.end());
}

inline void append_u8(Bytes& out, uint8_t v) { out.push_back(v); }

inline void append_u16be(Bytes& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

inline void append_u32be(Bytes& out, uint32_t v) {
    for (int i = 3; i >= 0; --i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

inline void append_u64be(Bytes& out, uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

std::string hex_encode(ByteView b);
Bytes hex_decode(std::string_view hex);

/// Sequential reader over a byte buffer; every take_* throws on underrun.
class ByteReader {
public:
    explicit ByteReader(ByteView data) : data_(data) {}

    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }

    uint8_t take_u8();
    uint16_t take_u16be();
    uint32_t take_u32be();
    uint64_t take_u64be();
    Bytes take(size_t n);

    template <size_t N>
    std::array<uint8_t, N> take_array() {
        Bytes b = take(N);
        std::array<uint8_t, N> out;
        std::memcpy(out.data(), b.data(), N);
        return out;
    }

private:
    ByteView data_;
    size_t pos_ = 0;
};

}  // namespace pepsi
