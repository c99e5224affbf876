#include "pepsi/bytes.hpp"

#include "pepsi/error.hpp"

namespace pepsi {

static const char* kHexDigits = "0123456789abcdef";

std::string hex_encode(ByteView b) {
    std::string out;
    out.reserve(b.size() * 2);
    for (uint8_t c : b) {
        out.push_back(kHexDigits[c >> 4]);
        out.push_back(kHexDigits[c & 0xf]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes hex_decode(std::string_view hex) {
    if (hex.size() % 2 != 0) fail(Errc::parse, "odd-length hex string");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = hex_nibble(hex[2 * i]);
        int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) fail(Errc::parse, "invalid hex digit");
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

uint8_t ByteReader::take_u8() {
    if (remaining() < 1) fail(Errc::parse, "truncated input");
    return data_[pos_++];
}

uint16_t ByteReader::take_u16be() {
    uint16_t v = take_u8();
    return static_cast<uint16_t>((v << 8) | take_u8());
}

uint32_t ByteReader::take_u32be() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | take_u8();
    return v;
}

uint64_t ByteReader::take_u64be() {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | take_u8();
    return v;
}

Bytes ByteReader::take(size_t n) {
    if (remaining() < n) fail(Errc::parse, "truncated input");
    Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
    pos_ += n;
    return out;
}

}  // namespace pepsi
