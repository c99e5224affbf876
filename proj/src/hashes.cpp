#include "pepsi/hashes.hpp"

#include <openssl/sha.h>

#include <cstring>

#include "pepsi/counters.hpp"
#include "pepsi/error.hpp"

namespace pepsi {

namespace {
constexpr std::string_view kDstTag = "PEPSI-H2-v1";
constexpr std::string_view kDstKey = "PEPSI-H3-v1";
constexpr std::string_view kDstPad = "PEPSI-HP-v1";
constexpr std::string_view kDstFdh = "PEPSI-FDH-v1";

ByteView sv_bytes(std::string_view s) {
    return ByteView(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}
}  // namespace

Bytes sha256(ByteView msg) {
    Bytes out(32);
    SHA256(msg.data(), msg.size(), out.data());
    return out;
}

Bytes expand_message(ByteView dst, ByteView msg, size_t out_len) {
    if (dst.size() > 255) fail(Errc::invalid_argument, "expand_message: dst too long");
    if (out_len == 0 || out_len > 255 * 32) fail(Errc::invalid_argument, "expand_message: bad length");
    size_t ell = (out_len + 31) / 32;

    Bytes dst_prime(dst.begin(), dst.end());
    dst_prime.push_back(static_cast<uint8_t>(dst.size()));

    Bytes b0_in(64, 0);  // SHA-256 block-size zero pad
    append(b0_in, msg);
    append_u16be(b0_in, static_cast<uint16_t>(out_len));
    append_u8(b0_in, 0);
    append(b0_in, dst_prime);
    Bytes b0 = sha256(b0_in);

    Bytes out;
    out.reserve(ell * 32);
    Bytes bi = b0;
    for (size_t i = 1; i <= ell; ++i) {
        Bytes in;
        if (i == 1) {
            in = b0;
        } else {
            in.resize(32);
            for (size_t k = 0; k < 32; ++k) in[k] = b0[k] ^ bi[k];
        }
        append_u8(in, static_cast<uint8_t>(i));
        append(in, dst_prime);
        bi = sha256(in);
        append(out, bi);
    }
    out.resize(out_len);
    return out;
}

Bytes frame_inputs(ByteView dst, const std::vector<Bytes>& inputs) {
    Bytes framed;
    append_u64be(framed, dst.size());
    append(framed, dst);
    for (const Bytes& in : inputs) {
        append_u64be(framed, in.size());
        append(framed, in);
    }
    return framed;
}

Tag hash_tag(const std::vector<Bytes>& inputs, unsigned tag_bits) {
    if (tag_bits == 0 || tag_bits > 256 || tag_bits % 8 != 0)
        fail(Errc::invalid_argument, "hash_tag: unsupported tag width");
    counters::add_hashes(1);
    Bytes digest = sha256(frame_inputs(sv_bytes(kDstTag), inputs));
    Tag tag{};
    std::memcpy(tag.data(), digest.data(), tag_bits / 8);
    return tag;
}

SymmetricKey hash_key(const std::vector<Bytes>& inputs) {
    counters::add_hashes(1);
    Bytes digest = sha256(frame_inputs(sv_bytes(kDstKey), inputs));
    SymmetricKey key{};
    std::memcpy(key.data(), digest.data(), key.size());
    return key;
}

std::array<uint8_t, 32> pad_hash(const std::vector<Bytes>& inputs) {
    counters::add_hashes(1);
    Bytes digest = sha256(frame_inputs(sv_bytes(kDstPad), inputs));
    std::array<uint8_t, 32> out{};
    std::memcpy(out.data(), digest.data(), out.size());
    return out;
}

BigUint fdh_to_zn(ByteView label, const BigUint& n) {
    if (label.empty()) fail(Errc::invalid_argument, "empty identifier");
    if (n < 2) fail(Errc::invalid_argument, "fdh_to_zn: modulus must be >= 2");
    counters::add_hashes(1);
    size_t width = byte_width(n) + 16;  // 128 bits of slack keeps the bias negligible
    for (unsigned ctr = 0;; ++ctr) {
        if (ctr > 255) fail(Errc::crypto, "fdh_to_zn: no unit found");
        Bytes msg(label.begin(), label.end());
        append_u8(msg, static_cast<uint8_t>(ctr));
        BigUint v = from_be(expand_message(sv_bytes(kDstFdh), msg, width)) % n;
        if (v == 0) continue;
        BigUint g;
        mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        if (g == 1) return v;
    }
}

}  // namespace pepsi
