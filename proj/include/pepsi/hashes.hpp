#pragma once

#include <array>

#include "pepsi/bigint.hpp"
#include "pepsi/bytes.hpp"

namespace pepsi {

/// Broker-visible matching token (lambda2 = 256 bits).
using Tag = std::array<uint8_t, 32>;
inline constexpr size_t kTagBytes = 32;

/// AES-256 key material produced by the key-derivation hash.
using SymmetricKey = std::array<uint8_t, 32>;

Bytes sha256(ByteView msg);

/// SHA-256 based expandable hash (the xmd construction); dst <= 255 bytes,
/// out_len <= 255 * 32.
Bytes expand_message(ByteView dst, ByteView msg, size_t out_len);

/// Unambiguous multi-field framing: 8-byte big-endian length before each
/// field, domain tag framed as field zero.
Bytes frame_inputs(ByteView dst, const std::vector<Bytes>& inputs);

/// H2: ordered byte-string sequence -> tag. tag_bits below 256 (test use
/// only) keeps the leading tag_bits/8 bytes and zeroes the rest.
Tag hash_tag(const std::vector<Bytes>& inputs, unsigned tag_bits = 256);

/// H3: same framing as hash_tag under an independent domain tag.
SymmetricKey hash_key(const std::vector<Bytes>& inputs);

/// H': 256-bit message pad for the IBE scheme.
std::array<uint8_t, 32> pad_hash(const std::vector<Bytes>& inputs);

/// H1 for the RSA instantiation: full-domain hash onto the units of Z_N
/// (expand, reduce, reject non-units).
BigUint fdh_to_zn(ByteView label, const BigUint& n);

}  // namespace pepsi
