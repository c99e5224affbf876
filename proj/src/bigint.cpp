#include "pepsi/bigint.hpp"

#include "pepsi/error.hpp"

namespace pepsi {

BigUint mod_exp(const BigUint& base, const BigUint& exponent, const BigUint& modulus) {
    if (modulus < 2) fail(Errc::invalid_argument, "mod_exp: modulus must be >= 2");
    BigUint out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

BigUint mod_inv(const BigUint& a, const BigUint& modulus) {
    BigUint out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
        fail(Errc::crypto, "mod_inv: element not invertible");
    return out;
}

BigUint random_below(Rng& rng, const BigUint& bound) {
    if (bound <= 0) fail(Errc::invalid_argument, "random_below: bound must be positive");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t nbytes = (bits + 7) / 8;
    for (;;) {
        Bytes raw = rng.bytes(nbytes);
        // mask off excess top bits to keep rejection rate < 1/2
        unsigned excess = static_cast<unsigned>(nbytes * 8 - bits);
        if (excess) raw[0] &= static_cast<uint8_t>(0xff >> excess);
        BigUint v = from_be(raw);
        if (v < bound) return v;
    }
}

BigUint random_unit(Rng& rng, const BigUint& n) {
    for (;;) {
        BigUint v = random_below(rng, n);
        if (v == 0) continue;
        BigUint g;
        mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        if (g == 1) return v;
    }
}

bool probably_prime(const BigUint& n, int rounds) {
    return mpz_probab_prime_p(n.get_mpz_t(), rounds) != 0;
}

Bytes to_fixed_be(const BigUint& v, size_t width) {
    if (v < 0) fail(Errc::invalid_argument, "to_fixed_be: negative value");
    size_t w = (v == 0) ? 0 : byte_width(v);
    if (w > width) fail(Errc::invalid_argument, "to_fixed_be: value too wide");
    Bytes out(width, 0);
    if (w) {
        size_t count = 0;
        mpz_export(out.data() + (width - w), &count, 1, 1, 1, 0, v.get_mpz_t());
    }
    return out;
}

BigUint from_be(ByteView bytes) {
    BigUint out;
    if (!bytes.empty())
        mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return out;
}

}  // namespace pepsi
