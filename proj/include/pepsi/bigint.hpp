#pragma once

#include <gmpxx.h>

#include "pepsi/bytes.hpp"
#include "pepsi/rng.hpp"

namespace pepsi {

using BigUint = mpz_class;

/// base^exponent mod modulus; rejects modulus < 2.
BigUint mod_exp(const BigUint& base, const BigUint& exponent, const BigUint& modulus);

/// Multiplicative inverse; throws if gcd(a, modulus) != 1.
BigUint mod_inv(const BigUint& a, const BigUint& modulus);

/// Uniform value in [0, bound).
BigUint random_below(Rng& rng, const BigUint& bound);

/// Uniform unit of Z_n: value in [1, n) with gcd(value, n) = 1.
BigUint random_unit(Rng& rng, const BigUint& n);

bool probably_prime(const BigUint& n, int rounds = 32);

/// Fixed-width big-endian encoding; throws if the value does not fit.
Bytes to_fixed_be(const BigUint& v, size_t width);
BigUint from_be(ByteView bytes);

inline size_t byte_width(const BigUint& v) {
    return (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
}

}  // namespace pepsi
