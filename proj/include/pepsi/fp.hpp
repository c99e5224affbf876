#pragma once

#include <gmp.h>

#include <array>
#include <cstddef>

#include "pepsi/bigint.hpp"
#include "pepsi/bytes.hpp"

namespace pepsi {

// Largest supported field: 1536-bit p for the default pairing preset.
inline constexpr size_t kMaxFpLimbs = 1536 / GMP_LIMB_BITS;

/// Field element in Montgomery form. Limb count and interpretation come from
/// the owning FpCtx; elements from different contexts must not be mixed.
struct Fe {
    std::array<mp_limb_t, kMaxFpLimbs> l{};
};

/// Fixed odd-prime field with Montgomery multiplication on raw mpn limbs.
/// All methods are const and thread-safe; the context is immutable.
class FpCtx {
public:
    explicit FpCtx(const BigUint& p);

    size_t limbs() const { return n_; }
    size_t nbytes() const { return nbytes_; }
    const BigUint& modulus() const { return p_; }

    Fe zero() const { return Fe{}; }
    const Fe& one() const { return one_; }

    Fe from_mpz(const BigUint& v) const;  // v reduced mod p first
    BigUint to_mpz(const Fe& a) const;
    Fe from_u64(uint64_t v) const;

    Bytes to_bytes(const Fe& a) const;     // fixed-width big-endian
    Fe from_bytes(ByteView b) const;       // requires value < p

    bool is_zero(const Fe& a) const;
    bool eq(const Fe& a, const Fe& b) const;

    void add(Fe& r, const Fe& a, const Fe& b) const;
    void sub(Fe& r, const Fe& a, const Fe& b) const;
    void neg(Fe& r, const Fe& a) const;
    void mul(Fe& r, const Fe& a, const Fe& b) const;
    void sqr(Fe& r, const Fe& a) const;
    void mul_u64(Fe& r, const Fe& a, uint64_t k) const;  // small-constant multiple

    Fe inv(const Fe& a) const;                  // throws on zero
    Fe pow(const Fe& a, const BigUint& e) const;

    /// Square root for p = 3 (mod 4); returns false if a is not a square.
    bool sqrt(Fe& r, const Fe& a) const;
    bool is_square(const Fe& a) const;

private:
    void reduce_once(mp_limb_t* t) const;  // conditional subtract of p
    void mont_mul(mp_limb_t* r, const mp_limb_t* a, const mp_limb_t* b) const;

    BigUint p_;
    size_t n_ = 0;
    size_t nbytes_ = 0;
    std::array<mp_limb_t, kMaxFpLimbs> pl_{};
    mp_limb_t n0inv_ = 0;  // -p^{-1} mod 2^64
    Fe r2_;                // R^2 mod p
    Fe one_;               // R mod p
    BigUint exp_sqrt_;     // (p+1)/4
};

}  // namespace pepsi
