#include "pepsi/fp.hpp"

#include <cstring>

#include "pepsi/error.hpp"

namespace pepsi {

FpCtx::FpCtx(const BigUint& p) : p_(p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        fail(Errc::invalid_argument, "FpCtx: modulus must be an odd prime");
    n_ = mpz_size(p.get_mpz_t());
    if (n_ > kMaxFpLimbs) fail(Errc::invalid_argument, "FpCtx: modulus too large");
    nbytes_ = (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8;
    std::memcpy(pl_.data(), mpz_limbs_read(p.get_mpz_t()), n_ * sizeof(mp_limb_t));

    // n0inv = -p^{-1} mod 2^64 via Newton iteration on the low limb
    mp_limb_t inv = pl_[0];  // p odd: inv == p^{-1} mod 2 correct to 1 bit ... iterate
    for (int i = 0; i < 6; ++i) inv *= 2 - pl_[0] * inv;
    n0inv_ = static_cast<mp_limb_t>(-inv);

    BigUint R2 = (BigUint(1) << static_cast<unsigned>(2 * n_ * GMP_LIMB_BITS)) % p_;
    std::memcpy(r2_.l.data(), mpz_limbs_read(R2.get_mpz_t()), mpz_size(R2.get_mpz_t()) * sizeof(mp_limb_t));
    BigUint R1 = (BigUint(1) << static_cast<unsigned>(n_ * GMP_LIMB_BITS)) % p_;
    std::memcpy(one_.l.data(), mpz_limbs_read(R1.get_mpz_t()), mpz_size(R1.get_mpz_t()) * sizeof(mp_limb_t));

    exp_sqrt_ = (p_ + 1) / 4;
}

void FpCtx::reduce_once(mp_limb_t* t) const {
    if (mpn_cmp(t, pl_.data(), n_) >= 0) mpn_sub_n(t, t, pl_.data(), n_);
}

void FpCtx::mont_mul(mp_limb_t* r, const mp_limb_t* a, const mp_limb_t* b) const {
    mp_limb_t t[2 * kMaxFpLimbs + 1];
    mpn_mul_n(t, a, b, n_);
    t[2 * n_] = 0;
    for (size_t i = 0; i < n_; ++i) {
        mp_limb_t m = t[i] * n0inv_;
        mp_limb_t carry = mpn_addmul_1(t + i, pl_.data(), n_, m);
        mpn_add_1(t + i + n_, t + i + n_, n_ + 1 - i, carry);
    }
    // result in t[n .. 2n]; top limb is 0 or 1
    if (t[2 * n_] != 0 || mpn_cmp(t + n_, pl_.data(), n_) >= 0)
        mpn_sub_n(r, t + n_, pl_.data(), n_);
    else
        std::memcpy(r, t + n_, n_ * sizeof(mp_limb_t));
}

Fe FpCtx::from_mpz(const BigUint& v) const {
    BigUint red = v % p_;
    if (red < 0) red += p_;
    Fe tmp{};
    std::memcpy(tmp.l.data(), mpz_limbs_read(red.get_mpz_t()), mpz_size(red.get_mpz_t()) * sizeof(mp_limb_t));
    Fe out;
    mont_mul(out.l.data(), tmp.l.data(), r2_.l.data());
    return out;
}

BigUint FpCtx::to_mpz(const Fe& a) const {
    Fe tmp;
    std::array<mp_limb_t, kMaxFpLimbs> unit{};
    unit[0] = 1;
    mont_mul(tmp.l.data(), a.l.data(), unit.data());  // divide by R
    BigUint out;
    mpz_import(out.get_mpz_t(), n_, -1, sizeof(mp_limb_t), 0, 0, tmp.l.data());
    return out;
}

Fe FpCtx::from_u64(uint64_t v) const { return from_mpz(BigUint(static_cast<unsigned long>(v))); }

Bytes FpCtx::to_bytes(const Fe& a) const { return to_fixed_be(to_mpz(a), nbytes_); }

Fe FpCtx::from_bytes(ByteView b) const {
    if (b.size() != nbytes_) fail(Errc::parse, "field element: wrong length");
    BigUint v = from_be(b);
    if (v >= p_) fail(Errc::parse, "field element: not reduced");
    return from_mpz(v);
}

bool FpCtx::is_zero(const Fe& a) const {
    for (size_t i = 0; i < n_; ++i)
        if (a.l[i]) return false;
    return true;
}

bool FpCtx::eq(const Fe& a, const Fe& b) const {
    return std::memcmp(a.l.data(), b.l.data(), n_ * sizeof(mp_limb_t)) == 0;
}

void FpCtx::add(Fe& r, const Fe& a, const Fe& b) const {
    mp_limb_t carry = mpn_add_n(r.l.data(), a.l.data(), b.l.data(), n_);
    if (carry || mpn_cmp(r.l.data(), pl_.data(), n_) >= 0)
        mpn_sub_n(r.l.data(), r.l.data(), pl_.data(), n_);
}

void FpCtx::sub(Fe& r, const Fe& a, const Fe& b) const {
    mp_limb_t borrow = mpn_sub_n(r.l.data(), a.l.data(), b.l.data(), n_);
    if (borrow) mpn_add_n(r.l.data(), r.l.data(), pl_.data(), n_);
}

void FpCtx::neg(Fe& r, const Fe& a) const {
    if (is_zero(a)) {
        r = a;
        return;
    }
    mpn_sub_n(r.l.data(), pl_.data(), a.l.data(), n_);
}

void FpCtx::mul(Fe& r, const Fe& a, const Fe& b) const { mont_mul(r.l.data(), a.l.data(), b.l.data()); }

void FpCtx::sqr(Fe& r, const Fe& a) const { mont_mul(r.l.data(), a.l.data(), a.l.data()); }

void FpCtx::mul_u64(Fe& r, const Fe& a, uint64_t k) const {
    // k is tiny (2, 3, 4, 8); repeated addition beats a Montgomery trip
    Fe acc{};
    Fe base = a;
    while (k) {
        if (k & 1) add(acc, acc, base);
        k >>= 1;
        if (k) add(base, base, base);
    }
    r = acc;
}

Fe FpCtx::inv(const Fe& a) const {
    if (is_zero(a)) fail(Errc::crypto, "Fp inverse of zero");
    return from_mpz(mod_inv(to_mpz(a), p_));
}

Fe FpCtx::pow(const Fe& a, const BigUint& e) const {
    if (e < 0) fail(Errc::invalid_argument, "Fp pow: negative exponent");
    if (e == 0) return one_;
    // 4-bit left-to-right window
    Fe table[16];
    table[0] = one_;
    table[1] = a;
    for (int i = 2; i < 16; ++i) mul(table[i], table[i - 1], a);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    size_t top = (bits + 3) / 4;
    Fe acc = one_;
    bool started = false;
    for (size_t w = top; w-- > 0;) {
        if (started)
            for (int k = 0; k < 4; ++k) sqr(acc, acc);
        unsigned idx = 0;
        for (int k = 3; k >= 0; --k) {
            size_t bit = w * 4 + static_cast<size_t>(k);
            idx = (idx << 1) | (bit < bits ? mpz_tstbit(e.get_mpz_t(), bit) : 0u);
        }
        if (idx) {
            if (started)
                mul(acc, acc, table[idx]);
            else {
                acc = table[idx];
                started = true;
            }
        } else if (!started) {
            continue;
        }
    }
    return acc;
}

bool FpCtx::sqrt(Fe& r, const Fe& a) const {
    Fe cand = pow(a, exp_sqrt_);
    Fe check;
    sqr(check, cand);
    if (!eq(check, a)) return false;
    r = cand;
    return true;
}

bool FpCtx::is_square(const Fe& a) const {
    Fe tmp;
    return sqrt(tmp, a);
}

}  // namespace pepsi
