#pragma once

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "pepsi/bigint.hpp"
#include "pepsi/bytes.hpp"
#include "pepsi/fp.hpp"
#include "pepsi/rng.hpp"

namespace pepsi {

/// A fixed pairing group preset: the supersingular curve y^2 = x^3 + x over
/// F_p with p = c*r - 1, p = 3 (mod 4). G is the order-r subgroup of E(F_p);
/// the pairing maps G x G into the order-r subgroup of F_{p^2}* via the
/// distortion map (x, y) -> (-x, iy), which is what makes it symmetric.
///
/// Presets are compiled-in constants; setup operations draw fresh exponents,
/// never fresh curves (matching standard fixed-curve practice).
class GroupCtx {
public:
    const std::string& name() const { return name_; }
    uint8_t id() const { return id_; }
    const FpCtx& fp() const { return fp_; }
    const BigUint& order() const { return order_; }
    const BigUint& cofactor() const { return cofactor_; }
    size_t scalar_bytes() const { return scalar_bytes_; }
    size_t g1_bytes() const { return 1 + fp_.nbytes(); }
    size_t gt_bytes() const { return 2 * fp_.nbytes(); }

    /// "pairing1536": 1536-bit p, 256-bit r (default, ~128-bit level).
    /// "pairing512": 512-bit p, 160-bit r (the sizes benchmarked in the
    /// literature this follows; kept for benchmarks and bulk tests).
    static const GroupCtx& preset(std::string_view name);
    static const GroupCtx& by_id(uint8_t id);
    static const GroupCtx& default_preset();
    static const GroupCtx& paper_preset();

private:
    friend struct GroupCtxBuilder;
    GroupCtx(std::string name, uint8_t id, const BigUint& p, const BigUint& r, const BigUint& gx,
             const BigUint& gy);

    std::string name_;
    uint8_t id_;
    FpCtx fp_;
    BigUint order_;
    BigUint cofactor_;
    size_t scalar_bytes_;

public:
    // generator coordinates (Montgomery form); internal use by group ops
    Fe gen_x_, gen_y_;
};

/// Exponent in [1, r-1].
class Scalar {
public:
    static Scalar random(const GroupCtx& g, Rng& rng);
    static Scalar from_mpz(const GroupCtx& g, const BigUint& v);  // reduces mod r, rejects 0

    const BigUint& value() const { return v_; }
    const GroupCtx& group() const { return *g_; }

    Scalar mul(const Scalar& o) const;  // product mod r
    Bytes serialize() const;
    static Scalar deserialize(const GroupCtx& g, ByteView b);

    bool operator==(const Scalar& o) const { return v_ == o.v_; }

private:
    Scalar(const GroupCtx& g, BigUint v) : g_(&g), v_(std::move(v)) {}
    const GroupCtx* g_;
    BigUint v_;
};

/// Element of the order-r curve subgroup, written multiplicatively to match
/// the protocol algebra (mul = group op, pow = scalar multiple).
class G1 {
public:
    static G1 generator(const GroupCtx& g);
    static G1 identity(const GroupCtx& g);
    static G1 random(const GroupCtx& g, Rng& rng);  // generator^uniform

    const GroupCtx& group() const { return *g_; }
    bool is_identity() const { return inf_; }

    G1 mul(const G1& o) const;      // counted as one group mult
    G1 inverse() const;             // free (y negation)
    G1 pow(const BigUint& e) const; // counted as one exponentiation
    G1 pow(const Scalar& s) const { return pow(s.value()); }

    /// The three shared-exponent powers a blind request needs, computed in
    /// one fused primitive call (counted as a single exponentiation event).
    static std::array<G1, 3> pow_shared(const std::array<G1, 3>& bases, const BigUint& e);

    Bytes serialize() const;  // compressed: tag byte || x
    /// Rejects off-curve and out-of-subgroup encodings here, never later.
    static G1 deserialize(const GroupCtx& g, ByteView b);

    bool operator==(const G1& o) const;

private:
    friend class PairingEngine;
    friend G1 hash_to_g1(const GroupCtx&, ByteView);
    G1(const GroupCtx& g, const Fe& x, const Fe& y, bool inf) : g_(&g), x_(x), y_(y), inf_(inf) {}

    const GroupCtx* g_;
    Fe x_, y_;
    bool inf_;
};

/// Element of the order-r subgroup of F_{p^2}*; only ever obtained from
/// pairings, powers and products thereof.
class Gt {
public:
    static Gt one(const GroupCtx& g);

    const GroupCtx& group() const { return *g_; }
    bool is_one() const;

    Gt mul(const Gt& o) const;       // counted
    Gt pow(const BigUint& e) const;  // counted; e >= 0 (0 gives the identity)
    Gt pow(const Scalar& s) const { return pow(s.value()); }
    Gt inverse() const;  // conjugate (elements are norm-1)

    Bytes serialize() const;  // fixed-width big-endian (re || im)
    static Gt deserialize(const GroupCtx& g, ByteView b, bool check_subgroup = true);

    bool operator==(const Gt& o) const;

private:
    friend class PairingEngine;
    Gt(const GroupCtx& g, const Fe& re, const Fe& im) : g_(&g), re_(re), im_(im) {}

    const GroupCtx* g_;
    Fe re_, im_;
};

/// Symmetric bilinear map; counted as one pairing evaluation.
Gt pairing(const G1& a, const G1& b);

/// Product of pairings with a shared final exponentiation; counted as
/// pairs.size() pairing evaluations.
Gt pairing_product(const std::vector<std::pair<G1, G1>>& pairs);

/// Deterministic hash onto the subgroup (try-and-increment x candidates from
/// an expandable hash, then cofactor clearing). Counted as one hash event.
/// Empty labels are rejected.
G1 hash_to_g1(const GroupCtx& g, ByteView label);

}  // namespace pepsi
