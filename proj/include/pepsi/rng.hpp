#pragma once

#include <array>
#include <cstdint>

#include "pepsi/bytes.hpp"

namespace pepsi {

/// Source of randomness for every randomized protocol step. The harness
/// passes a seeded Drbg so whole scenario runs are reproducible; the CLI
/// defaults to the OS generator unless a seed is given.
class Rng {
public:
    virtual ~Rng() = default;
    virtual void fill(uint8_t* out, size_t n) = 0;

    Bytes bytes(size_t n) {
        Bytes b(n);
        if (n) fill(b.data(), n);
        return b;
    }
    uint64_t next_u64();
    /// Uniform value in [0, bound) via rejection sampling.
    uint64_t below(uint64_t bound);
};

class SystemRng final : public Rng {
public:
    void fill(uint8_t* out, size_t n) override;
};

/// Deterministic generator: SHA-256 over (key, block counter). Not intended
/// to compete with the OS generator; it exists so the same seed replays the
/// same transcript byte for byte.
class Drbg final : public Rng {
public:
    explicit Drbg(uint64_t seed);
    explicit Drbg(ByteView state);  // resume from serialized state

    void fill(uint8_t* out, size_t n) override;
    Bytes serialize() const;

private:
    void refill();

    std::array<uint8_t, 32> key_{};
    uint64_t counter_ = 0;
    std::array<uint8_t, 32> block_{};
    size_t avail_ = 0;
};

}  // namespace pepsi
