#include "pepsi/rng.hpp"

#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cstring>

#include "pepsi/error.hpp"

namespace pepsi {

uint64_t Rng::next_u64() {
    uint8_t b[8];
    fill(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
    return v;
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) fail(Errc::invalid_argument, "below(0)");
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

void SystemRng::fill(uint8_t* out, size_t n) {
    if (n == 0) return;
    if (RAND_bytes(out, static_cast<int>(n)) != 1)
        fail(Errc::crypto, "system RNG failure");
}

Drbg::Drbg(uint64_t seed) {
    uint8_t s[16] = {'p', 'e', 'p', 's', 'i', '-', 'd', 'r'};
    for (int i = 0; i < 8; ++i) s[8 + i] = static_cast<uint8_t>(seed >> (56 - 8 * i));
    SHA256(s, sizeof(s), key_.data());
}

Drbg::Drbg(ByteView state) {
    if (state.size() != 40) fail(Errc::parse, "bad drbg state length");
    std::memcpy(key_.data(), state.data(), 32);
    for (int i = 0; i < 8; ++i) counter_ = (counter_ << 8) | state[32 + i];
}

Bytes Drbg::serialize() const {
    // Serialization is taken on a block boundary: buffered bytes are dropped,
    // replay resumes from the current counter.
    Bytes out(key_.begin(), key_.end());
    append_u64be(out, counter_);
    return out;
}

void Drbg::refill() {
    uint8_t in[40];
    std::memcpy(in, key_.data(), 32);
    for (int i = 0; i < 8; ++i) in[32 + i] = static_cast<uint8_t>(counter_ >> (56 - 8 * i));
    ++counter_;
    SHA256(in, sizeof(in), block_.data());
    avail_ = block_.size();
}

void Drbg::fill(uint8_t* out, size_t n) {
    while (n > 0) {
        if (avail_ == 0) refill();
        size_t take = std::min(n, avail_);
        std::memcpy(out, block_.data() + (block_.size() - avail_), take);
        avail_ -= take;
        out += take;
        n -= take;
    }
}

}  // namespace pepsi
