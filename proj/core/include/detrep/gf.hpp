#pragma once

#include <cstdint>
#include <stdexcept>

namespace detrep {

// Arithmetic in GF(p) for a prime p < 2^31. Elements are uint32_t in [0, p).
struct PrimeField {
    uint32_t p = 32003;

    PrimeField() = default;
    explicit PrimeField(uint32_t prime);

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t)a * b % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;
    uint32_t reduce_int(long long v) const {
        long long r = v % (long long)p;
        if (r < 0) r += p;
        return (uint32_t)r;
    }

    bool operator==(const PrimeField&) const = default;
};

bool is_prime_u32(uint32_t n);

constexpr uint32_t kDefaultPrime = 32003;

} // namespace detrep
