#include "detrep/gf.hpp"

namespace detrep {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t prime) : p(prime) {
    if (!is_prime_u32(prime)) throw std::invalid_argument("PrimeField: modulus is not prime");
    if (prime >= (1u << 31)) throw std::invalid_argument("PrimeField: modulus too large");
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p - 2);
}

} // namespace detrep
