#pragma once

#include <cstdint>

#include "qcchar/common.hpp"

namespace qcchar {

/// Arithmetic context for the prime field GF(p).
///
/// Element values are plain uint32_t reduced into [0, p). The modulus is
/// restricted to 32 bits so products fit into uint64_t without overflow.
struct PrimeField {
    uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(uint32_t modulus) : p(modulus) {
        if (!is_prime(modulus))
            throw schema_error("field modulus " + std::to_string(modulus) + " is not prime");
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Multiplicative inverse by Fermat; a must be nonzero.
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
        return pow(a, p - 2);
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }
    bool operator!=(const PrimeField& o) const { return p != o.p; }
};

} // namespace qcchar
