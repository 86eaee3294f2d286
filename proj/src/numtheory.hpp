#ifndef PALEY_NUMTHEORY_HPP
#define PALEY_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace paley {

struct PrimePower {
    uint64_t p = 0;
    uint32_t alpha = 0;
    bool operator==(const PrimePower&) const = default;
};

// Validated modulus n = 2^s * prod p_i^alpha_i with s <= 1 and every odd
// prime p_i = 1 (mod 4). At least one odd prime is required.
struct Modulus {
    uint64_t n = 0;
    int s = 0;                        // exponent of 2, 0 or 1
    std::vector<PrimePower> factors;  // odd primes, ascending
    uint64_t phi = 0;

    size_t k() const { return factors.size(); }
    bool odd() const { return s == 0; }
};

// Decomposition p = a^2 + b^2 with a even, b odd, both nonnegative.
// a^2 and b^2 are unique for a prime p = 1 (mod 4).
struct TwoSquares {
    uint64_t p = 0;
    uint64_t a = 0;
    uint64_t b = 0;
};

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);
uint64_t gcd_u64(uint64_t a, uint64_t b);

// Deterministic trial division. Primes ascending; throws InvalidInput for n < 2.
std::vector<PrimePower> factorize(uint64_t n);

// Validates admissibility; the error message names the offending factor.
Modulus check_admissible(uint64_t n);

// Unique z in [0, prod m_i) with z = r_i (mod m_i). Moduli must be pairwise
// coprime and residues reduced.
uint64_t crt_solve(const std::vector<std::pair<uint64_t, uint64_t>>& congruences);

TwoSquares two_squares(uint64_t p);

// Smallest positive generator of the (cyclic) unit group mod p^alpha, p odd.
uint64_t primitive_root(uint64_t p, uint32_t alpha);

// R_p: nonzero quadratic residues mod a prime p = 1 (mod 4).
Bitset squares_mod_prime(uint64_t p);

// R_{p^alpha} built as the union of progressions r + t*p over r in R_p,
// 0 <= t < p^{alpha-1}.
Bitset squares_mod_prime_power(uint64_t p, uint32_t alpha);

// R_n for an admissible modulus: x is a square unit iff x is a unit and
// x mod p_i lands in R_{p_i} for every i.
Bitset squares_mod_n(const Modulus& m);

// {a^2 mod n : gcd(a, n) = 1} by direct squaring. Independent of the
// structured constructions above; used to validate them.
Bitset squares_bruteforce(uint64_t n);

} // namespace paley

#endif
