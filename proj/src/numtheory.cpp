#include "numtheory.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace paley {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::vector<PrimePower> factorize(uint64_t n) {
    if (n < 2) throw InvalidInput("factorize: n must be at least 2, got " + std::to_string(n));
    std::vector<PrimePower> out;
    auto strip = [&](uint64_t p) {
        if (n % p) return;
        uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (uint64_t d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

Modulus check_admissible(uint64_t n) {
    if (n < 2) throw InvalidInput("not admissible: n must be at least 2, got " + std::to_string(n));
    Modulus m;
    m.n = n;
    m.phi = 1;
    for (const auto& [p, alpha] : factorize(n)) {
        if (p == 2) {
            if (alpha > 1)
                throw InvalidInput("not admissible: 4 divides " + std::to_string(n));
            m.s = 1;
            // phi(2) = 1
        } else {
            if (p % 4 != 1)
                throw InvalidInput("not admissible: prime factor " + std::to_string(p) +
                                   " of " + std::to_string(n) + " is " +
                                   std::to_string(p % 4) + " (mod 4), need 1 (mod 4)");
            m.factors.push_back({p, alpha});
            uint64_t pe = p;
            for (uint32_t i = 1; i < alpha; ++i) pe *= p;
            m.phi *= pe / p * (p - 1);
        }
    }
    if (m.factors.empty())
        throw InvalidInput("not admissible: " + std::to_string(n) +
                           " has no odd prime factor");
    return m;
}

namespace {

// ax = 1 (mod m) for gcd(a, m) = 1
uint64_t inv_mod(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

} // namespace

uint64_t crt_solve(const std::vector<std::pair<uint64_t, uint64_t>>& congruences) {
    if (congruences.empty()) throw InvalidInput("crt_solve: empty system");
    uint64_t x = 0, mod = 1;
    for (const auto& [r, m] : congruences) {
        if (m == 0) throw InvalidInput("crt_solve: zero modulus");
        if (r >= m) throw InvalidInput("crt_solve: residue not reduced");
        uint64_t g = gcd_u64(mod, m);
        if (g != 1)
            throw InvalidInput("crt_solve: moduli share factor " + std::to_string(g));
        if (mod > UINT64_MAX / m)
            throw InvalidInput("crt_solve: modulus product overflows");
        // x' = x + mod * ((r - x) * mod^{-1} mod m)
        uint64_t delta = (r + m - x % m) % m;
        uint64_t t = mul_mod(delta, inv_mod(mod % m, m), m);
        x += mod * t;
        mod *= m;
    }
    return x;
}

TwoSquares two_squares(uint64_t p) {
    if (p % 4 != 1)
        throw InvalidInput("two_squares: " + std::to_string(p) + " is not 1 (mod 4)");
    for (uint64_t b = 1; b * b <= p; b += 2) {
        uint64_t a2 = p - b * b;
        auto a = static_cast<uint64_t>(std::sqrt(static_cast<double>(a2)));
        while (a * a > a2) --a;
        while ((a + 1) * (a + 1) <= a2) ++a;
        if (a * a == a2 && a % 2 == 0) return {p, a, b};
    }
    throw InvalidInput("two_squares: " + std::to_string(p) +
                       " has no representation (not a prime = 1 mod 4?)");
}

uint64_t primitive_root(uint64_t p, uint32_t alpha) {
    if (p < 3 || p % 2 == 0) throw InvalidInput("primitive_root: p must be an odd prime");
    if (alpha == 0) throw InvalidInput("primitive_root: alpha must be positive");
    uint64_t m = 1;
    for (uint32_t i = 0; i < alpha; ++i) {
        if (m > UINT64_MAX / p) throw InvalidInput("primitive_root: p^alpha overflows");
        m *= p;
    }
    const uint64_t phi = m / p * (p - 1);
    std::vector<uint64_t> prime_divs;
    for (const auto& f : factorize(phi)) prime_divs.push_back(f.p);
    for (uint64_t g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        bool full_order = true;
        for (uint64_t q : prime_divs) {
            if (pow_mod(g, phi / q, m) == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) return g;
    }
    throw InternalError("primitive_root: no generator found mod " + std::to_string(m));
}

Bitset squares_mod_prime(uint64_t p) {
    if (p % 4 != 1)
        throw InvalidInput("squares_mod_prime: " + std::to_string(p) + " is not 1 (mod 4)");
    Bitset r(p);
    for (uint64_t a = 1; a <= (p - 1) / 2; ++a) r.set(mul_mod(a, a, p));
    if (r.test(0) || r.count() != (p - 1) / 2)
        throw InvalidInput("squares_mod_prime: " + std::to_string(p) + " is not prime");
    return r;
}

Bitset squares_mod_prime_power(uint64_t p, uint32_t alpha) {
    if (alpha == 0) throw InvalidInput("squares_mod_prime_power: alpha must be positive");
    Bitset rp = squares_mod_prime(p);
    uint64_t m = p, reps = 1;
    for (uint32_t i = 1; i < alpha; ++i) {
        if (m > UINT64_MAX / p) throw InvalidInput("squares_mod_prime_power: p^alpha overflows");
        m *= p;
        reps *= p;
    }
    Bitset r(m);
    rp.for_each([&](uint64_t root) {
        for (uint64_t t = 0; t < reps; ++t) r.set(root + t * p);
    });
    if (r.count() != reps * ((p - 1) / 2))
        throw InternalError("squares_mod_prime_power: wrong cardinality for " +
                            std::to_string(p) + "^" + std::to_string(alpha));
    return r;
}

Bitset squares_mod_n(const Modulus& m) {
    std::vector<Bitset> rp;
    rp.reserve(m.k());
    for (const auto& f : m.factors) rp.push_back(squares_mod_prime(f.p));
    Bitset r(m.n);
    for (uint64_t x = 0; x < m.n; ++x) {
        if (m.s == 1 && x % 2 == 0) continue;
        bool in = true;
        for (size_t i = 0; i < m.factors.size() && in; ++i)
            in = rp[i].test(x % m.factors[i].p);
        if (in) r.set(x);
    }
    // |R_n| = phi(n) / 2^k
    if (r.count() != (m.phi >> m.k()))
        throw InternalError("squares_mod_n: |R_n| != phi/2^k for n = " + std::to_string(m.n));
    return r;
}

Bitset squares_bruteforce(uint64_t n) {
    if (n < 2) throw InvalidInput("squares_bruteforce: n must be at least 2");
    Bitset r(n);
    for (uint64_t a = 1; a < n; ++a)
        if (gcd_u64(a, n) == 1) r.set(mul_mod(a, a, n));
    return r;
}

} // namespace paley
