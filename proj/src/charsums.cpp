#include "charsums.hpp"

#include <string>

#include "errors.hpp"
#include "numtheory.hpp"

namespace paley {

namespace {

// Character tables are O(p^alpha) memory and the Jacobi sum loop is
// O(p^alpha) time; keep requests at desk scale.
constexpr uint64_t kMaxCharModulus = 100'000'000;

uint64_t checked_prime_power(uint64_t p, uint32_t alpha) {
    if (p % 4 != 1)
        throw InvalidInput("character: p = " + std::to_string(p) + " is not 1 (mod 4)");
    if (alpha == 0) throw InvalidInput("character: alpha must be positive");
    uint64_t m = 1;
    for (uint32_t i = 0; i < alpha; ++i) {
        if (m > kMaxCharModulus / p)
            throw InvalidInput("character: p^alpha exceeds supported bound " +
                               std::to_string(kMaxCharModulus));
        m *= p;
    }
    return m;
}

} // namespace

CharacterTable CharacterTable::build(uint64_t p, uint32_t alpha, int order) {
    return build_with_generator(p, alpha, order, primitive_root(p, alpha));
}

CharacterTable CharacterTable::build_with_generator(uint64_t p, uint32_t alpha, int order,
                                                    uint64_t g) {
    if (order != 2 && order != 4)
        throw InvalidInput("character: order must be 2 or 4");
    const uint64_t m = checked_prime_power(p, alpha);
    const uint64_t phi = m / p * (p - 1);
    // phi = p^(a-1)(p-1) with p = 1 (mod 4), so 4 | phi and both orders exist

    CharacterTable t;
    t.modulus_ = m;
    t.generator_ = g % m;
    t.order_ = order;
    t.exp_.assign(m, int8_t(-1));

    uint64_t x = 1;
    for (uint64_t e = 0; e < phi; ++e) {
        if (t.exp_[x] >= 0)
            throw InvalidInput("character: " + std::to_string(g) +
                               " does not generate the units mod " + std::to_string(m));
        t.exp_[x] = static_cast<int8_t>(e % order);
        x = mul_mod(x, t.generator_, m);
    }
    if (x != 1)
        throw InvalidInput("character: " + std::to_string(g) +
                           " does not generate the units mod " + std::to_string(m));
    return t;
}

CharacterTable CharacterTable::conjugate() const {
    CharacterTable t(*this);
    for (auto& e : t.exp_)
        if (e > 0) e = static_cast<int8_t>(order_ - e);
    return t;
}

GaussianInt jacobi_sum(const CharacterTable& psi, const CharacterTable& chi) {
    if (psi.order() != 4 || chi.order() != 2)
        throw InvalidInput("jacobi_sum: need a quartic psi and quadratic chi");
    if (psi.modulus() != chi.modulus())
        throw InvalidInput("jacobi_sum: character moduli differ");
    const uint64_t m = psi.modulus();
    // components bounded by the number of unit terms, far inside int64
    int64_t re = 0, im = 0;
    for (uint64_t x = 0; x < m; ++x) {
        const int e4 = psi.exponent(x);
        if (e4 < 0) continue;
        const int e2 = chi.exponent((m + 1 - x) % m);  // (1 - x) mod m
        if (e2 < 0) continue;
        switch ((e4 + 2 * e2) & 3) {
            case 0: ++re; break;
            case 1: ++im; break;
            case 2: --re; break;
            case 3: --im; break;
        }
    }
    return {re, im};
}

XyRelnReport verify_xyreln(uint64_t p, uint32_t alpha) {
    XyRelnReport r;
    r.p = p;
    r.alpha = alpha;
    const CharacterTable psi = CharacterTable::build(p, alpha, 4);
    const CharacterTable chi = CharacterTable::build(p, alpha, 2);
    r.j = jacobi_sum(psi, chi);
    r.x2_minus_y2 = r.j.re * r.j.re - r.j.im * r.j.im;
    r.norm = r.j.norm();

    const int64_t a = static_cast<int64_t>(two_squares(p).a);
    int64_t p_pow = 1;  // p^(2 alpha - 2)
    for (uint32_t i = 1; i < alpha; ++i) p_pow *= static_cast<int64_t>(p) * static_cast<int64_t>(p);
    r.rhs = p_pow * (static_cast<int64_t>(p) - 2 * a * a);
    r.norm_expected = p_pow * static_cast<int64_t>(p);
    r.ok = (r.x2_minus_y2 == r.rhs) && (r.norm == r.norm_expected);
    return r;
}

} // namespace paley
