#ifndef PALEY_CHARSUMS_HPP
#define PALEY_CHARSUMS_HPP

#include <cstdint>
#include <vector>

namespace paley {

// Exact element of Z[i]. Jacobi sums for a quartic and the quadratic
// character land here; no floating point anywhere.
struct GaussianInt {
    int64_t re = 0;
    int64_t im = 0;

    GaussianInt conj() const { return {re, -im}; }
    int64_t norm() const { return re * re + im * im; }
    bool operator==(const GaussianInt&) const = default;
};

inline GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
inline GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Dirichlet character mod p^alpha of order 2 or 4, stored as the exponent
// map x -> t mod order where x = g^t for the generator g. Non-units carry a
// sentinel and the character vanishes there. Values are powers of i (order 4)
// or of -1 (order 2).
class CharacterTable {
public:
    // Canonical character: g is the smallest primitive root, psi(g) = i
    // (order 4) or chi(g) = -1 (order 2).
    static CharacterTable build(uint64_t p, uint32_t alpha, int order);

    // Same, for an explicit generator (must generate the unit group).
    static CharacterTable build_with_generator(uint64_t p, uint32_t alpha, int order, uint64_t g);

    uint64_t modulus() const { return modulus_; }
    uint64_t generator() const { return generator_; }
    int order() const { return order_; }

    bool is_unit(uint64_t x) const { return exp_[x] >= 0; }

    // Exponent t mod order at x, or -1 for non-units.
    int exponent(uint64_t x) const { return exp_[x]; }

    // Order-2 value as an integer: +1, -1, or 0 at non-units.
    int sign_at(uint64_t x) const {
        int e = exp_[x];
        return e < 0 ? 0 : (e == 0 ? 1 : -1);
    }

    // The conjugate character (exponents negated mod order).
    CharacterTable conjugate() const;

private:
    uint64_t modulus_ = 0;
    uint64_t generator_ = 0;
    int order_ = 0;
    std::vector<int8_t> exp_;
};

// J(psi, chi) = sum over x in Z_{p^alpha} of psi(x) chi(1-x). Requires a
// quartic psi and quadratic chi sharing one modulus.
GaussianInt jacobi_sum(const CharacterTable& psi, const CharacterTable& chi);

// Both sides of J^2 + conj(J)^2 = 2(x^2 - y^2) = 2 p^(2a-2) (p - 2 a^2),
// plus the magnitude x^2 + y^2 = p^(2a-1).
struct XyRelnReport {
    uint64_t p = 0;
    uint32_t alpha = 0;
    GaussianInt j;             // x = j.re, y = j.im
    int64_t x2_minus_y2 = 0;
    int64_t rhs = 0;           // p^(2a-2) (p - 2 a^2)
    int64_t norm = 0;          // x^2 + y^2
    int64_t norm_expected = 0; // p^(2a-1)
    bool ok = false;           // both identities hold
};

XyRelnReport verify_xyreln(uint64_t p, uint32_t alpha);

} // namespace paley

#endif
