#ifndef PALEY_FORMULAS_HPP
#define PALEY_FORMULAS_HPP

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "charsums.hpp"
#include "numtheory.hpp"

namespace paley {

// Number of triangles: (1 / (3 * 2^(3k+1))) * prod p^(3a-2) (p-1) (p-5).
// Even n has no cliques of order > 2; the formula returns 0 there.
BigInt k3_formula(const Modulus& m);

// Number of K4s: (1 / (3 * 8^(2k+1))) * prod p^(4a-3) (p-1) ((p-9)^2 - 4 a_p^2)
// with p = a_p^2 + b_p^2, a_p even. Zero for even n.
BigInt k4_formula(const Modulus& m);

// K4 count for n = p^alpha from the Jacobi sum J = x + iy:
// p^(2a-1) (p-1) [ p^(2a-2) ((p-9)^2 - 2p) + J^2 + conj(J)^2 ] / 1536.
BigInt k4_jacobi_formula(uint64_t p, uint32_t alpha, const GaussianInt& j);

// K4(G_n) = 0 iff some p_i lies in {5, 13, 17}.
bool k4_is_zero(const Modulus& m);

// What the closed forms pin down about the clique number of G_n (odd n):
// 2 when 5 | n; 3 when 13 or 17 divides n and 5 does not; otherwise only
// "at least 4" is known.
enum class CliqueNumberClass { exactly_2, exactly_3, at_least_4 };
CliqueNumberClass clique_number_class(const Modulus& m);
const char* to_string(CliqueNumberClass c);

// Per-prime data feeding the K4 closed form.
struct FormulaInputs {
    uint64_t p = 0;
    uint32_t alpha = 0;
    uint64_t a2 = 0;
    uint64_t b2 = 0;
};
std::vector<FormulaInputs> k4_formula_inputs(const Modulus& m);

} // namespace paley

#endif
