#include "formulas.hpp"

#include <string>

#include "errors.hpp"

namespace paley {

namespace {

BigInt big_pow(uint64_t base, uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace

BigInt k3_formula(const Modulus& m) {
    if (!m.odd()) return 0;
    BigInt numerator = 1;
    for (const auto& [p, alpha] : m.factors)
        numerator *= big_pow(p, 3 * uint64_t(alpha) - 2) * (p - 1) * (p - 5);
    const BigInt denominator = BigInt(3) << (3 * m.k() + 1);
    return exact_div(numerator, denominator);
}

BigInt k4_formula(const Modulus& m) {
    if (!m.odd()) return 0;
    BigInt numerator = 1;
    for (const auto& [p, alpha] : m.factors) {
        const uint64_t a = two_squares(p).a;
        const BigInt pm9 = BigInt(static_cast<int64_t>(p)) - 9;  // negative for p = 5
        const BigInt bracket = pm9 * pm9 - BigInt(4) * a * a;
        numerator *= big_pow(p, 4 * uint64_t(alpha) - 3) * (p - 1) * bracket;
    }
    const BigInt denominator = BigInt(3) << (3 * (2 * m.k() + 1));  // 3 * 8^(2k+1)
    BigInt value = exact_div(numerator, denominator);
    if (value < 0)
        throw InternalError("k4_formula: negative count for n = " + std::to_string(m.n));
    return value;
}

BigInt k4_jacobi_formula(uint64_t p, uint32_t alpha, const GaussianInt& j) {
    if (p % 4 != 1)
        throw InvalidInput("k4_jacobi_formula: p must be 1 (mod 4)");
    if (alpha == 0)
        throw InvalidInput("k4_jacobi_formula: alpha must be positive");
    // J^2 + conj(J)^2 = 2 (x^2 - y^2), exact in integers
    const BigInt squares_term = 2 * (BigInt(j.re) * j.re - BigInt(j.im) * j.im);
    const BigInt pm9 = BigInt(static_cast<int64_t>(p)) - 9;
    const BigInt bracket = big_pow(p, 2 * uint64_t(alpha) - 2) * (pm9 * pm9 - 2 * BigInt(p)) + squares_term;
    const BigInt numerator = big_pow(p, 2 * uint64_t(alpha) - 1) * (p - 1) * bracket;
    BigInt value = exact_div(numerator, 1536);
    if (value < 0)
        throw InternalError("k4_jacobi_formula: negative count for p = " + std::to_string(p) +
                            ", alpha = " + std::to_string(alpha));
    return value;
}

bool k4_is_zero(const Modulus& m) {
    if (!m.odd())
        throw InvalidInput("k4_is_zero requires odd n");
    for (const auto& f : m.factors)
        if (f.p == 5 || f.p == 13 || f.p == 17) return true;
    return false;
}

CliqueNumberClass clique_number_class(const Modulus& m) {
    if (!m.odd())
        throw InvalidInput("clique_number_class requires odd n");
    bool has_13_or_17 = false;
    for (const auto& f : m.factors) {
        if (f.p == 5) return CliqueNumberClass::exactly_2;
        if (f.p == 13 || f.p == 17) has_13_or_17 = true;
    }
    return has_13_or_17 ? CliqueNumberClass::exactly_3 : CliqueNumberClass::at_least_4;
}

const char* to_string(CliqueNumberClass c) {
    switch (c) {
        case CliqueNumberClass::exactly_2: return "exactly_2";
        case CliqueNumberClass::exactly_3: return "exactly_3";
        case CliqueNumberClass::at_least_4: return "at_least_4";
    }
    return "?";
}

std::vector<FormulaInputs> k4_formula_inputs(const Modulus& m) {
    std::vector<FormulaInputs> out;
    out.reserve(m.k());
    for (const auto& [p, alpha] : m.factors) {
        const TwoSquares ts = two_squares(p);
        out.push_back({p, alpha, ts.a * ts.a, ts.b * ts.b});
    }
    return out;
}

} // namespace paley
