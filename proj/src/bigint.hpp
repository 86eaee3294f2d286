#ifndef PALEY_BIGINT_HPP
#define PALEY_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace paley {

// Clique counts and formula values. Desk-scale values mostly fit in 64 bits,
// but the closed forms grow past that quickly, so one exact type is used
// throughout.
using BigInt = boost::multiprecision::cpp_int;

// Quotient num/den when the division is exact. Every division in the closed
// forms is provably exact; a remainder means the implementation is wrong.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw InternalError("inexact division: " + num.str() + " / " + den.str());
    return q;
}

} // namespace paley

#endif
