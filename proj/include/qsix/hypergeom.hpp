#pragma once

#include <stdexcept>

#include "qsix/integer.hpp"
#include "qsix/trunc_series.hpp"

namespace qsix {

// Truncated Gauss hypergeometric series F(a, b; c; z) = sum_k
// (a)_k (b)_k / ((c)_k k!) z^k. The upper parameters live in any exact ring
// C that embeds the integers (rationals, or polynomials in a formal
// parameter); the lower parameter stays rational so each term is an exact
// scalar division. Terminates exactly when a is a nonpositive integer.
template <class C>
TruncSeries<C> hypergeometric_2f1(const C& a, const C& b, const Rational& c, long order) {
    TruncSeries<C> f(order);
    C term(1);
    f.coeff(0) = term;
    for (long k = 0; k < order; ++k) {
        Rational denom = (c + Rational(k)) * Rational(k + 1);
        if (c + Rational(k) == 0)
            throw std::domain_error("hypergeometric_2f1: pole of (c)_k at k=" + std::to_string(k));
        term = term * (a + C(static_cast<int>(k))) * (b + C(static_cast<int>(k)));
        term /= denom;
        f.coeff(k + 1) = term;
    }
    return f;
}

}  // namespace qsix
