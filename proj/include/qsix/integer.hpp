#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qsix {

// Arbitrary-precision integers and rationals. GMP's canonical form for
// mpq_class (positive denominator, reduced fraction) is exactly the
// invariant we need, so these are aliases rather than wrappers.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r(1);
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    if (invert) {
        if (r == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        r = Rational(1) / r;
    }
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// (2k+1)!! = 1 * 3 * 5 * ... * (2k+1)
inline Int odd_double_factorial(long k) {
    if (k < 0) throw std::invalid_argument("odd_double_factorial: negative argument");
    Int r(1);
    for (long i = 1; i <= 2 * k + 1; i += 2) r *= i;
    return r;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Nonnegative residue of a mod m, m > 0.
inline Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::string to_display(const Int& v) { return v.get_str(); }

inline std::string to_display(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace qsix
