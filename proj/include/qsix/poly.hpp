#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "qsix/gauss_int.hpp"
#include "qsix/integer.hpp"

namespace qsix {

// Dense univariate polynomial over an exact coefficient ring C.
// coeffs_[d] is the coefficient of x^d; trailing zeros are trimmed so the
// degree is always size-1 (zero polynomial has empty storage, degree -1).
template <class C>
class Poly {
public:
    Poly() = default;
    Poly(int c) { if (c != 0) coeffs_.push_back(C(c)); }
    explicit Poly(C c) {
        if (!(c == C(0))) coeffs_.push_back(std::move(c));
    }
    Poly(std::initializer_list<C> ascending) : coeffs_(ascending) { trim(); }

    static Poly var() { return monomial(C(1), 1); }

    static Poly monomial(C c, long d) {
        Poly p;
        if (!(c == C(0))) {
            p.coeffs_.assign(d + 1, C(0));
            p.coeffs_[d] = std::move(c);
        }
        return p;
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    C coeff(long d) const {
        if (d < 0 || d >= static_cast<long>(coeffs_.size())) return C(0);
        return coeffs_[d];
    }

    const C& leading() const {
        if (coeffs_.empty()) throw std::logic_error("leading of zero polynomial");
        return coeffs_.back();
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly& operator*=(const C& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    Poly derivative() const {
        Poly r;
        if (coeffs_.size() <= 1) return r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t d = 1; d < coeffs_.size(); ++d)
            r.coeffs_[d - 1] = coeffs_[d] * C(static_cast<int>(d));
        r.trim();
        return r;
    }

    // this(inner) by Horner.
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (long d = degree(); d >= 0; --d) {
            acc = acc * inner;
            acc += Poly(coeffs_[d]);
        }
        return acc;
    }

    // x -> x^k for k >= 1.
    Poly scale_exponents(long k) const {
        if (k < 1) throw std::invalid_argument("scale_exponents: k must be >= 1");
        Poly r;
        if (is_zero()) return r;
        r.coeffs_.assign(static_cast<std::size_t>(degree() * k + 1), C(0));
        for (std::size_t d = 0; d < coeffs_.size(); ++d) r.coeffs_[d * k] = coeffs_[d];
        r.trim();
        return r;
    }

    // Horner evaluation in any ring R that converts from C.
    template <class R>
    R eval(const R& x) const {
        R acc(0);
        for (long d = degree(); d >= 0; --d) {
            acc *= x;
            acc += R(coeffs_[d]);
        }
        return acc;
    }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
    RatPoly r;
    for (long d = 0; d <= p.degree(); ++d)
        r += RatPoly::monomial(Rational(p.coeff(d)), d);
    return r;
}

// Coefficient-wise reduction to nonnegative residues mod m > 0.
inline IntPoly mod_reduce(const IntPoly& p, const Int& m) {
    if (m <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    IntPoly r;
    for (long d = 0; d <= p.degree(); ++d)
        r += IntPoly::monomial(mod_nonneg(p.coeff(d), m), d);
    return r;
}

// Exact division of every coefficient by an integer; throws on remainder.
inline IntPoly divide_exact(const IntPoly& p, const Int& s) {
    if (s == 0) throw std::invalid_argument("divide_exact: division by zero");
    IntPoly r;
    for (long d = 0; d <= p.degree(); ++d) {
        const Int c = p.coeff(d);
        if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
            throw std::domain_error("divide_exact: coefficient not divisible");
        r += IntPoly::monomial(c / s, d);
    }
    return r;
}

// Basis change to powers of (x-1): p(x) = sum r_k (x-1)^k returned as a
// polynomial in u = x-1, i.e. p(u+1).
template <class C>
Poly<C> expand_about_one(const Poly<C>& p) {
    return p.compose(Poly<C>{C(1), C(1)});
}

}  // namespace qsix
