#pragma once

#include <stdexcept>
#include <vector>

#include "qsix/integer.hpp"
#include "qsix/laurent.hpp"

namespace qsix {

// Truncated formal power series in one variable over an exact coefficient
// ring C. The truncation order is part of the value: arithmetic on two
// series truncates to the minimum of the two orders and records it, so an
// equality check can never silently claim agreement beyond what both
// operands actually know.
template <class C>
class TruncSeries {
public:
    explicit TruncSeries(long order) : coeffs_(order + 1, C(0)) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    }

    static TruncSeries constant(C c, long order) {
        TruncSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    static TruncSeries monomial(C c, long d, long order) {
        TruncSeries s(order);
        if (d <= order) s.coeffs_[d] = std::move(c);
        return s;
    }

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }

    const C& coeff(long d) const {
        if (d < 0 || d > order()) throw std::out_of_range("TruncSeries::coeff");
        return coeffs_[d];
    }

    C& coeff(long d) {
        if (d < 0 || d > order()) throw std::out_of_range("TruncSeries::coeff");
        return coeffs_[d];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!(c == C(0))) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (long d = 0; d <= r.order(); ++d) r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (long d = 0; d <= r.order(); ++d) r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(order());
        for (long d = 0; d <= order(); ++d) r.coeffs_[d] = -coeffs_[d];
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { *this = *this + o; return *this; }
    TruncSeries& operator-=(const TruncSeries& o) { *this = *this - o; return *this; }

    // Cauchy product, truncated at min(order(), o.order()).
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (long i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i] == C(0)) continue;
            for (long j = 0; i + j <= r.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    TruncSeries& operator*=(const TruncSeries& o) { *this = *this * o; return *this; }

    TruncSeries& scale(const C& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    TruncSeries scaled(const C& s) const {
        TruncSeries r = *this;
        r.scale(s);
        return r;
    }

    // Multiply by x^k. The result legitimately knows k more coefficients.
    TruncSeries shifted_up(long k) const {
        TruncSeries r(order() + k);
        for (long d = 0; d <= order(); ++d) r.coeffs_[d + k] = coeffs_[d];
        return r;
    }

    // Restrict to a lower (or equal) order.
    TruncSeries truncated(long new_order) const {
        if (new_order > order())
            throw std::invalid_argument("TruncSeries::truncated: cannot extend order");
        TruncSeries r(new_order);
        for (long d = 0; d <= new_order; ++d) r.coeffs_[d] = coeffs_[d];
        return r;
    }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

private:
    std::vector<C> coeffs_;
};

// First index (up to min order) where two series disagree, or -1.
template <class C>
long first_mismatch(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    const long n = std::min(a.order(), b.order());
    for (long d = 0; d <= n; ++d)
        if (!(a.coeff(d) == b.coeff(d))) return d;
    return -1;
}

// Composition outer(inner) with inner(0) = 0, by Horner over series.
template <class C>
TruncSeries<C> series_compose(const TruncSeries<C>& outer, const TruncSeries<C>& inner) {
    if (!(inner.coeff(0) == C(0)))
        throw std::invalid_argument("series_compose: inner series must have zero constant term");
    const long n = std::min(outer.order(), inner.order());
    TruncSeries<C> acc(n);
    for (long d = outer.order(); d >= 0; --d) {
        acc = acc * inner;
        acc.coeff(0) += outer.coeff(d);
    }
    return acc;
}

// Reciprocal of a series with unit constant term.
template <class C>
TruncSeries<C> series_reciprocal(const TruncSeries<C>& s) {
    if (!(s.coeff(0) == C(1)))
        throw std::invalid_argument("series_reciprocal: constant term must be 1");
    TruncSeries<C> r(s.order());
    r.coeff(0) = C(1);
    for (long d = 1; d <= s.order(); ++d) {
        C acc(0);
        for (long k = 1; k <= d; ++k) acc += s.coeff(k) * r.coeff(d - k);
        r.coeff(d) = -acc;
    }
    return r;
}

// x -> q^j x on a series with Laurent coefficients: degree d picks up q^{j d}.
inline TruncSeries<Laurent> scale_variable(const TruncSeries<Laurent>& s, long j) {
    if (j == 0) return s;
    TruncSeries<Laurent> r(s.order());
    for (long d = 0; d <= s.order(); ++d) {
        Laurent c = s.coeff(d);
        c.mul_monomial(Int(1), j * d);
        r.coeff(d) = std::move(c);
    }
    return r;
}

// (x;q)_m = (1-x)(1-qx)...(1-q^{m-1}x) as a series (exact when order >= m).
inline TruncSeries<Laurent> pochhammer_x(long m, long order) {
    if (m < 0) throw std::invalid_argument("pochhammer_x: negative length");
    TruncSeries<Laurent> r = TruncSeries<Laurent>::constant(Laurent(1), order);
    for (long i = 0; i < m; ++i) {
        TruncSeries<Laurent> f(order);
        f.coeff(0) = Laurent(1);
        if (order >= 1) f.coeff(1) = q_monomial(i, Int(-1));
        r *= f;
    }
    return r;
}

// 1/(1 -. y)^{l+1} = 1/((1-y)(1-qy)...(1-q^l y)) as a series in y.
inline TruncSeries<Laurent> series_reciprocal_pochhammer(long l, long order) {
    if (l < 0) throw std::invalid_argument("series_reciprocal_pochhammer: negative l");
    // 1/(1 - q^i y) = sum_d q^{i d} y^d, multiplied out factor by factor.
    TruncSeries<Laurent> r = TruncSeries<Laurent>::constant(Laurent(1), order);
    for (long i = 0; i <= l; ++i) {
        TruncSeries<Laurent> g(order);
        for (long d = 0; d <= order; ++d) g.coeff(d) = q_monomial(i * d);
        r *= g;
    }
    return r;
}

// Substitute x = q^e (e >= 1) into a series with Laurent coefficients,
// producing a Laurent polynomial truncated above q^max_q. Sound as long as
// e*(order+1) > max_q, i.e. the dropped tail cannot reach back.
inline Laurent substitute_x_power_of_q(const TruncSeries<Laurent>& s, long e, long max_q) {
    if (e < 1) throw std::invalid_argument("substitute_x_power_of_q: exponent must be >= 1");
    if (e * (s.order() + 1) <= max_q)
        throw std::invalid_argument("substitute_x_power_of_q: series order too small for requested q-order");
    Laurent acc;
    for (long d = 0; d <= s.order(); ++d) {
        Laurent c = s.coeff(d);
        if (c.is_zero()) continue;
        c.mul_monomial(Int(1), e * d);
        acc += c;
    }
    return acc.truncated_above(max_q);
}

}  // namespace qsix
