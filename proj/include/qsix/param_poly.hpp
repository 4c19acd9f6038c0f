#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "qsix/integer.hpp"

namespace qsix {

// Polynomial in two formal parameters (written a and b, read alpha and
// beta) over exact rationals. Sparse exponent map, canonical form with no
// stored zero terms. Supports the parameter substitutions needed for the
// interpolated Chebyshev series: shifts a -> a+s, evaluation a -> rational,
// the sign flip a -> -a and the diagonal a -> a*b.
class ParamPoly {
public:
    using Exp = std::pair<int, int>;  // (a-exponent, b-exponent)
    using TermMap = std::map<Exp, Rational>;

    ParamPoly() = default;
    ParamPoly(int c) { if (c != 0) terms_[{0, 0}] = Rational(c); }
    explicit ParamPoly(const Rational& c) { if (c != 0) terms_[{0, 0}] = c; }
    explicit ParamPoly(const Int& c) { if (c != 0) terms_[{0, 0}] = Rational(c); }

    static ParamPoly alpha() { return monomial(Rational(1), 1, 0); }
    static ParamPoly beta() { return monomial(Rational(1), 0, 1); }

    static ParamPoly monomial(Rational c, int aexp, int bexp) {
        ParamPoly p;
        if (c != 0) p.terms_[{aexp, bexp}] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(int aexp, int bexp) const {
        auto it = terms_.find({aexp, bexp});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int alpha_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    ParamPoly operator-() const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { x += y; return x; }
    friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { x -= y; return x; }

    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
        ParamPoly r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                r.add_term({ex.first + ey.first, ex.second + ey.second}, cx * cy);
        return r;
    }

    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }

    ParamPoly& operator*=(const Rational& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    ParamPoly& operator/=(const Rational& s) {
        if (s == 0) throw std::invalid_argument("ParamPoly: division by zero scalar");
        for (auto& [e, c] : terms_) c /= s;
        return *this;
    }

    // a -> a + s, integer shift.
    ParamPoly shift_alpha(long s) const {
        if (s == 0) return *this;
        ParamPoly r;
        for (const auto& [e, c] : terms_) {
            // (a+s)^j = sum_i C(j,i) s^{j-i} a^i
            Int spow(1);
            for (int i = e.first; i >= 0; --i) {
                Rational term = c * Rational(binomial(e.first, i) * spow);
                r.add_term({i, e.second}, term);
                spow *= s;
            }
        }
        return r;
    }

    // a -> r for a rational constant; the result involves b only.
    ParamPoly eval_alpha(const Rational& r) const {
        ParamPoly out;
        for (const auto& [e, c] : terms_)
            out.add_term({0, e.second}, c * rat_pow(r, e.first));
        return out;
    }

    // a -> -a.
    ParamPoly negate_alpha() const {
        ParamPoly out;
        for (const auto& [e, c] : terms_)
            out.add_term(e, (e.first % 2 != 0) ? Rational(-c) : c);
        return out;
    }

    // a -> a*b (each a^j picks up b^j).
    ParamPoly alpha_to_alphabeta() const {
        ParamPoly out;
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(Exp{e.first, e.second + e.first}, c);
        return out;
    }

    // Rename a to b. Only meaningful when the polynomial involves a alone.
    ParamPoly alpha_to_beta() const {
        ParamPoly out;
        for (const auto& [e, c] : terms_) {
            if (e.second != 0)
                throw std::logic_error("alpha_to_beta: polynomial already involves b");
            out.terms_.emplace(Exp{0, e.first}, c);
        }
        return out;
    }

    // Exact division by (a - r); throws if the remainder is nonzero.
    // Synthetic division in a, the b-part rides along in the coefficients.
    ParamPoly divide_by_alpha_minus(const Rational& r) const {
        if (is_zero()) return ParamPoly();
        std::map<int, ParamPoly> by_alpha;  // a-exponent -> polynomial in b
        int deg = 0;
        for (const auto& [e, c] : terms_) {
            by_alpha[e.first] += monomial(c, 0, e.second);
            deg = std::max(deg, e.first);
        }
        ParamPoly quotient;
        ParamPoly carry;  // running B_j during synthetic division
        for (int j = deg; j >= 1; --j) {
            auto it = by_alpha.find(j);
            ParamPoly bj = carry;
            if (it != by_alpha.end()) bj += it->second;
            ParamPoly shifted;
            for (const auto& [e, c] : bj.terms_)
                shifted.add_term({j - 1, e.second}, c);
            quotient += shifted;
            bj *= r;
            carry = std::move(bj);
        }
        auto it0 = by_alpha.find(0);
        ParamPoly rem = carry;
        if (it0 != by_alpha.end()) rem += it0->second;
        if (!rem.is_zero())
            throw std::domain_error("divide_by_alpha_minus: nonzero remainder");
        return quotient;
    }

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

private:
    void add_term(const Exp& e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline ParamPoly operator*(ParamPoly p, const Rational& s) { p *= s; return p; }
inline ParamPoly operator*(const Rational& s, ParamPoly p) { p *= s; return p; }

}  // namespace qsix
