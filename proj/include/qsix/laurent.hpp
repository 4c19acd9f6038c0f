#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsix/integer.hpp"

namespace qsix {

// Sparse Laurent polynomial in one symbol over arbitrary-precision integers.
// Exponents may be negative. Canonical form: no stored zero coefficients,
// so equality is structural. Used with the symbol read as q throughout,
// and as z for the triple-product coefficients.
class Laurent {
public:
    using TermMap = std::map<long, Int>;

    Laurent() = default;
    Laurent(int c) { if (c != 0) terms_[0] = c; }
    Laurent(long c) { if (c != 0) terms_[0] = c; }
    explicit Laurent(const Int& c) { if (c != 0) terms_[0] = c; }

    static Laurent monomial(Int c, long e) {
        Laurent p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    static Laurent var() { return monomial(Int(1), 1); }

    bool is_zero() const { return terms_.empty(); }

    Int coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    long min_exp() const {
        if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }

    long max_exp() const {
        if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) sub_term(e, c);
        return *this;
    }

    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    Laurent& operator*=(const Int& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    // Multiply by the monomial c * q^e in place.
    Laurent& mul_monomial(const Int& c, long e) {
        if (c == 0) { terms_.clear(); return *this; }
        TermMap shifted;
        for (auto& [ex, co] : terms_) shifted.emplace(ex + e, co * c);
        terms_ = std::move(shifted);
        return *this;
    }

    // q -> q^e for nonzero integer e: every exponent j becomes j*e.
    Laurent substitute_power(long e) const {
        if (e == 0) throw std::invalid_argument("substitute_power: exponent must be nonzero");
        Laurent r;
        for (const auto& [ex, co] : terms_) r.terms_.emplace(ex * e, co);
        return r;
    }

    // Drop all terms with exponent > n (series truncation helper).
    Laurent truncated_above(long n) const {
        Laurent r;
        for (const auto& [e, c] : terms_) {
            if (e > n) break;
            r.terms_.emplace(e, c);
        }
        return r;
    }

    Int eval_at_one() const {
        Int s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // Exact division; throws if the quotient is not a Laurent polynomial
    // over the integers. Peels terms from the lowest exponent upward.
    Laurent divide_exact(const Laurent& den) const {
        if (den.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
        Laurent quot;
        Laurent rem = *this;
        const long den_lo = den.min_exp();
        const long den_hi = den.max_exp();
        const Int& den_lc = den.terms_.begin()->second;
        while (!rem.is_zero()) {
            const long lo = rem.min_exp();
            if (lo - den_lo + den_hi > rem.max_exp())
                throw std::domain_error("divide_exact: nonzero remainder");
            const Int& lc = rem.terms_.begin()->second;
            if (!mpz_divisible_p(lc.get_mpz_t(), den_lc.get_mpz_t()))
                throw std::domain_error("divide_exact: nonzero remainder");
            Int c = lc / den_lc;
            long e = lo - den_lo;
            quot.add_term(e, c);
            Laurent t = den;
            t.mul_monomial(c, e);
            rem -= t;
        }
        return quot;
    }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

private:
    void add_term(long e, const Int& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    void sub_term(long e, const Int& c) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline Laurent operator*(Laurent a, const Int& s) { a *= s; return a; }
inline Laurent operator*(const Int& s, Laurent a) { a *= s; return a; }

// c * q^e as a value.
inline Laurent q_monomial(long e, Int c = Int(1)) { return Laurent::monomial(std::move(c), e); }

}  // namespace qsix
