#pragma once

#include <string>
#include <vector>

#include "qsix/laurent.hpp"
#include "qsix/param_poly.hpp"
#include "qsix/poly.hpp"
#include "qsix/trunc_series.hpp"

namespace qsix {

namespace detail {

// Joins (negative?, body) pieces with " + " / " - ", sign-normalized.
inline std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) {
            if (pieces[i].first) out += "-";
        } else {
            out += pieces[i].first ? " - " : " + ";
        }
        out += pieces[i].second;
    }
    return out;
}

inline std::string power_token(const std::string& var, long e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace detail

// Sparse ascending rendering: 1 - q - q^2 + q^5, 2*q^6, q^-1 + 1, ...
inline std::string render(const Laurent& p, const std::string& var = "q") {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        std::string body;
        if (e == 0) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = detail::power_token(var, e);
        } else {
            body = mag.get_str() + "*" + detail::power_token(var, e);
        }
        pieces.emplace_back(neg, std::move(body));
    }
    return detail::join_signed(pieces);
}

// Classical descending rendering for integer polynomials: 16x^5 - 20x^3 + 5x.
inline std::string render(const IntPoly& p, const std::string& var = "x") {
    std::vector<std::pair<bool, std::string>> pieces;
    for (long d = p.degree(); d >= 0; --d) {
        Int c = p.coeff(d);
        if (c == 0) continue;
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        std::string body;
        if (d == 0) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = detail::power_token(var, d);
        } else {
            body = mag.get_str() + detail::power_token(var, d);
        }
        pieces.emplace_back(neg, std::move(body));
    }
    return detail::join_signed(pieces);
}

// Ascending rendering over the parameters a, b with rational coefficients.
inline std::string render(const ParamPoly& p) {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string vars;
        if (e.first > 0) vars = detail::power_token("a", e.first);
        if (e.second > 0) {
            if (!vars.empty()) vars += "*";
            vars += detail::power_token("b", e.second);
        }
        std::string body;
        if (vars.empty()) body = to_display(mag);
        else if (mag == 1) body = vars;
        else body = to_display(mag) + "*" + vars;
        pieces.emplace_back(neg, std::move(body));
    }
    return detail::join_signed(pieces);
}

// Series in x with Laurent coefficients, every degree shown:
// 1 + x + 0*x^2 - q*x^3 - q^2*x^4 + ... (multi-term coefficients in parens).
inline std::string render_series(const TruncSeries<Laurent>& s, const std::string& var = "x",
                                 const std::string& coeff_var = "q") {
    std::vector<std::pair<bool, std::string>> pieces;
    for (long d = 0; d <= s.order(); ++d) {
        const Laurent& c = s.coeff(d);
        std::string xpart = d == 0 ? "" : detail::power_token(var, d);
        if (c.is_zero()) {
            pieces.emplace_back(false, d == 0 ? "0" : "0*" + xpart);
            continue;
        }
        if (c.term_count() == 1) {
            const auto& [e, co] = *c.terms().begin();
            bool neg = co < 0;
            Int mag = neg ? Int(-co) : co;
            std::string cp;
            if (e == 0) cp = mag.get_str();
            else if (mag == 1) cp = detail::power_token(coeff_var, e);
            else cp = mag.get_str() + "*" + detail::power_token(coeff_var, e);
            std::string body;
            if (d == 0) body = cp;
            else if (cp == "1") body = xpart;
            else body = cp + "*" + xpart;
            pieces.emplace_back(neg, std::move(body));
        } else {
            std::string body = "(" + render(c, coeff_var) + ")";
            if (d > 0) body += "*" + xpart;
            pieces.emplace_back(false, std::move(body));
        }
    }
    return detail::join_signed(pieces);
}

// Sparse ascending rendering of an integer-coefficient series (in q).
inline std::string render_series(const TruncSeries<Int>& s, const std::string& var = "q") {
    std::vector<std::pair<bool, std::string>> pieces;
    for (long d = 0; d <= s.order(); ++d) {
        const Int& c = s.coeff(d);
        if (c == 0) continue;
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        std::string body;
        if (d == 0) body = mag.get_str();
        else if (mag == 1) body = detail::power_token(var, d);
        else body = mag.get_str() + "*" + detail::power_token(var, d);
        pieces.emplace_back(neg, std::move(body));
    }
    return detail::join_signed(pieces);
}

inline std::string to_display(const Laurent& p) { return render(p); }
inline std::string to_display(const ParamPoly& p) { return render(p); }
inline std::string to_display(const IntPoly& p) { return render(p); }

}  // namespace qsix
