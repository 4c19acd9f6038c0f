#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsix/gauss_int.hpp"
#include "qsix/hypergeom.hpp"
#include "qsix/param_poly.hpp"
#include "qsix/poly.hpp"
#include "qsix/render.hpp"
#include "qsix/report.hpp"
#include "qsix/trunc_series.hpp"

namespace qsix {

// ---------------------------------------------------------------------------
// Exact integer Chebyshev polynomials
// ---------------------------------------------------------------------------

// T_0..T_n by the three-term recurrence T_{k+2} = 2x T_{k+1} - T_k.
inline std::vector<IntPoly> cheb_T_table(long n_max) {
    std::vector<IntPoly> t;
    t.reserve(n_max + 1);
    t.push_back(IntPoly(1));
    if (n_max >= 1) t.push_back(IntPoly::var());
    const IntPoly two_x = IntPoly::monomial(Int(2), 1);
    for (long k = 2; k <= n_max; ++k) t.push_back(two_x * t[k - 1] - t[k - 2]);
    return t;
}

// U_0..U_n with U_0 = 1, U_1 = 2x and the same recurrence.
inline std::vector<IntPoly> cheb_U_table(long n_max) {
    std::vector<IntPoly> u;
    u.reserve(n_max + 1);
    u.push_back(IntPoly(1));
    if (n_max >= 1) u.push_back(IntPoly::monomial(Int(2), 1));
    const IntPoly two_x = IntPoly::monomial(Int(2), 1);
    for (long k = 2; k <= n_max; ++k) u.push_back(two_x * u[k - 1] - u[k - 2]);
    return u;
}

inline IntPoly cheb_T(long n) {
    if (n < 0) throw std::invalid_argument("cheb_T: negative index");
    return cheb_T_table(n).back();
}

inline IntPoly cheb_U(long n) {
    if (n < 0) throw std::invalid_argument("cheb_U: negative index");
    return cheb_U_table(n).back();
}

// T_n = sum_k C(n, 2k) x^{n-2k} (x^2 - 1)^k.
inline IntPoly cheb_T_binomial_form(long n) {
    const IntPoly x2m1{Int(-1), Int(0), Int(1)};
    IntPoly acc;
    IntPoly pw(1);
    for (long k = 0; 2 * k <= n; ++k) {
        if (k > 0) pw *= x2m1;
        acc += IntPoly::monomial(binomial(n, 2 * k), n - 2 * k) * pw;
    }
    return acc;
}

// T_n = (n/2) sum_k (-1)^k (n-k-1)!/(k!(n-2k)!) (2x)^{n-2k}, n >= 1.
// Assembled over the rationals; integrality of the result is asserted.
inline IntPoly cheb_T_factorial_form(long n) {
    if (n < 1) throw std::invalid_argument("cheb_T_factorial_form: index must be >= 1");
    RatPoly acc;
    for (long k = 0; 2 * k <= n; ++k) {
        Rational c = make_rational(Int(n) * factorial(n - k - 1),
                                   Int(2) * factorial(k) * factorial(n - 2 * k));
        c *= Rational(int_pow(Int(2), n - 2 * k));
        if (k % 2 != 0) c = -c;
        acc += RatPoly::monomial(c, n - 2 * k);
    }
    IntPoly out;
    for (long d = 0; d <= acc.degree(); ++d) {
        Rational c = acc.coeff(d);
        if (c.get_den() != 1)
            throw std::domain_error("cheb_T_factorial_form: non-integer coefficient");
        out += IntPoly::monomial(c.get_num(), d);
    }
    return out;
}

// U_n = sum_k (-1)^k C(n-k, k) (2x)^{n-2k}.
inline IntPoly cheb_U_binomial_form(long n) {
    IntPoly acc;
    for (long k = 0; 2 * k <= n; ++k) {
        Int c = binomial(n - k, k) * int_pow(Int(2), n - 2 * k);
        if (k % 2 != 0) c = -c;
        acc += IntPoly::monomial(c, n - 2 * k);
    }
    return acc;
}

// Pell-type sequence gamma_{n+2} = 2 gamma_{n+1} + gamma_n, 0, 1, 2, 5, 12, ...
inline std::vector<Int> pell_gamma(long n_max) {
    std::vector<Int> g{Int(0), Int(1)};
    for (long n = 2; n <= n_max; ++n) g.push_back(2 * g[n - 1] + g[n - 2]);
    if (n_max == 0) g.resize(1);
    return g;
}

// ---------------------------------------------------------------------------
// Formal interpolation T_alpha about x = 1
// ---------------------------------------------------------------------------

using AlphaSeries = TruncSeries<ParamPoly>;

// c_{a|0} = 1, c_{a|k+1} = (a^2 - k^2)/((k+1)(2k+1)) c_{a|k}.
inline AlphaSeries t_alpha(long order) {
    AlphaSeries s(order);
    ParamPoly c(1);
    s.coeff(0) = c;
    const ParamPoly a2 = ParamPoly::alpha() * ParamPoly::alpha();
    for (long k = 0; k < order; ++k) {
        ParamPoly factor = a2 - ParamPoly(Rational(k * k));
        c = c * factor;
        c /= Rational((k + 1) * (2 * k + 1));
        s.coeff(k + 1) = c;
    }
    return s;
}

// Product closed form c_{a|k+1} = prod_{i<=k} (a^2 - i^2) / ((k+1)!(2k+1)!!).
inline AlphaSeries t_alpha_product_form(long order) {
    AlphaSeries s(order);
    s.coeff(0) = ParamPoly(1);
    const ParamPoly a2 = ParamPoly::alpha() * ParamPoly::alpha();
    ParamPoly prod(1);
    for (long k = 0; k < order; ++k) {
        prod = prod * (a2 - ParamPoly(Rational(k * k)));
        ParamPoly c = prod;
        c /= Rational(factorial(k + 1) * odd_double_factorial(k));
        s.coeff(k + 1) = c;
    }
    return s;
}

// T_alpha with a rational parameter substituted (terminates iff alpha is an
// integer of magnitude <= order).
inline TruncSeries<Rational> t_alpha_rational(const Rational& alpha, long order) {
    TruncSeries<Rational> s(order);
    Rational c(1);
    s.coeff(0) = c;
    const Rational a2 = alpha * alpha;
    for (long k = 0; k < order; ++k) {
        c *= (a2 - Rational(k * k));
        c /= Rational((k + 1) * (2 * k + 1));
        s.coeff(k + 1) = c;
    }
    return s;
}

// Substitute a -> a + s into every coefficient.
inline AlphaSeries shift_alpha(const AlphaSeries& t, long s) {
    AlphaSeries out(t.order());
    for (long k = 0; k <= t.order(); ++k) out.coeff(k) = t.coeff(k).shift_alpha(s);
    return out;
}

// d/du of a series in u.
template <class C>
TruncSeries<C> series_derivative(const TruncSeries<C>& s) {
    if (s.order() == 0) return TruncSeries<C>(0);
    TruncSeries<C> d(s.order() - 1);
    for (long k = 1; k <= s.order(); ++k) d.coeff(k - 1) = s.coeff(k) * C(static_cast<int>(k));
    return d;
}

// U_alpha under the convention consistent with the integer case,
// U_alpha = T'_{alpha+1} / (alpha + 1). The division by (alpha + 1) must be
// exact in the parameter ring; a failure signals a wrong convention.
inline AlphaSeries u_alpha(long order, bool shifted_convention = true) {
    AlphaSeries t = t_alpha(order + 1);
    if (shifted_convention) t = shift_alpha(t, 1);
    AlphaSeries d = series_derivative(t);
    AlphaSeries u(order);
    for (long k = 0; k <= order; ++k)
        u.coeff(k) = d.coeff(k).divide_by_alpha_minus(Rational(-1));
    return u;
}

// Which derivative convention yields a polynomial parameter ring: the
// shifted one always divides exactly; the unshifted variant is tried and
// its failure recorded.
struct DerivativeConventionOutcome {
    bool shifted_valid = false;
    bool unshifted_valid = false;
    std::string note;
};

inline DerivativeConventionOutcome resolve_derivative_convention(long order) {
    DerivativeConventionOutcome out;
    try {
        u_alpha(order, true);
        out.shifted_valid = true;
    } catch (const std::domain_error&) {
        out.shifted_valid = false;
    }
    try {
        u_alpha(order, false);
        out.unshifted_valid = true;
    } catch (const std::domain_error&) {
        out.unshifted_valid = false;
    }
    if (out.shifted_valid && !out.unshifted_valid)
        out.note = "selected U_a = T'_{a+1}/(a+1); the unshifted variant T'_a/(a+1) "
                   "is not divisible by (a+1) at degree 0";
    else if (out.shifted_valid && out.unshifted_valid)
        out.note = "both conventions divide exactly; shifted one selected";
    else
        out.note = "no convention yields a polynomial parameter ring";
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

// Structural facts of the recurrence family: initial polynomials, degrees,
// leading coefficients, and the 3-antiperiodic value patterns at x = 1/2.
inline VerificationReport check_recur_610(long n_max) {
    VerificationReport rep;
    n_max = std::max<long>(n_max, 1);
    rep.order = n_max;
    auto t = cheb_T_table(n_max);
    auto u = cheb_U_table(n_max);
    if (t[0] != IntPoly(1) || t[1] != IntPoly::var() || u[0] != IntPoly(1) ||
        u[1] != IntPoly::monomial(Int(2), 1)) {
        rep.fail_at(0, "initial polynomials", "T0=1, T1=x, U0=1, U1=2x");
        return rep;
    }
    for (long n = 0; n <= n_max; ++n) {
        if (t[n].degree() != n || u[n].degree() != n) {
            rep.fail_at(n, "degree " + std::to_string(t[n].degree()), std::to_string(n));
            return rep;
        }
        Int lead_t = n == 0 ? Int(1) : int_pow(Int(2), n - 1);
        if (t[n].leading() != lead_t || u[n].leading() != int_pow(Int(2), n)) {
            rep.fail_at(n, "leading coefficients", "2^{n-1} and 2^n");
            return rep;
        }
    }
    // Values at 1/2 are 3-antiperiodic; the U family reproduces the
    // sequence 1, 1, 0, -1, -1, 0 exactly.
    const Rational half = make_rational(1, 2);
    static const int upat[6] = {1, 1, 0, -1, -1, 0};
    const Rational tpat[6] = {Rational(1), half, -half, Rational(-1), -half, half};
    for (long n = 0; n <= n_max; ++n) {
        Rational tv = t[n].eval<Rational>(half);
        Rational uv = u[n].eval<Rational>(half);
        if (tv != tpat[n % 6] || uv != Rational(upat[n % 6])) {
            rep.fail_at(n, to_display(tv) + "; " + to_display(uv),
                        to_display(tpat[n % 6]) + "; " + std::to_string(upat[n % 6]));
            return rep;
        }
    }
    rep.note("U_n(1/2) runs through 1, 1, 0, -1, -1, 0; T_n(1/2) is 3-antiperiodic");
    return rep;
}

namespace detail {

struct TableErratum {
    char family;
    long n;
    long degree;
    long printed;
    long computed;
};

// Reference table of printed coefficients for T_0..T_9 and U_0..U_9,
// including the two entries known to be wrong in print. The audit passes
// exactly when the mismatches against the recurrence are these two.
inline const std::vector<std::vector<long>>& printed_T_table() {
    static const std::vector<std::vector<long>> t = {
        {1},
        {0, 1},
        {-1, 0, 2},
        {0, -3, 0, 4},
        {1, 0, -8, 0, 8},
        {0, 5, 0, -20, 0, 16},
        {-1, 0, 18, 0, -48, 0, 32},
        {0, -7, 0, 56, 0, -112, 0, 64},
        {1, 0, -32, 0, 160, 0, -256, 0, 128},
        {0, 9, 0, -120, 0, 232, 0, -576, 0, 256},  // x^5 entry misprinted
    };
    return t;
}

inline const std::vector<std::vector<long>>& printed_U_table() {
    static const std::vector<std::vector<long>> u = {
        {1},
        {0, 2},
        {-1, 0, 4},
        {0, -4, 0, 8},
        {1, 0, -12, 0, 16},
        {0, 6, 0, -32, 0, 32},
        {-1, 0, 24, 0, -80, 0, 64},
        {0, -8, 0, 80, 0, -192, 0, 128},
        {1, 0, -40, 0, 240, 0, -448, 0, 256},
        {0, 10, 0, -106, 0, 672, 0, -1024, 0, 512},  // x^3 entry misprinted
    };
    return u;
}

inline const std::vector<TableErratum>& known_table_errata() {
    static const std::vector<TableErratum> e = {
        {'T', 9, 5, 232, 432},
        {'U', 9, 3, -106, -160},
    };
    return e;
}

}  // namespace detail

// Audit of the printed reference table: the recurrence is ground truth and
// the mismatch set must be exactly the known misprinted entries.
inline VerificationReport check_table_64(long /*order*/) {
    VerificationReport rep;
    rep.order = 9;
    auto t = cheb_T_table(9);
    auto u = cheb_U_table(9);
    std::vector<detail::TableErratum> found;
    auto audit = [&](char family, const std::vector<IntPoly>& comp,
                     const std::vector<std::vector<long>>& printed) {
        for (long n = 0; n <= 9; ++n)
            for (long d = 0; d <= n; ++d) {
                Int want(printed[n][d]);
                if (comp[n].coeff(d) != want)
                    found.push_back({family, n, d, printed[n][d],
                                     static_cast<long>(comp[n].coeff(d).get_si())});
            }
    };
    audit('T', t, detail::printed_T_table());
    audit('U', u, detail::printed_U_table());
    const auto& known = detail::known_table_errata();
    bool same = found.size() == known.size();
    if (same)
        for (std::size_t i = 0; i < known.size(); ++i)
            same = same && found[i].family == known[i].family && found[i].n == known[i].n &&
                   found[i].degree == known[i].degree && found[i].printed == known[i].printed &&
                   found[i].computed == known[i].computed;
    if (!same) {
        rep.fail_at(0, std::to_string(found.size()) + " mismatches found",
                    std::to_string(known.size()) + " known errata expected");
        return rep;
    }
    for (const auto& e : known)
        rep.note(std::string(1, e.family) + "_" + std::to_string(e.n) + " x^" +
                 std::to_string(e.degree) + ": printed " + std::to_string(e.printed) +
                 ", recurrence gives " + std::to_string(e.computed));
    rep.note("two further entries lack the variable in print but carry correct coefficients");
    return rep;
}

// Single-prime congruence T_p(x) = x^p mod p; rejects non-primes and 2.
inline bool congruence_Tp(long p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("congruence_Tp: p must be an odd prime");
    return mod_reduce(cheb_T(p), Int(p)) == mod_reduce(IntPoly::monomial(Int(1), p), Int(p));
}

// T_p(x) = x^p mod p for odd primes p.
inline VerificationReport check_cong_65(long p_max) {
    VerificationReport rep;
    rep.order = p_max;
    for (long p = 3; p <= p_max; p += 2) {
        if (!is_prime(p)) continue;
        IntPoly lhs = mod_reduce(cheb_T(p), Int(p));
        IntPoly rhs = mod_reduce(IntPoly::monomial(Int(1), p), Int(p));
        if (lhs != rhs) {
            rep.fail_at(p, render(lhs), render(rhs));
            return rep;
        }
    }
    return rep;
}

// T_{p^2}(x) = T_p(x^p) mod p^2 for odd primes p. The polynomial degree
// grows as p^2, so the prime bound is capped.
inline VerificationReport check_cong_68a(long p_max) {
    VerificationReport rep;
    if (p_max > 13) {
        p_max = 13;
        rep.note("prime bound capped at 13");
    }
    rep.order = p_max;
    for (long p = 3; p <= p_max; p += 2) {
        if (!is_prime(p)) continue;
        Int p2 = Int(p) * Int(p);
        IntPoly lhs = mod_reduce(cheb_T(p * p), p2);
        IntPoly rhs = mod_reduce(cheb_T(p).scale_exponents(p), p2);
        if (lhs != rhs) {
            rep.fail_at(p, render(lhs), render(rhs));
            return rep;
        }
    }
    return rep;
}

// T_{2^{n+1}}(x) = 1 mod 2^{2n+1}. The polynomial degree grows as 2^n,
// so the index bound is capped.
inline VerificationReport check_cong_68b(long n_max) {
    VerificationReport rep;
    if (n_max > 8) {
        n_max = 8;
        rep.note("index bound capped at 8");
    }
    rep.order = n_max;
    for (long n = 0; n <= n_max; ++n) {
        Int m = int_pow(Int(2), 2 * n + 1);
        IntPoly lhs = mod_reduce(cheb_T(1L << (n + 1)), m);
        if (lhs != IntPoly(1)) {
            rep.fail_at(n, render(lhs), "1");
            return rep;
        }
    }
    return rep;
}

// Report-only: evaluate T at +-i over the Gaussian integers and compare
// against the printed gamma-formulas. The printed forms fail from n = 1 on;
// corrected variants that do hold are recorded alongside.
inline VerificationReport check_gamma_69(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    auto t = cheb_T_table(2 * n_max + 1);
    auto g = pell_gamma(n_max + 1);
    const GaussInt i = GaussInt::i();
    long printed_even_fail = -1, printed_odd_fail = -1;
    bool corrected_ok = true;
    for (long n = 0; n <= n_max; ++n) {
        const Int sign = n % 2 != 0 ? Int(-1) : Int(1);
        GaussInt even_val = t[2 * n].eval<GaussInt>(i);
        GaussInt even_val_m = t[2 * n].eval<GaussInt>(-i);
        GaussInt printed_even(Int(1) + sign * g[n] * g[n], Int(0));
        GaussInt corrected_even(Int(1) + sign * 4 * g[n] * g[n], Int(0));
        if ((even_val != printed_even || even_val_m != printed_even) && printed_even_fail < 0)
            printed_even_fail = n;
        if (even_val != corrected_even || even_val_m != corrected_even) corrected_ok = false;

        GaussInt odd_val = t[2 * n + 1].eval<GaussInt>(i);
        GaussInt odd_val_m = t[2 * n + 1].eval<GaussInt>(-i);
        Int diff = g[n + 1] * g[n + 1] - g[n] * g[n];
        // printed: +-i (-1 + sign * diff / 2); diff is odd for every n, so
        // the printed right side is not even a Gaussian integer
        bool printed_ok = mpz_even_p(diff.get_mpz_t()) != 0;
        if (printed_ok) {
            GaussInt printed_odd = i * GaussInt(Int(-1) + sign * (diff / 2), Int(0));
            printed_ok = odd_val == printed_odd && odd_val_m == -printed_odd;
        }
        if (!printed_ok && printed_odd_fail < 0) printed_odd_fail = n;
        GaussInt corrected_odd = i * GaussInt(Int(-1) + sign * 2 * diff, Int(0));
        if (odd_val != corrected_odd || odd_val_m != -corrected_odd) corrected_ok = false;
        if (printed_even_fail >= 0 && !rep.first_discrepancy && n == printed_even_fail)
            rep.fail_at(n, to_display(even_val), to_display(printed_even));
    }
    if (printed_even_fail >= 0)
        rep.note("printed even-index formula first fails at n = " + std::to_string(printed_even_fail));
    if (printed_odd_fail >= 0)
        rep.note("printed odd-index formula fails at n = " + std::to_string(printed_odd_fail) +
                 " (gamma_{n+1}^2 - gamma_n^2 is odd, so the halved form is not integral)");
    rep.note(corrected_ok
                 ? "variants with (2 gamma_n)^2 and a doubled difference hold for all checked n"
                 : "no corrected variant found");
    if (printed_even_fail >= 0 || printed_odd_fail >= 0) rep.status = Status::fail;
    return rep;
}

// T_n(T_m(x)) = T_{nm}(x) by exact polynomial composition. Composition
// degree grows as n*m, so the bound is capped.
inline VerificationReport check_comp_617(long n_max) {
    VerificationReport rep;
    if (n_max > 12) {
        n_max = 12;
        rep.note("index bound capped at 12");
    }
    rep.order = n_max;
    auto t = cheb_T_table(n_max * n_max);
    for (long n = 1; n <= n_max; ++n)
        for (long m = 1; m <= n_max; ++m) {
            IntPoly c = t[n].compose(t[m]);
            if (c != t[n * m]) {
                rep.fail_at(n * m, render(c), render(t[n * m]));
                return rep;
            }
        }
    return rep;
}

// U_n - U_{n-2} = 2 T_n.
inline VerificationReport check_rel_611(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    auto t = cheb_T_table(n_max);
    auto u = cheb_U_table(n_max);
    for (long n = 2; n <= n_max; ++n) {
        IntPoly lhs = u[n] - u[n - 2];
        IntPoly rhs = t[n] * IntPoly(2);
        if (lhs != rhs) {
            rep.fail_at(n, render(lhs), render(rhs));
            return rep;
        }
    }
    return rep;
}

// U_n = T'_{n+1}/(n+1), and the auxiliary recursion that forces it.
inline VerificationReport check_deriv_615(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    auto t = cheb_T_table(n_max + 1);
    auto u = cheb_U_table(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        IntPoly lhs = divide_exact(t[n + 1].derivative(), Int(n + 1));
        if (lhs != u[n]) {
            rep.fail_at(n, render(lhs), render(u[n]));
            return rep;
        }
    }
    // Independent route: differentiating the three-term recurrence gives
    // (n+2) V_{n+1} = 2 T_{n+1} + 2x(n+1) V_n - n V_{n-1}; solve it from
    // V_0 = 1, V_1 = 2x and compare with the U family. (The published
    // display of this relation carries T_n in place of T_{n+1}; with that
    // index even the genuine U family fails it, so the differentiated form
    // is used.)
    std::vector<IntPoly> v{IntPoly(1), IntPoly::monomial(Int(2), 1)};
    const IntPoly two_x = IntPoly::monomial(Int(2), 1);
    for (long n = 1; n + 1 <= n_max; ++n) {
        IntPoly num = t[n + 1] * IntPoly(2) + two_x * v[n] * IntPoly(static_cast<int>(n + 1)) -
                      v[n - 1] * IntPoly(static_cast<int>(n));
        v.push_back(divide_exact(num, Int(n + 2)));
        if (v.back() != u[n + 1]) {
            rep.fail_at(n + 1, render(v.back()), render(u[n + 1]));
            rep.note("differentiated-recurrence route disagrees");
            return rep;
        }
    }
    rep.note("derivative formula and the differentiated-recurrence route agree "
             "(auxiliary relation taken with the T index raised by one; the printed "
             "index fails the exact division)");
    return rep;
}

// T_n(1) = 1, U_n(1) = n+1, T_n'(1) = n^2.
inline VerificationReport check_vals_616(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    auto t = cheb_T_table(n_max);
    auto u = cheb_U_table(n_max);
    for (long n = 0; n <= n_max; ++n) {
        Int tv = t[n].eval<Int>(Int(1));
        Int uv = u[n].eval<Int>(Int(1));
        Int dv = t[n].derivative().eval<Int>(Int(1));
        if (tv != 1 || uv != n + 1 || dv != Int(n) * Int(n)) {
            rep.fail_at(n, tv.get_str() + "; " + uv.get_str() + "; " + dv.get_str(),
                        "1; " + std::to_string(n + 1) + "; " + std::to_string(n * n));
            return rep;
        }
    }
    return rep;
}

// Values at 0: odd indices vanish, even indices alternate sign.
inline VerificationReport check_vals_625(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    auto t = cheb_T_table(n_max);
    auto u = cheb_U_table(n_max);
    for (long n = 0; n <= n_max; ++n) {
        Int tv = t[n].eval<Int>(Int(0));
        Int uv = u[n].eval<Int>(Int(0));
        Int want = n % 2 != 0 ? Int(0) : ((n / 2) % 2 != 0 ? Int(-1) : Int(1));
        if (tv != want || uv != want) {
            rep.fail_at(n, tv.get_str() + "; " + uv.get_str(), want.get_str());
            return rep;
        }
    }
    return rep;
}

// ODE residual (1-x^2) T_n'' - x T_n' + n^2 T_n = 0, and the same residual
// with n^2 -> a^2 on the formal series, per degree.
inline VerificationReport check_ode_619(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    auto t = cheb_T_table(n_max);
    const IntPoly one_minus_x2{Int(1), Int(0), Int(-1)};
    for (long n = 0; n <= n_max; ++n) {
        IntPoly resid = one_minus_x2 * t[n].derivative().derivative() -
                        IntPoly::var() * t[n].derivative() +
                        t[n] * IntPoly::monomial(Int(n) * Int(n), 0);
        if (!resid.is_zero()) {
            rep.fail_at(n, render(resid), "0");
            return rep;
        }
    }
    // Formal version about x = 1: with u = x-1, 1-x^2 = -(2u + u^2).
    const long m = 8;
    AlphaSeries ta = t_alpha(m + 2);
    AlphaSeries d1 = series_derivative(ta);
    AlphaSeries d2 = series_derivative(d1);
    const ParamPoly a2 = ParamPoly::alpha() * ParamPoly::alpha();
    AlphaSeries u_poly(m);
    u_poly.coeff(1) = ParamPoly(2);
    if (m >= 2) u_poly.coeff(2) = ParamPoly(1);
    AlphaSeries resid = -(u_poly * d2.truncated(m));
    AlphaSeries xterm(m);
    xterm.coeff(0) = ParamPoly(1);
    xterm.coeff(1) = ParamPoly(1);
    resid -= xterm * d1.truncated(m);
    AlphaSeries last = ta.truncated(m);
    last.scale(a2);
    resid += last;
    if (!resid.is_zero()) {
        long e = first_mismatch(resid, AlphaSeries(resid.order()));
        rep.fail_at(e, render(resid.coeff(e)), "0");
        rep.note("formal ODE residual nonzero");
        return rep;
    }
    rep.note("integer and formal ODE residuals vanish");
    return rep;
}

// Hypergeometric representation: F(-n, n, 1/2; (1-x)/2) = T_n, and the
// formal parameter version against the interpolated coefficients.
inline VerificationReport check_hyp_623(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    const Rational half = make_rational(1, 2);
    for (long n = 0; n <= n_max; ++n) {
        TruncSeries<Rational> f =
            hypergeometric_2f1<Rational>(Rational(-n), Rational(n), half, n + 3);
        for (long k = n + 1; k <= f.order(); ++k) {
            if (f.coeff(k) != 0) {
                rep.fail_at(n, "nonzero term beyond degree n", "terminating series");
                return rep;
            }
        }
        RatPoly z{half, -half};  // (1-x)/2
        RatPoly acc;
        RatPoly zp(1);
        for (long k = 0; k <= n; ++k) {
            if (k > 0) zp *= z;
            acc += zp * RatPoly(f.coeff(k));
        }
        if (acc != to_rational(cheb_T(n))) {
            rep.fail_at(n, "hypergeometric value", render(cheb_T(n)));
            return rep;
        }
    }
    // Formal version: term_k of F(-a, a, 1/2; z) equals c_{a|k} (-2)^k.
    const long m = 8;
    TruncSeries<ParamPoly> f = hypergeometric_2f1<ParamPoly>(-ParamPoly::alpha(),
                                                             ParamPoly::alpha(), half, m);
    AlphaSeries ta = t_alpha(m);
    for (long k = 0; k <= m; ++k) {
        ParamPoly want = ta.coeff(k) * rat_pow(make_rational(-2, 1), k);
        if (f.coeff(k) != want) {
            rep.fail_at(k, render(f.coeff(k)), render(want));
            rep.note("formal hypergeometric coefficients disagree");
            return rep;
        }
    }
    rep.note("terminates at degree n for every integer case; formal coefficients match");
    return rep;
}

// Recurrence-built polynomials against all three explicit formulas.
inline VerificationReport check_explicit_626(long n_max) {
    VerificationReport rep;
    rep.order = n_max;
    auto t = cheb_T_table(n_max);
    auto u = cheb_U_table(n_max);
    for (long n = 0; n <= n_max; ++n) {
        if (cheb_T_binomial_form(n) != t[n]) {
            rep.fail_at(n, render(cheb_T_binomial_form(n)), render(t[n]));
            rep.note("binomial T form disagrees");
            return rep;
        }
        if (n >= 1 && cheb_T_factorial_form(n) != t[n]) {
            rep.fail_at(n, render(cheb_T_factorial_form(n)), render(t[n]));
            rep.note("factorial T form disagrees");
            return rep;
        }
        if (cheb_U_binomial_form(n) != u[n]) {
            rep.fail_at(n, render(cheb_U_binomial_form(n)), render(u[n]));
            rep.note("binomial U form disagrees");
            return rep;
        }
    }
    return rep;
}

// T_{a+2} - 2(1 + u) T_{a+1} + T_a = 0 per degree, with the integer anchor
// at a = 3 against the exact polynomial recurrence.
inline VerificationReport check_alpha_634(long order) {
    VerificationReport rep;
    rep.order = order;
    AlphaSeries t0 = t_alpha(order);
    AlphaSeries t1 = shift_alpha(t0, 1);
    AlphaSeries t2 = shift_alpha(t0, 2);
    AlphaSeries one_plus_u(order);
    one_plus_u.coeff(0) = ParamPoly(1);
    if (order >= 1) one_plus_u.coeff(1) = ParamPoly(1);
    AlphaSeries resid = t2 - (one_plus_u * t1).scaled(ParamPoly(2)) + t0;
    if (!resid.is_zero()) {
        long e = first_mismatch(resid, AlphaSeries(order));
        rep.fail_at(e, render(resid.coeff(e)), "0");
        return rep;
    }
    // anchor: substitute a = 3 and compare with T_5 - 2x T_4 + T_3 = 0
    // re-expanded about x = 1 (trivially zero on both sides, but the
    // individual members must match the re-expanded table polynomials)
    auto t = cheb_T_table(5);
    for (long a = 3; a <= 3; ++a) {
        AlphaSeries spec = t_alpha(order);
        for (long k = 0; k <= order; ++k) {
            ParamPoly c = spec.coeff(k).eval_alpha(Rational(a));
            Rational val = c.coeff(0, 0);
            Rational want = k <= t[a].degree() ? Rational(expand_about_one(t[a]).coeff(k)) : Rational(0);
            if (val != want) {
                rep.fail_at(k, to_display(val), to_display(want));
                rep.note("integer anchor fails at a = " + std::to_string(a));
                return rep;
            }
        }
    }
    rep.note("per-degree identity holds; integer anchor at a = 3 matches the table");
    return rep;
}

// U_a - U_{a-2} = 2 T_a per degree, under the resolved convention; the
// convention selection result is part of the report.
inline VerificationReport check_alpha_635(long order) {
    VerificationReport rep;
    rep.order = order;
    auto outcome = resolve_derivative_convention(order);
    rep.note(outcome.note);
    if (!outcome.shifted_valid) {
        rep.fail_at(0, "no valid convention", "exact division by (a+1)");
        return rep;
    }
    AlphaSeries u = u_alpha(order, true);
    AlphaSeries u_m2(order);
    for (long k = 0; k <= order; ++k) u_m2.coeff(k) = u.coeff(k).shift_alpha(-2);
    AlphaSeries t = t_alpha(order);
    AlphaSeries resid = u - u_m2 - t.scaled(ParamPoly(2));
    if (!resid.is_zero()) {
        long e = first_mismatch(resid, AlphaSeries(order));
        rep.fail_at(e, render(resid.coeff(e)), "0");
    }
    return rep;
}

// U_{a+2} - 2(1 + u) U_{a+1} + U_a = 0 per degree.
inline VerificationReport check_alpha_637(long order) {
    VerificationReport rep;
    rep.order = order;
    AlphaSeries u0 = u_alpha(order, true);
    AlphaSeries u1(order), u2(order);
    for (long k = 0; k <= order; ++k) {
        u1.coeff(k) = u0.coeff(k).shift_alpha(1);
        u2.coeff(k) = u0.coeff(k).shift_alpha(2);
    }
    AlphaSeries one_plus_u(order);
    one_plus_u.coeff(0) = ParamPoly(1);
    if (order >= 1) one_plus_u.coeff(1) = ParamPoly(1);
    AlphaSeries resid = u2 - (one_plus_u * u1).scaled(ParamPoly(2)) + u0;
    if (!resid.is_zero()) {
        long e = first_mismatch(resid, AlphaSeries(order));
        rep.fail_at(e, render(resid.coeff(e)), "0");
    }
    return rep;
}

// T_{-a} = T_a: every coefficient is even in the parameter.
inline VerificationReport check_alpha_638(long order) {
    VerificationReport rep;
    rep.order = order;
    AlphaSeries t = t_alpha(order);
    for (long k = 0; k <= order; ++k) {
        if (t.coeff(k).negate_alpha() != t.coeff(k)) {
            rep.fail_at(k, render(t.coeff(k).negate_alpha()), render(t.coeff(k)));
            return rep;
        }
    }
    return rep;
}

// Formal group law T_a(T_b(x)) = T_{ab}(x): composition in u = x-1, then a
// per-degree polynomial identity in the two parameters.
inline VerificationReport check_group_639a(long order) {
    VerificationReport rep;
    rep.order = order;
    // LHS route: recursion-built series, composed in u. RHS route: the
    // product closed form with the parameter replaced by the product.
    AlphaSeries outer = t_alpha(order);
    AlphaSeries inner_b(order);
    for (long k = 0; k <= order; ++k) inner_b.coeff(k) = outer.coeff(k).alpha_to_beta();
    inner_b.coeff(0) -= ParamPoly(1);
    AlphaSeries composed = series_compose(outer, inner_b);
    AlphaSeries product_form = t_alpha_product_form(order);
    for (long k = 0; k <= order; ++k) {
        ParamPoly want = product_form.coeff(k).alpha_to_alphabeta();
        if (composed.coeff(k) != want) {
            rep.fail_at(k, render(composed.coeff(k)), render(want));
            return rep;
        }
    }
    rep.note("per-degree identity in both parameters up to order " + std::to_string(order));
    return rep;
}

// Inverse law (T_a)^{-1} = T_{1/a} at rational parameters: the composition
// collapses to the identity series 1 + u.
inline VerificationReport check_inverse_639b(long order) {
    VerificationReport rep;
    rep.order = order;
    for (long a = 2; a <= 3; ++a) {
        TruncSeries<Rational> outer = t_alpha_rational(Rational(a), order);
        TruncSeries<Rational> inner = t_alpha_rational(make_rational(1, a), order);
        inner.coeff(0) -= 1;
        TruncSeries<Rational> composed = series_compose(outer, inner);
        TruncSeries<Rational> expect(order);
        expect.coeff(0) = 1;
        if (order >= 1) expect.coeff(1) = 1;
        long d = first_mismatch(composed, expect);
        if (d >= 0) {
            rep.fail_at(d, to_display(composed.coeff(d)), to_display(expect.coeff(d)));
            rep.note("inverse law fails at parameter " + std::to_string(a));
            return rep;
        }
    }
    rep.note("identity series recovered at parameters 2 and 3");
    return rep;
}

namespace detail {

// Decides lhs != s * sqrt(r) rigorously for rationals with r > 0, by
// squaring for the equality case and outward-rounded bisection of sqrt(r)
// until the enclosing interval separates. Returns the number of bisection
// steps, or -1 when the two sides are exactly equal.
inline int separate_from_sqrt(const Rational& lhs, const Rational& s, const Rational& r) {
    if (s == 0) return lhs == 0 ? -1 : 0;
    const bool lhs_nonneg = lhs >= 0;
    const bool rhs_nonneg = s > 0;
    if (lhs * lhs == s * s * r && lhs_nonneg == rhs_nonneg) return -1;
    Rational lo(0), hi = r < 1 ? Rational(1) : r;
    for (int it = 1; it <= 512; ++it) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= r) lo = mid;
        else hi = mid;
        Rational lo_s = s > 0 ? s * lo : s * hi;
        Rational hi_s = s > 0 ? s * hi : s * lo;
        if (lhs < lo_s || lhs > hi_s) return it;
    }
    throw std::runtime_error("separate_from_sqrt: no separation after 512 bisections");
}

}  // namespace detail

// A published formula equating U_{n+1} with a square-root multiple of a
// factorial sum. Provably false at rational sample points; registered as
// expected-fail so the suite is green exactly when the disproof lands.
inline VerificationReport check_misprint_644(long n_max) {
    VerificationReport rep;
    n_max = std::max<long>(n_max, 1);
    rep.order = n_max;
    const Rational samples[] = {make_rational(1, 4), make_rational(1, 3), make_rational(1, 2)};
    for (long n = 1; n <= n_max; ++n) {
        RatPoly w;  // the printed factorial sum
        for (long k = 0; 2 * k <= n; ++k) {
            Rational c = make_rational(factorial(n - k), factorial(k) * factorial(n - 2 * k));
            c *= Rational(int_pow(Int(2), n - 2 * k));
            if (k % 2 != 0) c = -c;
            w += RatPoly::monomial(c, n - 2 * k);
        }
        const RatPoly u_next = to_rational(cheb_U(n + 1));
        for (const Rational& x : samples) {
            Rational lhs = u_next.eval<Rational>(x);
            Rational s = w.eval<Rational>(x);
            Rational r = Rational(1) - x;
            int steps = detail::separate_from_sqrt(lhs, s, r);
            if (steps >= 0) {
                rep.fail_at(n, to_display(lhs),
                            to_display(s) + " * sqrt(" + to_display(r) + ")");
                rep.note("interval separation at x = " + to_display(x) + " after " +
                         std::to_string(steps) + " bisections (n = " + std::to_string(n) + ")");
                return rep;
            }
        }
    }
    rep.note("no sample point separated the two sides");
    return rep;
}

// Report-only: coefficient ratio trend of the interpolated series at a
// non-integer parameter, plus the termination behaviour at an integer one.
inline VerificationReport check_probe_632(long k_max) {
    VerificationReport rep;
    rep.order = k_max;
    const Rational alpha = make_rational(1, 2);
    const Rational a2 = alpha * alpha;
    std::string ratios;
    Rational prev(-1);
    bool tail_monotone = true;
    for (long k = 0; k < k_max; ++k) {
        Rational r = (a2 - Rational(k * k)) / Rational((k + 1) * (2 * k + 1));
        if (r < 0) r = -r;
        if (k > 1 && r <= prev) tail_monotone = false;
        prev = r;
        if (!ratios.empty()) ratios += ", ";
        ratios += to_display(r);
    }
    rep.note("|c_{k+1}/c_k| at parameter 1/2: " + ratios);
    rep.note(tail_monotone ? "tail ratios increase monotonically toward 1/2"
                           : "tail ratios are not monotone");
    TruncSeries<Rational> t3 = t_alpha_rational(Rational(3), k_max);
    bool terminated = true;
    for (long k = 4; k <= t3.order(); ++k)
        if (t3.coeff(k) != 0) terminated = false;
    rep.note(terminated ? "series terminates at degree 3 for parameter 3"
                        : "series unexpectedly fails to terminate at parameter 3");
    if (!terminated) rep.status = Status::fail;
    return rep;
}

}  // namespace qsix
