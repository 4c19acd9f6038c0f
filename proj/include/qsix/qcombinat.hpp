#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "qsix/laurent.hpp"

namespace qsix {

// [m] = (1 - q^m)/(1 - q) = 1 + q + ... + q^{m-1}; [0] = 0.
inline Laurent q_number(long m) {
    if (m < 0) throw std::invalid_argument("q_number: negative argument");
    Laurent r;
    for (long j = 0; j < m; ++j) r += q_monomial(j);
    return r;
}

// [m]! = [1][2]...[m]; [0]! = 1.
inline Laurent q_factorial(long m) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
    Laurent r(1);
    for (long j = 1; j <= m; ++j) r *= q_number(j);
    return r;
}

namespace detail {

// Full Pascal triangle of Gaussian binomials, extended row by row with
// [a+1, r] = q^r [a, r] + [a, r-1]. Shared across threads behind a mutex:
// rows are only appended, never mutated, and lookups copy the value out
// while holding the lock.
inline Laurent gauss_binomial_memo(long n, long k) {
    static std::mutex mtx;
    static std::vector<std::vector<Laurent>> rows;  // rows[a][r], 0 <= r <= a
    std::lock_guard<std::mutex> lock(mtx);
    if (rows.empty()) rows.push_back({Laurent(1)});
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        const long a = static_cast<long>(rows.size()) - 1;
        std::vector<Laurent> next(a + 2);
        next[0] = Laurent(1);
        next[a + 1] = Laurent(1);
        for (long r = 1; r <= a; ++r) {
            Laurent t = prev[r];
            t.mul_monomial(Int(1), r);
            next[r] = t + prev[r - 1];
        }
        rows.push_back(std::move(next));
    }
    return rows[n][k];
}

}  // namespace detail

// Gaussian binomial [n over k] as a polynomial in q. Computed by the
// Pascal recurrence with memoization; the product/quotient definition is
// kept separately as an independent cross-check.
inline Laurent gauss_binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Laurent();
    return detail::gauss_binomial_memo(n, k);
}

// [n over k] = ([n][n-1]...[n-k+1]) / ([1][2]...[k]). The division must be
// exact; a nonzero remainder signals an arithmetic bug upstream.
inline Laurent gauss_binomial_by_quotient(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Laurent();
    Laurent num(1);
    for (long j = n - k + 1; j <= n; ++j) num *= q_number(j);
    Laurent den(1);
    for (long j = 1; j <= k; ++j) den *= q_number(j);
    return num.divide_exact(den);
}

// q -> q^e on a Laurent polynomial, e nonzero (e = -1 is the q-inverse map).
inline Laurent substitute_q_power(const Laurent& p, long e) {
    return p.substitute_power(e);
}

}  // namespace qsix
