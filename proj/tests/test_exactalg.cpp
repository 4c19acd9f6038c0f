#include <doctest.h>

#include "qsix/gauss_int.hpp"
#include "qsix/param_poly.hpp"
#include "qsix/qcombinat.hpp"
#include "qsix/render.hpp"
#include "test_util.hpp"

using namespace qsix;
using namespace qsix::testutil;

TEST_CASE("q_number basics") {
    CHECK(q_number(0).is_zero());
    CHECK(q_number(1) == Laurent(1));
    CHECK(q_number(3) == lp({{0, 1}, {1, 1}, {2, 1}}));
}

TEST_CASE("q_factorial against the dense product oracle") {
    CHECK(q_factorial(0) == Laurent(1));
    CHECK(q_factorial(2) == lp({{0, 1}, {1, 1}}));
    // [1][2][3] = (1)(1+q)(1+q+q^2)
    Dense oracle = dmul(dmul({1}, {1, 1}), {1, 1, 1});
    CHECK(q_factorial(3) == to_laurent(oracle));
    CHECK(q_factorial(3) == lp({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
}

namespace {

// Independent Pascal oracle on dense arrays: [n, k] = q^k [n-1, k] + [n-1, k-1].
Dense pascal_oracle(long n, long k) {
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return {1};
    Dense a = pascal_oracle(n - 1, k);
    Dense b = pascal_oracle(n - 1, k - 1);
    Dense r(std::max(a.size() + k, b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

}  // namespace

TEST_CASE("gauss_binomial values and symmetry") {
    for (long m : {0L, 1L, 5L, 9L}) CHECK(gauss_binomial(m, 0) == Laurent(1));
    CHECK(gauss_binomial(2, 1) == lp({{0, 1}, {1, 1}}));
    CHECK(gauss_binomial(4, 2) == to_laurent(pascal_oracle(4, 2)));
    CHECK(gauss_binomial(4, 2) == lp({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(gauss_binomial(n, k) == gauss_binomial(n, n - k));
            CHECK(gauss_binomial(n, k) == to_laurent(pascal_oracle(n, k)));
        }
}

TEST_CASE("gauss_binomial quotient route matches the recurrence route") {
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(gauss_binomial_by_quotient(n, k) == gauss_binomial(n, k));
    CHECK(gauss_binomial_by_quotient(30, 13) == gauss_binomial(30, 13));
}

TEST_CASE("Pascal rules hold exactly") {
    for (long a = 0; a + 1 <= 12; ++a)
        for (long r = 0; r <= a + 1; ++r) {
            Laurent lhs = gauss_binomial(a + 1, r);
            Laurent t1 = gauss_binomial(a, r);
            t1.mul_monomial(Int(1), r);
            CHECK(lhs == t1 + gauss_binomial(a, r - 1));
            Laurent t2 = gauss_binomial(a, r - 1);
            t2.mul_monomial(Int(1), a + 1 - r);
            CHECK(lhs == gauss_binomial(a, r) + t2);
        }
}

TEST_CASE("gauss_binomial at q = 1 reduces to the binomial coefficient") {
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(gauss_binomial(n, k).eval_at_one() == binomial(n, k));
}

TEST_CASE("substitute_q_power") {
    CHECK(substitute_q_power(lp({{0, 1}, {1, 1}}), -1) == lp({{0, 1}, {-1, 1}}));
    Laurent expect = gauss_binomial(2, 1);
    expect.mul_monomial(Int(1), 1 * (1 - 2));
    CHECK(substitute_q_power(gauss_binomial(2, 1), -1) == expect);
    CHECK(substitute_q_power(lp({{2, 1}}), 3) == lp({{6, 1}}));
    CHECK_THROWS_AS(substitute_q_power(lp({{1, 1}}), 0), std::invalid_argument);
}

TEST_CASE("q-factorial inversion law for n <= 10") {
    for (long n = 1; n <= 10; ++n) {
        Laurent lhs = substitute_q_power(q_factorial(n), -1);
        Laurent rhs = q_factorial(n);
        rhs.mul_monomial(Int(1), -(n * (n - 1) / 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("odd_double_factorial") {
    CHECK(odd_double_factorial(0) == 1);
    CHECK(odd_double_factorial(2) == 15);
    Int oracle(1);
    for (long i = 1; i <= 9; i += 2) oracle *= i;  // (2*4+1)!! = 1*3*5*7*9
    CHECK(odd_double_factorial(4) == oracle);
    CHECK(odd_double_factorial(4) == 945);
}

TEST_CASE("Laurent exact division error path") {
    Laurent num = lp({{0, 1}, {1, 1}});          // 1 + q
    Laurent den = lp({{0, 1}, {1, 1}, {2, 1}});  // 1 + q + q^2
    CHECK_THROWS_AS(num.divide_exact(den), std::domain_error);
    CHECK_THROWS_AS(num.divide_exact(Laurent()), std::invalid_argument);
    CHECK((num * den).divide_exact(den) == num);
}

TEST_CASE("Laurent ring axioms on random values") {
    Rng rng(0x5eed);
    for (int it = 0; it < 200; ++it) {
        Laurent a = random_laurent(rng, 6, -4, 8);
        Laurent b = random_laurent(rng, 6, -4, 8);
        Laurent c = random_laurent(rng, 6, -4, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("GaussInt arithmetic") {
    GaussInt i = GaussInt::i();
    CHECK(i * i == GaussInt(Int(-1), Int(0)));
    GaussInt z(Int(2), Int(-3));
    CHECK(z + (-z) == GaussInt(0));
    CHECK(z * GaussInt(1) == z);
    CHECK((GaussInt(Int(1), Int(1)) * GaussInt(Int(1), Int(-1))) == GaussInt(2));
}

TEST_CASE("Rational canonical form") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(make_rational(1, -2).get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

namespace {

ParamPoly random_param(Rng& rng) {
    ParamPoly p;
    const long n = rng.range(0, 5);
    for (long i = 0; i < n; ++i)
        p += ParamPoly::monomial(Rational(rng.range(-4, 4)), static_cast<int>(rng.range(0, 4)),
                                 static_cast<int>(rng.range(0, 3)));
    return p;
}

}  // namespace

TEST_CASE("ParamPoly substitutions are ring homomorphisms") {
    Rng rng(0xabcdef);
    for (int it = 0; it < 100; ++it) {
        ParamPoly p = random_param(rng);
        ParamPoly q = random_param(rng);
        CHECK((p * q).shift_alpha(1) == p.shift_alpha(1) * q.shift_alpha(1));
        CHECK((p * q).shift_alpha(-2) == p.shift_alpha(-2) * q.shift_alpha(-2));
        CHECK((p + q).shift_alpha(3) == p.shift_alpha(3) + q.shift_alpha(3));
        CHECK((p * q).eval_alpha(make_rational(2, 3)) ==
              p.eval_alpha(make_rational(2, 3)) * q.eval_alpha(make_rational(2, 3)));
        CHECK((p * q).alpha_to_alphabeta() == p.alpha_to_alphabeta() * q.alpha_to_alphabeta());
        CHECK((p * q).negate_alpha() == p.negate_alpha() * q.negate_alpha());
        // shifting there and back is the identity
        CHECK(p.shift_alpha(1).shift_alpha(-1) == p);
    }
}

TEST_CASE("ParamPoly substitution alpha -> 1 then identity") {
    ParamPoly p = ParamPoly::alpha() * ParamPoly::alpha() + ParamPoly(3);
    ParamPoly at1 = p.eval_alpha(Rational(1));
    CHECK(at1 == ParamPoly(4));
    CHECK(p.shift_alpha(0) == p);
}

TEST_CASE("ParamPoly exact division by (a - r)") {
    Rng rng(0x77);
    const ParamPoly a_plus_1 = ParamPoly::alpha() + ParamPoly(1);
    for (int it = 0; it < 50; ++it) {
        ParamPoly p = random_param(rng);
        CHECK((p * a_plus_1).divide_by_alpha_minus(Rational(-1)) == p);
    }
    // a^2 is not divisible by (a + 1)
    CHECK_THROWS_AS((ParamPoly::alpha() * ParamPoly::alpha()).divide_by_alpha_minus(Rational(-1)),
                    std::domain_error);
}

TEST_CASE("render formats") {
    CHECK(render(lp({{0, 1}, {1, -1}, {5, 2}})) == "1 - q + 2*q^5");
    CHECK(render(lp({{-1, 1}, {0, 1}})) == "q^-1 + 1");
    CHECK(render(Laurent()) == "0");
    CHECK(render(lp({{1, -1}, {2, 1}})) == "-q + q^2");
}
