#include <doctest.h>

#include "qsix/qcombinat.hpp"
#include "qsix/render.hpp"
#include "qsix/trunc_series.hpp"
#include "test_util.hpp"

using namespace qsix;
using namespace qsix::testutil;

namespace {

TruncSeries<Int> random_int_series(Rng& rng, long order) {
    TruncSeries<Int> s(order);
    for (long d = 0; d <= order; ++d) s.coeff(d) = Int(rng.range(-4, 4));
    return s;
}

}  // namespace

TEST_CASE("series multiplication basics") {
    TruncSeries<Laurent> a(4), b(4);
    a.coeff(0) = Laurent(1);
    a.coeff(1) = Laurent(1);
    b.coeff(0) = Laurent(1);
    b.coeff(1) = Laurent(-1);
    TruncSeries<Laurent> prod = a * b;  // 1 - x^2
    CHECK(prod.coeff(0) == Laurent(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == Laurent(-1));
    CHECK(prod.coeff(3).is_zero());

    TruncSeries<Laurent> c(4);
    c.coeff(0) = Laurent(1);
    c.coeff(1) = lp({{1, 1}});  // 1 + qx
    TruncSeries<Laurent> sq = c * c;
    CHECK(sq.coeff(1) == lp({{1, 2}}));
    CHECK(sq.coeff(2) == lp({{2, 1}}));

    TruncSeries<Laurent> one = TruncSeries<Laurent>::constant(Laurent(1), 4);
    CHECK(a * one == a);
}

TEST_CASE("mixed-order arithmetic records the minimum order") {
    TruncSeries<Int> a(7), b(3);
    a.coeff(0) = 1;
    b.coeff(0) = 1;
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK(a.shifted_up(2).order() == 9);
    CHECK_THROWS_AS(a.truncated(9), std::invalid_argument);
}

TEST_CASE("series multiplication is associative and commutative up to truncation") {
    Rng rng(0xfeed);
    for (int it = 0; it < 60; ++it) {
        auto a = random_int_series(rng, 8);
        auto b = random_int_series(rng, 8);
        auto c = random_int_series(rng, 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("scale_variable") {
    TruncSeries<Laurent> s(2);
    s.coeff(0) = Laurent(1);
    s.coeff(1) = Laurent(1);
    s.coeff(2) = Laurent(1);
    TruncSeries<Laurent> t = scale_variable(s, 1);
    CHECK(t.coeff(0) == Laurent(1));
    CHECK(t.coeff(1) == lp({{1, 1}}));
    CHECK(t.coeff(2) == lp({{2, 1}}));
    CHECK(scale_variable(s, 0) == s);
}

TEST_CASE("pochhammer_x") {
    CHECK(pochhammer_x(0, 3) == TruncSeries<Laurent>::constant(Laurent(1), 3));
    TruncSeries<Laurent> m1 = pochhammer_x(1, 3);
    CHECK(m1.coeff(0) == Laurent(1));
    CHECK(m1.coeff(1) == Laurent(-1));
    TruncSeries<Laurent> m2 = pochhammer_x(2, 3);
    CHECK(m2.coeff(1) == lp({{0, -1}, {1, -1}}));
    CHECK(m2.coeff(2) == lp({{1, 1}}));
}

TEST_CASE("finite binomial theorem for the shifted products") {
    // (x;q)_m = sum_k [m, k] q^{C(k,2)} (-x)^k for m <= 10
    for (long m = 0; m <= 10; ++m) {
        TruncSeries<Laurent> lhs = pochhammer_x(m, m);
        TruncSeries<Laurent> rhs(m);
        for (long k = 0; k <= m; ++k) {
            Laurent c = gauss_binomial(m, k);
            c.mul_monomial(k % 2 != 0 ? Int(-1) : Int(1), k * (k - 1) / 2);
            rhs.coeff(k) = c;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reciprocal pochhammer series") {
    TruncSeries<Laurent> geo = series_reciprocal_pochhammer(0, 3);
    for (long d = 0; d <= 3; ++d) CHECK(geo.coeff(d) == Laurent(1));

    // oracle: (sum_i y^i)(sum_j q^j y^j) up to y^2
    TruncSeries<Laurent> l1 = series_reciprocal_pochhammer(1, 2);
    CHECK(l1.coeff(0) == Laurent(1));
    CHECK(l1.coeff(1) == lp({{0, 1}, {1, 1}}));
    CHECK(l1.coeff(2) == lp({{0, 1}, {1, 1}, {2, 1}}));

    // q = 1 collapse of the geometric factor
    TruncSeries<Laurent> g2 = series_reciprocal_pochhammer(0, 2);
    for (long d = 0; d <= 2; ++d) CHECK(g2.coeff(d).eval_at_one() == 1);
}

TEST_CASE("reciprocal times the explicit product is 1") {
    for (long l = 0; l <= 4; ++l) {
        const long order = 12;
        TruncSeries<Laurent> rec = series_reciprocal_pochhammer(l, order);
        TruncSeries<Laurent> prod = TruncSeries<Laurent>::constant(Laurent(1), order);
        for (long i = 0; i <= l; ++i) {
            TruncSeries<Laurent> f(order);
            f.coeff(0) = Laurent(1);
            f.coeff(1) = q_monomial(i, Int(-1));
            prod *= f;
        }
        CHECK(rec * prod == TruncSeries<Laurent>::constant(Laurent(1), order));
    }
}

TEST_CASE("series_reciprocal requires a unit constant term") {
    TruncSeries<Int> s(3);
    s.coeff(0) = 2;
    CHECK_THROWS_AS(series_reciprocal(s), std::invalid_argument);
    s.coeff(0) = 1;
    s.coeff(1) = -1;
    TruncSeries<Int> r = series_reciprocal(s);
    for (long d = 0; d <= 3; ++d) CHECK(r.coeff(d) == 1);
}

TEST_CASE("series composition") {
    TruncSeries<Int> outer(3);
    for (long d = 0; d <= 3; ++d) outer.coeff(d) = 1;  // 1 + u + u^2 + u^3
    TruncSeries<Int> ident(3);
    ident.coeff(1) = 1;
    CHECK(series_compose(outer, ident) == outer);

    TruncSeries<Int> inner(3);
    inner.coeff(1) = 1;
    inner.coeff(2) = 1;  // u + u^2
    TruncSeries<Int> comp = series_compose(outer, inner);
    CHECK(comp.coeff(0) == 1);
    CHECK(comp.coeff(1) == 1);
    CHECK(comp.coeff(2) == 2);
    CHECK(comp.coeff(3) == 3);

    TruncSeries<Int> bad(3);
    bad.coeff(0) = 1;
    CHECK_THROWS_AS(series_compose(outer, bad), std::invalid_argument);
}

TEST_CASE("composition of the re-expanded quadratic is unchanged by the identity") {
    // 1 + 4u + 2u^2 composed with u
    TruncSeries<Int> t2(2);
    t2.coeff(0) = 1;
    t2.coeff(1) = 4;
    t2.coeff(2) = 2;
    TruncSeries<Int> ident(2);
    ident.coeff(1) = 1;
    CHECK(series_compose(t2, ident) == t2);
}

TEST_CASE("composition is associative on random small cases") {
    Rng rng(0xc0ffee);
    for (int it = 0; it < 40; ++it) {
        auto outer = random_int_series(rng, 6);
        auto mid = random_int_series(rng, 6);
        auto inner = random_int_series(rng, 6);
        mid.coeff(0) = 0;
        inner.coeff(0) = 0;
        CHECK(series_compose(outer, series_compose(mid, inner)) ==
              series_compose(series_compose(outer, mid), inner));
    }
}

TEST_CASE("substitute_x_power_of_q guards its soundness condition") {
    TruncSeries<Laurent> s = TruncSeries<Laurent>::constant(Laurent(1), 3);
    CHECK_THROWS_AS(substitute_x_power_of_q(s, 1, 10), std::invalid_argument);
    CHECK(substitute_x_power_of_q(s, 3, 10) == Laurent(1));
}

TEST_CASE("series rendering") {
    TruncSeries<Int> p(7);
    p.coeff(0) = 1;
    p.coeff(1) = -1;
    p.coeff(5) = 1;
    CHECK(render_series(p) == "1 - q + q^5");
    CHECK(render_series(TruncSeries<Int>(4)) == "0");
}
