#include <doctest.h>

#include "qsix/chebyshev.hpp"
#include "qsix/render.hpp"
#include "test_util.hpp"

using namespace qsix;
using namespace qsix::testutil;

TEST_CASE("recurrence polynomials match the audited table") {
    CHECK(render(cheb_T(5)) == "16x^5 - 20x^3 + 5x");
    CHECK(render(cheb_U(4)) == "16x^4 - 12x^2 + 1");
    // recurrence oracle values where the printed table slips
    CHECK(render(cheb_T(9)) == "256x^9 - 576x^7 + 432x^5 - 120x^3 + 9x");
    CHECK(render(cheb_U(9)) == "512x^9 - 1024x^7 + 672x^5 - 160x^3 + 10x");
}

TEST_CASE("explicit formulas") {
    // binomial form at n = 3: x^3 + 3x(x^2-1) = 4x^3 - 3x
    CHECK(cheb_T_binomial_form(3) == cheb_T(3));
    CHECK(render(cheb_T_binomial_form(3)) == "4x^3 - 3x");
    CHECK(render(cheb_U_binomial_form(2)) == "4x^2 - 1");
    CHECK(render(cheb_T_factorial_form(4)) == "8x^4 - 8x^2 + 1");
    for (long n = 0; n <= 12; ++n) {
        CHECK(cheb_T_binomial_form(n) == cheb_T(n));
        CHECK(cheb_U_binomial_form(n) == cheb_U(n));
        if (n >= 1) CHECK(cheb_T_factorial_form(n) == cheb_T(n));
    }
}

TEST_CASE("congruences") {
    CHECK(mod_reduce(cheb_T(3), Int(3)) == mod_reduce(IntPoly::monomial(Int(1), 3), Int(3)));
    CHECK(mod_reduce(cheb_T(4), Int(8)) == IntPoly(1));
    CHECK(mod_reduce(cheb_T(9), Int(9)) == mod_reduce(cheb_T(3).scale_exponents(3), Int(9)));
    CHECK(check_cong_65(11).passed());
    CHECK(check_cong_68a(5).passed());
    CHECK(check_cong_68b(3).passed());
    CHECK_THROWS_AS(congruence_Tp(4), std::invalid_argument);
    CHECK_THROWS_AS(congruence_Tp(2), std::invalid_argument);
    CHECK(congruence_Tp(7));
}

TEST_CASE("pell sequence and Gaussian evaluations") {
    auto g = pell_gamma(4);
    CHECK(g == std::vector<Int>{Int(0), Int(1), Int(2), Int(5), Int(12)});
    // n = 0: both sides equal 1
    CHECK(cheb_T(0).eval<GaussInt>(GaussInt::i()) == GaussInt(1));
    // n = 1: direct value is -3, the printed formula value is 0
    CHECK(cheb_T(2).eval<GaussInt>(GaussInt::i()) == GaussInt(Int(-3), Int(0)));
    VerificationReport rep = check_gamma_69(10);
    CHECK(rep.status == Status::fail);
    REQUIRE(rep.first_discrepancy.has_value());
    CHECK(rep.first_discrepancy->degree == 1);
    bool corrected_note = false;
    for (const auto& n : rep.notes)
        if (n.find("hold for all checked n") != std::string::npos) corrected_note = true;
    CHECK(corrected_note);
}

TEST_CASE("composition semigroup") {
    CHECK(cheb_T(2).compose(cheb_T(2)) == cheb_T(4));
    for (long m = 1; m <= 6; ++m) CHECK(cheb_T(1).compose(cheb_T(m)) == cheb_T(m));
    CHECK(cheb_T(3).compose(cheb_T(2)) == cheb_T(6));
    CHECK(check_comp_617(6).passed());
}

TEST_CASE("structure relations") {
    CHECK(cheb_T(7).eval<Int>(Int(1)) == 1);
    CHECK(cheb_U(7).eval<Int>(Int(1)) == 8);
    CHECK(cheb_T(7).derivative().eval<Int>(Int(1)) == 49);
    CHECK(divide_exact(cheb_T(2).derivative(), Int(2)) == cheb_U(1));
    CHECK(render(cheb_U(1)) == "2x");
    // ODE residual at n = 4
    const IntPoly one_minus_x2{Int(1), Int(0), Int(-1)};
    IntPoly t4 = cheb_T(4);
    IntPoly resid = one_minus_x2 * t4.derivative().derivative() -
                    IntPoly::var() * t4.derivative() + t4 * IntPoly(16);
    CHECK(resid.is_zero());
    CHECK(check_rel_611(12).passed());
    CHECK(check_deriv_615(12).passed());
    CHECK(check_vals_616(12).passed());
    CHECK(check_vals_625(12).passed());
    CHECK(check_ode_619(12).passed());
    CHECK(check_recur_610(12).passed());
    CHECK(check_table_64(9).passed());
}

TEST_CASE("hypergeometric representation") {
    const Rational half = make_rational(1, 2);
    TruncSeries<Rational> f1 = hypergeometric_2f1<Rational>(Rational(-1), Rational(1), half, 3);
    CHECK(f1.coeff(0) == 1);
    CHECK(f1.coeff(1) == -2);
    CHECK(f1.coeff(2) == 0);
    TruncSeries<Rational> f2 = hypergeometric_2f1<Rational>(Rational(-2), Rational(2), half, 4);
    CHECK(f2.coeff(1) == -8);
    CHECK(f2.coeff(2) == 8);
    CHECK(f2.coeff(3) == 0);
    for (long n = 1; n <= 8; ++n) {
        TruncSeries<Rational> f =
            hypergeometric_2f1<Rational>(Rational(-n), Rational(n), half, n + 4);
        for (long k = n + 1; k <= f.order(); ++k) CHECK(f.coeff(k) == 0);
    }
    CHECK_THROWS_AS(hypergeometric_2f1<Rational>(Rational(2), Rational(2), Rational(-1), 4),
                    std::domain_error);
    CHECK(check_hyp_623(12).passed());
}

TEST_CASE("interpolated series coefficients") {
    AlphaSeries t = t_alpha(4);
    const ParamPoly a2 = ParamPoly::alpha() * ParamPoly::alpha();
    CHECK(t.coeff(0) == ParamPoly(1));
    CHECK(t.coeff(1) == a2);
    ParamPoly c2 = a2 * (a2 - ParamPoly(1));
    c2 /= Rational(6);
    CHECK(t.coeff(2) == c2);
    // product closed form agrees with the recursion
    CHECK(t_alpha_product_form(12) == t_alpha(12));
    // at alpha = 2 the series collapses to 1 + 4u + 2u^2
    TruncSeries<Rational> t2 = t_alpha_rational(Rational(2), 4);
    CHECK(t2.coeff(0) == 1);
    CHECK(t2.coeff(1) == 4);
    CHECK(t2.coeff(2) == 2);
    CHECK(t2.coeff(3) == 0);
    CHECK(t2.coeff(4) == 0);
}

TEST_CASE("integer specialization equals the re-expanded polynomials") {
    for (long n = 0; n <= 8; ++n) {
        AlphaSeries t = t_alpha(10);
        IntPoly expanded = expand_about_one(cheb_T(n));
        for (long k = 0; k <= 10; ++k) {
            Rational val = t.coeff(k).eval_alpha(Rational(n)).coeff(0, 0);
            Rational want(expanded.coeff(k));
            CHECK(val == want);
        }
    }
}

TEST_CASE("derivative convention resolution") {
    auto outcome = resolve_derivative_convention(6);
    CHECK(outcome.shifted_valid);
    CHECK_FALSE(outcome.unshifted_valid);
    CHECK_THROWS_AS(u_alpha(6, false), std::domain_error);
    // the resolved U has degree-0 coefficient (a + 1)
    AlphaSeries u = u_alpha(6, true);
    CHECK(u.coeff(0) == ParamPoly::alpha() + ParamPoly(1));
}

TEST_CASE("alpha relations") {
    CHECK(check_alpha_634(8).passed());
    VerificationReport r635 = check_alpha_635(8);
    CHECK(r635.passed());
    bool has_selection_note = false;
    for (const auto& n : r635.notes)
        if (n.find("selected") != std::string::npos) has_selection_note = true;
    CHECK(has_selection_note);
    CHECK(check_alpha_637(8).passed());
    CHECK(check_alpha_638(8).passed());
}

TEST_CASE("group law small degrees by hand") {
    AlphaSeries t = t_alpha(2);
    // degree 1: c_{a|1} c_{b|1} = a^2 b^2 = c_{ab|1}
    ParamPoly lhs = t.coeff(1) * t.coeff(1).alpha_to_beta();
    ParamPoly want = t.coeff(1).alpha_to_alphabeta();
    CHECK(lhs == want);
    CHECK(check_group_639a(8).passed());
}

TEST_CASE("composition is associative at rational parameters") {
    const long n = 6;
    auto as_zero_const = [](TruncSeries<Rational> s) {
        s.coeff(0) -= 1;
        return s;
    };
    for (auto [a, b, c] : {std::array<long, 3>{2, 3, 2}, {3, 2, 5}, {2, 2, 2}}) {
        TruncSeries<Rational> ta = t_alpha_rational(Rational(a), n);
        TruncSeries<Rational> tb = t_alpha_rational(Rational(b), n);
        TruncSeries<Rational> tc = t_alpha_rational(Rational(c), n);
        TruncSeries<Rational> left =
            series_compose(series_compose(ta, as_zero_const(tb)), as_zero_const(tc));
        TruncSeries<Rational> right =
            series_compose(ta, as_zero_const(series_compose(tb, as_zero_const(tc))));
        CHECK(first_mismatch(left, right) == -1);
        // both equal the series at the product parameter
        TruncSeries<Rational> direct = t_alpha_rational(Rational(a * b * c), n);
        CHECK(first_mismatch(left, direct) == -1);
    }
}

TEST_CASE("inverse law coefficients at parameter 1/2") {
    TruncSeries<Rational> th = t_alpha_rational(make_rational(1, 2), 3);
    CHECK(th.coeff(1) == make_rational(1, 4));
    CHECK(th.coeff(2) == make_rational(-1, 32));
    CHECK(check_inverse_639b(6).passed());
    // parameter 1 is the identity series 1 + u
    TruncSeries<Rational> t1 = t_alpha_rational(Rational(1), 4);
    CHECK(t1.coeff(0) == 1);
    CHECK(t1.coeff(1) == 1);
    for (long k = 2; k <= 4; ++k) CHECK(t1.coeff(k) == 0);
}

TEST_CASE("square-root misprint is disproved") {
    VerificationReport rep = check_misprint_644(3);
    CHECK(rep.status == Status::fail);
    REQUIRE(rep.first_discrepancy.has_value());
    CHECK(rep.first_discrepancy->degree == 1);
}

TEST_CASE("ratio probe") {
    VerificationReport rep = check_probe_632(20);
    CHECK(rep.status == Status::pass);
    REQUIRE(!rep.notes.empty());
    CHECK(rep.notes[0].find("1/4, 1/8") != std::string::npos);
}
