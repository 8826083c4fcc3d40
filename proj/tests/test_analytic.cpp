#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polylog/analytic.hpp"
#include "polylog/recurrences.hpp"

using namespace polylog;

namespace {

Real tol_bits(long b, mpfr_prec_t p = 256) { return Real::pow2(-b, p); }

}  // namespace

TEST_CASE("scalar wrappers keep the minimum operand precision") {
    const Real a(1L, 100);
    const Real b(1L, 200);
    CHECK((a + b).prec() == 100);
    CHECK((b * b).prec() == 200);
    const Complex c(Real(1L, 150), Real(0L, 90));
    CHECK(c.prec() == 90);
    CHECK(Real::pow2(-10, 64).to_double() == doctest::Approx(1.0 / 1024));
}

TEST_CASE("zeta(2) equals pi^2/6") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Complex v = li_direct(Complex(2L, wp), RootOfUnity(), ctx);
    const Real pi = Real::pi(wp);
    const Real want = pi * pi / 6L;
    CHECK((v - Complex(want, Real(wp))).abs() < tol_bits(120));
    CHECK(v.im().abs() < tol_bits(120));
}

TEST_CASE("Li_{-1}(2) equals -pi^2/12") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Complex v = li_direct(Complex(2L, wp), RootOfUnity(2, 1), ctx);
    const Real pi = Real::pi(wp);
    CHECK((v.re() + pi * pi / 12L).abs() < tol_bits(120));
}

TEST_CASE("lerch at a = 1 ties to Li") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Complex s(2.3, 1.7, wp);
    const RootOfUnity z(3, 2);
    const Complex phi = lerch_direct(s, 1, z, ctx);
    const Complex li = li_direct(s, z, ctx);
    const Complex zval = unit_root(2, 3, wp);
    CHECK((li - zval * phi).abs() < tol_bits(ctx.precision - 4));

    const Complex phi1 = lerch_direct(Complex(2L, wp), 1, RootOfUnity(), ctx);
    const Real pi = Real::pi(wp);
    CHECK((phi1.re() - pi * pi / 6L).abs() < tol_bits(120));
}

TEST_CASE("domain checks reject bad inputs") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    CHECK_THROWS_AS(lerch_direct(Complex(2L, wp), mpq_class(-1, 2), RootOfUnity(), ctx),
                    DomainError);
    CHECK_THROWS_AS(li_direct(Complex(1L, wp), RootOfUnity(), ctx), DomainError);
    EvalContext bad;
    bad.precision = 4;
    CHECK_THROWS_AS(li_direct(Complex(2L, wp), RootOfUnity(), bad), DomainError);
}

TEST_CASE("tight term budgets raise ConvergenceFailure") {
    EvalContext ctx;
    ctx.max_terms = 16;
    const mpfr_prec_t wp = ctx.working_prec();
    CHECK_THROWS_AS(li_direct(Complex(1.01562500001, 0.0, wp), RootOfUnity(), ctx),
                    ConvergenceFailure);
}

TEST_CASE("lerch shift and multiplication residuals vanish") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Real tol = tol_bits(ctx.precision - ctx.guard_bits);
    for (double im : {0.0, 2.5, -4.0}) {
        const Complex s(1.6, im, wp);
        CHECK(lerch_shift_check(s, mpq_class(2, 3), RootOfUnity(3, 1), ctx).abs() < tol);
        CHECK(lerch_multiplication_check(s, mpq_class(2, 3), RootOfUnity(3, 1), 2, ctx).abs() <
              tol);
        CHECK(lerch_multiplication_check(s, mpq_class(1, 2), RootOfUnity(), 3, ctx).abs() < tol);
    }
}

TEST_CASE("taylor expansion residual is small at depth and decays") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Complex s(2.2, -1.3, wp);
    const RootOfUnity z(4, 1);
    const Real r16 = taylor_expansion_check(s, mpq_class(1, 2), z, 16, ctx).abs();
    const Real r48 = taylor_expansion_check(s, mpq_class(1, 2), z, 48, ctx).abs();
    CHECK(r48 < r16);
    CHECK(r48 < tol_bits(40));

    EvalContext small(53);
    const Real r_half = taylor_expansion_check(Complex(2.5, 0.0, small.working_prec()),
                                               mpq_class(1, 2), RootOfUnity(), 64, small)
                            .abs();
    CHECK(r_half < tol_bits(40));

    const Real r_third =
        taylor_expansion_check(Complex(2L, wp), mpq_class(-1, 3), RootOfUnity(2, 1), 64, ctx)
            .abs();
    CHECK(r_third < tol_bits(40));
}

TEST_CASE("continuation anchors at nonpositive integers") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Real tol = tol_bits(100);
    Sequences seqs;

    // Li_{-1}(-n) against the exact Bernoulli expression
    for (unsigned n = 0; n <= 8; ++n) {
        const Complex v = li_continue(Complex(-static_cast<long>(n), wp), RootOfUnity(2, 1), ctx);
        const Real want(li_minus1_neg(n, seqs), wp);
        CHECK((v - Complex(want, Real(wp))).abs() < tol);
    }

    const Complex zm1 = zeta_continue(Complex(-1L, wp), ctx);
    CHECK((zm1 - Complex(Real(mpq_class(-1, 12), wp), Real(wp))).abs() < tol);
    const Complex z0 = zeta_continue(Complex(0L, wp), ctx);
    CHECK((z0 - Complex(Real(mpq_class(-1, 2), wp), Real(wp))).abs() < tol);
    CHECK(zeta_continue(Complex(-2L, wp), ctx).abs() < tol);
    CHECK(zeta_continue(Complex(-4L, wp), ctx).abs() < tol);
}

TEST_CASE("pole guards") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    CHECK_THROWS_AS(zeta_continue(Complex(1L, wp), ctx), PoleAtOne);
    CHECK_THROWS_AS(li_continue(Complex(1L, wp), RootOfUnity(), ctx), PoleAtOne);
}

TEST_CASE("ladder agrees with direct summation inside the half-plane") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Real tol = tol_bits(ctx.precision - ctx.guard_bits - 8);
    for (unsigned long q : {1ul, 3ul}) {
        const RootOfUnity z(q, q == 1 ? 0 : 1);
        const Complex s(1.27, 0.9, wp);
        const Complex direct = li_direct(s, z, ctx);
        const Complex stepped = li_continue(s, z, ctx, 1);
        CHECK((direct - stepped).abs() < tol);
    }
}

TEST_CASE("continuation is modulus-independent") {
    EvalContext a, b;
    b.modulus_override = {7, 5};  // 5 != 1 mod 3: rejected for q = 3
    const mpfr_prec_t wp = a.working_prec();
    const Complex s(-0.75, 1.1, wp);
    CHECK_THROWS_AS(li_continue(s, RootOfUnity(3, 1), b, 0), std::invalid_argument);

    b.modulus_override = {7, 13};
    const Complex va = li_continue(s, RootOfUnity(3, 1), a);
    const Complex vb = li_continue(s, RootOfUnity(3, 1), b);
    CHECK((va - vb).abs() < tol_bits(a.precision - a.guard_bits - 8));
}

TEST_CASE("zeta continuation routes agree off the real axis") {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Complex s(-0.5, 0.3, wp);
    const Complex via_zeta = zeta_continue(s, ctx);
    // assemble the eta-function route by hand
    EvalContext boosted(ctx.precision + ctx.guard_bits + 8);
    const Complex eta = li_continue(s, RootOfUnity(2, 1), boosted);
    const Complex factor = pow_complex(Real(2L, wp), Complex(1L, wp) - s) - Complex(1L, wp);
    CHECK((via_zeta - eta / factor).abs() < tol_bits(ctx.precision - ctx.guard_bits - 8));
}

TEST_CASE("rising factor collapses to signed binomials at negative integers") {
    const mpfr_prec_t wp = 128;
    // P_m(-n) = (-1)^m C(n, m)
    for (long n : {3L, 6L}) {
        for (unsigned m = 0; m <= 8; ++m) {
            const Complex p = rising_factor(Complex(-n, wp), m);
            mpz_class want = binomial(static_cast<unsigned long>(n), m);
            if (m % 2 != 0) want = -want;
            CHECK((p - Complex(Real(want, wp), Real(wp))).abs() < tol_bits(100));
        }
    }
}
