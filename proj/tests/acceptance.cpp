// End-to-end acceptance gates: one line per gate, exit code = failure count.
// Everything runs at 128-bit precision against the library's public surface.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "polylog/catalog.hpp"
#include "polylog/recurrences.hpp"

using namespace polylog;

namespace {

int g_failures = 0;

template <typename Body>
void gate(const char* label, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string("threw: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-28s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", label, secs,
                note.empty() ? "" : "  ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

Real real_pow(Real base, unsigned e) {
    Real acc(1L, base.prec());
    for (; e; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

bool identity_suite() {
    EvalContext ctx;
    const auto pts = sample_points(10, 42, ctx.working_prec());

    struct Row {
        IdentityId id;
        unsigned long q, j, k;
    };
    const std::vector<Row> rows = {
        {IdentityId::Ramaswami2, 1, 0, 2},    {IdentityId::Ramaswami3, 1, 0, 3},
        {IdentityId::Ramaswami6, 1, 0, 6},    {IdentityId::ApostolK, 1, 0, 13},
        {IdentityId::ApostolMobius, 1, 0, 12}, {IdentityId::TransMain, 5, 2, 6},
        {IdentityId::TransEuler, 3, 2, 13},   {IdentityId::TransAlt, 4, 1, 5},
        {IdentityId::TransAdd, 6, 1, 7},      {IdentityId::TransSub, 4, 3, 5},
        {IdentityId::MobiusAlt, 2, 1, 3},     {IdentityId::Mobius, 6, 5, 13},
        {IdentityId::MobiusSub, 3, 1, 4},     {IdentityId::MobiusK3, 1, 0, 3},
        {IdentityId::TaHalf, 4, 1, 13},       {IdentityId::GcdFree, 5, 3, 6},
        {IdentityId::AltEven, 2, 1, 9},       {IdentityId::AltOdd, 2, 1, 11},
    };

    bool ok = true;
    for (const Row& r : rows) {
        const ResidualReport rep = verify(instantiate(r.id, r.q, r.j, r.k), pts, ctx);
        if (!rep.pass) {
            std::printf("      residual gate missed: %s q=%lu j=%lu k=%lu\n",
                        identity_name(r.id), r.q, r.j, r.k);
            ok = false;
        }
    }
    const ResidualReport zs = verify(instantiate(IdentityId::ZetaSeries), pts, ctx);
    ok = ok && zs.pass;
    return ok;
}

bool zeta_series_value() {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const ZSeriesRep rep = zseries_representation(mpq_class(-3, 16), 50);

    Real sum(wp);
    for (unsigned m = 1; m <= 50; ++m) {
        const Complex zv = zeta_continue(Complex(2L * m + 1, wp), ctx);
        sum += Real(rep.coeff[m - 1], wp) * zv.re();
    }
    mpz_class p14;
    mpz_ui_pow_ui(p14.get_mpz_t(), 10, 14);
    const Real cap(mpq_class(mpz_class(1), p14), wp);
    return (sum - Real(mpq_class(-3, 16), wp)).abs() < cap;
}

bool closed_form_power_sums() {
    Sequences seqs;
    for (unsigned long q = 2; q <= 8; ++q) {
        for (unsigned long j = 1; j < q; ++j) {
            if (std::gcd(j, q) != 1) continue;
            const RootOfUnity z(q, j);
            for (unsigned long b = 1; b <= 4; ++b) {
                const unsigned long k = b * q + 1;
                for (unsigned m = 1; m <= 10; ++m) {
                    if (seqs.weighted_power_sum_closed(z, k, m) !=
                        weighted_power_sum_direct(z, k, m, +1))
                        return false;
                }
            }
        }
    }
    return true;
}

bool exact_recurrences() {
    Sequences seqs;
    for (unsigned long k : {3ul, 5ul, 7ul, 9ul}) {
        for (unsigned n = 1; n <= 30; ++n) {
            if (!check_negint_specializations(n, k, seqs)) return false;
            if (!check_bernoulli_recurrences(n, k, seqs)) return false;
        }
    }
    for (unsigned n = 1; n <= 40; ++n)
        if (!check_k3_recurrences(n, seqs)) return false;
    for (unsigned n = 1; n <= 40; ++n) {
        mpz_class want = seqs.tangent_number(n);
        if (n % 2 != 0) want = -want;
        if (tangent_via_recurrence(n, TangentVariant::Mod3) != want) return false;
        if (tangent_via_recurrence(n, TangentVariant::Mod5) != want) return false;
    }
    return true;
}

bool tangent_congruences() {
    Sequences seqs;
    const CongruenceReport rep = congruence_scan(50, seqs);
    if (!rep.pass || rep.t1 != 1 || rep.rows.size() != 49) return false;
    for (const CongruenceRow& r : rep.rows) {
        if (!r.pass || r.mod3 == 0) return false;
        if (r.mod10 != 2 && r.mod10 != 6) return false;
    }
    return true;
}

bool continuation_anchors() {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Real tol = Real::pow2(-100, wp);
    const RootOfUnity minus1(2, 1);

    for (unsigned n = 0; n <= 20; ++n) {
        const Complex got = li_continue(Complex(-(long)n, wp), minus1, ctx);
        const Real want(li_minus1_neg(n, ctx.seqs), wp);
        if ((got.re() - want).abs() >= tol || got.im().abs() >= tol) return false;
    }

    const Complex zm1 = zeta_continue(Complex(-1L, wp), ctx);
    if ((zm1.re() - Real(mpq_class(-1, 12), wp)).abs() >= tol || zm1.im().abs() >= tol)
        return false;
    for (long k = 1; k <= 5; ++k) {
        if (zeta_continue(Complex(-2 * k, wp), ctx).abs() >= tol) return false;
    }

    // simple pole: (s - 1) zeta(s) near 1 with residue 1
    const Real eps = Real::pow2(-20, wp);
    const Complex near_one(Real(1L, wp) + eps, Real(wp));
    const Complex scaled = zeta_continue(near_one, ctx) * eps;
    return (scaled - Complex(1L, wp)).abs() < Real::pow2(-10, wp);
}

bool cross_modulus_agreement() {
    std::mt19937_64 gen(2024);
    const auto unif = [&] { return (double)(gen() >> 11) * 0x1.0p-53; };

    EvalContext base;
    const mpfr_prec_t wp = base.working_prec();
    const Real gate = Real::pow2(-(base.precision - base.guard_bits - 8), wp);

    for (int i = 0; i < 50; ++i) {
        const unsigned long q = (unsigned long)(i % 4) + 1;
        const Complex s(-3.0 + 4.0 * unif(), -5.0 + 10.0 * unif(), wp);
        const RootOfUnity z(q, q == 1 ? 0 : 1);

        EvalContext a, b;
        a.modulus_override = {q + 1, 2 * q + 1};
        b.modulus_override = {3 * q + 1, 2 * q + 1};
        const Complex va = li_continue(s, z, a);
        const Complex vb = li_continue(s, z, b);

        Real scale = va.abs();
        if (scale < 1) scale = Real(1L, wp);
        if ((va - vb).abs() >= gate * scale) return false;
    }
    return true;
}

bool taylor_decay() {
    EvalContext ctx;
    const mpfr_prec_t wp = ctx.working_prec();
    const Real floor = Real::pow2(-(ctx.precision - ctx.guard_bits - 6), wp);

    struct Case {
        double re, im;
        unsigned long q, j;
        mpq_class a;
    };
    const std::vector<Case> cases = {
        {2.3, 1.1, 1, 0, mpq_class(9, 10)}, {1.8, -0.7, 2, 1, mpq_class(9, 10)},
        {3.0, 0.0, 3, 1, mpq_class(1, 2)},  {2.5, 2.0, 4, 1, mpq_class(3, 4)},
        {1.9, 0.3, 6, 5, mpq_class(2, 3)},
    };

    for (const Case& c : cases) {
        const Complex s(c.re, c.im, wp);
        const RootOfUnity z(c.q, c.j);
        const Real r10 = taylor_expansion_check(s, c.a, z, 10, ctx).abs();
        const Real r20 = taylor_expansion_check(s, c.a, z, 20, ctx).abs();
        const Real r40 = taylor_expansion_check(s, c.a, z, 40, ctx).abs();

        const Real a10 = real_pow(Real(c.a, wp).abs(), 10);
        // each doubling of M must shrink the residual by about |a|^M, with
        // polynomial-factor slack, unless it already sits at the noise floor
        if (r20 >= r10 * a10 * 16L + floor) return false;
        if (r40 >= r20 * a10 * a10 * 16L + floor) return false;
        if (r20 > floor * 64L && r40 >= r20) return false;
        if (r10 > floor * 64L && r20 >= r10) return false;
    }
    return true;
}

}  // namespace

int main() {
    gate("identity suite", identity_suite);
    gate("zeta series value", zeta_series_value);
    gate("closed-form power sums", closed_form_power_sums);
    gate("exact recurrences", exact_recurrences);
    gate("tangent congruences", tangent_congruences);
    gate("continuation anchors", continuation_anchors);
    gate("cross-modulus agreement", cross_modulus_agreement);
    gate("taylor decay", taylor_decay);

    if (g_failures == 0)
        std::printf("all gates passed\n");
    else
        std::printf("%d gate(s) failed\n", g_failures);
    return g_failures;
}
