#include "polylog/analytic.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <utility>

namespace polylog {

namespace {

Real margin_line(mpfr_prec_t prec) { return Real(1.0 + kHalfPlaneMargin, prec); }

void require_half_plane(const Complex& s) {
    if (!(s.re() > margin_line(s.prec()))) {
        throw DomainError("Re(s) must exceed 1 + 2^-8 for direct summation");
    }
}

Complex embed_weight(const Cyclotomic& w, mpfr_prec_t wp) {
    if (w.is_rational()) return Complex(Real(w.rational(), wp), Real(wp));
    return w.embed(wp);
}

// z^e as a high-precision complex value.
Complex root_power(const RootOfUnity& z, unsigned long e, mpfr_prec_t wp) {
    return unit_root(static_cast<long>((z.j * (e % z.q)) % z.q), static_cast<long>(z.q), wp);
}

}  // namespace

void EvalContext::validate() const {
    if (precision < 16) throw DomainError("precision must be at least 16 bits");
    if (guard_bits < 8) throw DomainError("guard_bits must be at least 8");
    if (max_terms < 16) throw DomainError("max_terms must be at least 16");
}

std::vector<unsigned long> EvalContext::moduli_for(unsigned long q) const {
    if (q == 0) throw DomainError("root order must be positive");
    if (!modulus_override.empty()) {
        for (unsigned long k : modulus_override) {
            if (k < 2 || k % q != 1 % q) {
                throw std::invalid_argument("modulus must be >= 2 and congruent to 1 mod q");
            }
        }
        return modulus_override;
    }
    return {q + 1, 2 * q + 1, 3 * q + 1};
}

Real EvalContext::degeneracy_threshold(mpfr_prec_t at) const {
    return Real::pow2(-(precision / 4), at);
}

Complex rising_factor(const Complex& s, unsigned m) {
    Complex p(1L, s.prec());
    for (unsigned i = 0; i < m; ++i) p = p * (s + static_cast<long>(i)) / static_cast<long>(i + 1);
    return p;
}

namespace detail {

namespace {

// Tail sum_{t>=0} (t+w)^(-s) for real w > 1 by the Euler-Maclaurin expansion.
// The periodized-Bernoulli bound |B~_{2v}(x)| <= |B_{2v}| certifies the
// remainder after V correction terms as at most
//   |B_{2V+2}|/(2V+2)! * |(s)_{2V+2}| * w^(-sigma-2V-1) / (sigma+2V+1).
// Returns nothing when the bound stops shrinking before reaching abs_target
// (w too small for the requested accuracy).
std::optional<Complex> hurwitz_tail(const Complex& s, const Real& w, const Real& abs_target,
                                    mpfr_prec_t wp, Sequences& seqs) {
    const Real sigma = s.re();
    const Complex s1 = s - 1L;
    Complex h = pow_complex(w, -s1) / s1;  // w^(1-s)/(s-1)
    const Complex wns = pow_complex(w, -s);
    h += wns / 2L;

    Complex rise_term = s;                                // (s)_{2v-1} at v=1
    Complex rise_bound = s * (s + 1L) * (s + 2L) * (s + 3L);  // (s)_{2v+2} at v=1
    Complex wpow = wns / w;                               // w^(-s-2v+1) at v=1
    const Real w2 = w * w;
    Real wb = wpow.abs() / w2;                            // w^(-sigma-2v-1) at v=1
    mpz_class fact = 2;                                   // (2v)! at v=1
    Real prev_bound(wp);
    bool have_prev = false;

    for (unsigned v = 1; v <= static_cast<unsigned>(wp); ++v) {
        mpq_class c = seqs.bernoulli_number(2 * v) / mpq_class(fact);
        h += wpow * rise_term * Real(c, wp);

        fact *= mpz_class(2 * v + 1) * mpz_class(2 * v + 2);  // (2v+2)!
        mpq_class cb = ::abs(seqs.bernoulli_number(2 * v + 2)) / mpq_class(fact);
        Real bound = Real(cb, wp) * rise_bound.abs() * wb / (sigma + static_cast<long>(2 * v + 1));
        if (bound < abs_target) return h;
        if (have_prev && !(bound < prev_bound)) return std::nullopt;
        prev_bound = bound;
        have_prev = true;

        rise_term = rise_term * (s + static_cast<long>(2 * v - 1)) * (s + static_cast<long>(2 * v));
        rise_bound =
            rise_bound * (s + static_cast<long>(2 * v + 2)) * (s + static_cast<long>(2 * v + 3));
        wpow = wpow / w2;
        wb = wb / w2;
    }
    return std::nullopt;
}

}  // namespace

Complex dirichlet_value(const Complex& s, const mpq_class& a, long start_n, const RootOfUnity& z,
                        long tol_bits, mpfr_prec_t wp, long max_terms, Sequences& seqs) {
    const Complex sw = s.round_to(wp);
    require_half_plane(sw);
    if (a + start_n <= 0) throw DomainError("series offset must keep all denominators positive");

    const unsigned long q = z.q;
    std::vector<Complex> ztab;
    ztab.reserve(q);
    for (unsigned long r = 0; r < q; ++r) ztab.push_back(root_power(z, r, wp));

    const Real sigma = sw.re();
    const Complex neg_s = -sw;
    const Real apx(a, wp);
    const Real tol = Real::pow2(-tol_bits, wp);
    const Real one(1L, wp);
    const Real qr(static_cast<long>(q), wp);

    Complex sum(wp);
    long n = start_n;
    long em_cut = static_cast<long>(q) * (static_cast<long>(wp) / 8 + 12);

    while (true) {
        for (unsigned long r = 0; r < q; ++r) {
            Real base = apx + n;
            sum += ztab[static_cast<unsigned long>(n) % q] * pow_complex(base, neg_s);
            ++n;
        }

        Real scale = sum.abs();
        if (scale < one) scale = one;
        const Real target = tol * scale;

        // integral bound on the remaining absolute tail:
        // sum_{t>=n} (t+a)^(-sigma) <= (n-1+a)^(1-sigma)/(sigma-1)
        const Real edge = apx + (n - 1);
        const Real ib = ((one - sigma) * edge.log()).exp() / (sigma - 1L);
        if (ib < target) return sum;

        if (n - start_n >= em_cut) {
            const Complex qs = pow_complex(qr, neg_s);
            const Real per_r = target.ldexp(-2) / (qr * qs.abs());
            Complex tail(wp);
            bool ok = true;
            for (unsigned long r = 0; r < q && ok; ++r) {
                const Real w = (apx + (n + static_cast<long>(r))) / qr;
                auto t = hurwitz_tail(sw, w, per_r, wp, seqs);
                if (!t) {
                    ok = false;
                } else {
                    tail += ztab[static_cast<unsigned long>(n + static_cast<long>(r)) % q] * *t;
                }
            }
            if (ok) return sum + qs * tail;
            em_cut *= 2;
        }

        if (n - start_n > max_terms) {
            throw ConvergenceFailure("series did not certify its tail within the term budget");
        }
    }
}

Complex translation_sum(const Complex& s, unsigned long k, unsigned m_start,
                        const std::function<Cyclotomic(unsigned)>& weight,
                        const mpq_class& weight_cap, unsigned long weight_base,
                        const std::function<Complex(unsigned)>& li_at, long tol_bits,
                        mpfr_prec_t wp, long max_terms) {
    const Complex sw = s.round_to(wp);
    const Real one(1L, wp);
    const Real kinv = one / static_cast<long>(k);
    const Real rho = one - one / static_cast<long>(2 * k);
    const Real tol = Real::pow2(-tol_bits, wp);

    Complex p(1L, wp);
    for (unsigned i = 0; i < m_start; ++i) {
        p = p * (sw + static_cast<long>(i)) / static_cast<long>(i + 1);
    }
    Complex kpow = pow_complex(Real(static_cast<long>(k), wp), -(sw + static_cast<long>(m_start)));

    // majorant track: |term_m| <= front * t_hat_m with
    // t_hat_m = prod_{i<m} (|s|+i)/(i+1) * (base/k)^m and
    // front = 2 * cap * k^(-Re s) * 2, the last 2 bounding |Li(s+m)| once
    // Re(s) + m >= 2
    const Real s_abs = sw.abs();
    const Real hk = Real(static_cast<long>(weight_base), wp) * kinv;
    mpq_class cap4 = weight_cap;
    cap4 *= 4;
    const Real front =
        Real(cap4, wp) * pow_complex(Real(static_cast<long>(k), wp), -sw).abs();
    Real t_hat = one;
    for (unsigned i = 0; i < m_start; ++i) {
        t_hat = t_hat * (s_abs + static_cast<long>(i)) / static_cast<long>(i + 1);
        t_hat = t_hat * hk;
    }

    Complex sum(wp);
    // window of the last three nonzero term magnitudes, newest first
    Real a1(wp), a2(wp), a3(wp);
    long i1 = 0, i2 = 0, i3 = 0;
    int have = 0;

    for (unsigned m = m_start;; ++m) {
        if (m > m_start) {
            p = p * (sw + static_cast<long>(m) - 1L) / static_cast<long>(m);
            kpow = kpow * kinv;
            t_hat = t_hat * (s_abs + (static_cast<long>(m) - 1L)) / static_cast<long>(m);
            t_hat = t_hat * hk;
        }
        if (p.is_zero()) break;  // rising factor vanished: the sum is exactly finite
        if (static_cast<long>(m - m_start) > max_terms) {
            throw ConvergenceFailure("translation sum did not certify its tail");
        }

        const Cyclotomic w = weight(m);
        bool window_full = false;
        if (!w.is_zero()) {
            const Complex term = p * kpow * embed_weight(w, wp) * li_at(m);
            sum += term;
            const Real at = term.abs();
            if (!at.is_zero()) {
                i3 = i2, a3 = a2;
                i2 = i1, a2 = a1;
                i1 = static_cast<long>(m), a1 = at;
                if (have < 3)
                    ++have;
                else
                    window_full = true;
            }
        }

        Real scale = sum.abs();
        if (scale < one) scale = one;

        if (window_full && a1 < a2 && a2 < a3) {
            auto ratio_ok = [&](const Real& num, const Real& den, long stride) {
                Real cap = den;
                for (long i = 0; i < stride; ++i) cap = cap * rho;
                return num < cap;
            };
            if (ratio_ok(a1, a2, i1 - i2) && ratio_ok(a2, a3, i2 - i3)) {
                const Real tail = a1 * rho / (one - rho);
                if (tail < tol * scale) break;
            }
        }

        // rigorous exit: past this m every Li value has Re >= 2, and the
        // majorant terms shrink by at least rhat per step
        if (!(sw.re() + static_cast<long>(m) < one)) {
            Real step = (s_abs + static_cast<long>(m)) / static_cast<long>(m + 1);
            if (step < one) step = one;
            const Real rhat = hk * step;
            if (rhat < one) {
                const Real tail = front * t_hat * rhat / (one - rhat);
                if (tail < tol * scale) break;
            }
        }
    }
    return sum;
}

}  // namespace detail

Complex lerch_direct(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                     EvalContext& ctx) {
    ctx.validate();
    if (sgn(a) <= 0) throw DomainError("lerch offset a must be positive");
    const mpfr_prec_t wp = ctx.working_prec();
    return detail::dirichlet_value(s.round_to(wp), a, 0, z, ctx.precision + ctx.guard_bits, wp,
                                   ctx.max_terms, ctx.seqs)
        .round_to(ctx.precision);
}

Complex li_direct(const Complex& s, const RootOfUnity& z, EvalContext& ctx) {
    ctx.validate();
    const mpfr_prec_t wp = ctx.working_prec();
    return detail::dirichlet_value(s.round_to(wp), 0, 1, z, ctx.precision + ctx.guard_bits, wp,
                                   ctx.max_terms, ctx.seqs)
        .round_to(ctx.precision);
}

Complex lerch_shift_check(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                          EvalContext& ctx) {
    ctx.validate();
    if (sgn(a) <= 0) throw DomainError("lerch offset a must be positive");
    const mpfr_prec_t wp = ctx.working_prec();
    const long tb = ctx.precision + ctx.guard_bits;
    const Complex sw = s.round_to(wp);
    const Complex lhs = detail::dirichlet_value(sw, a, 0, z, tb, wp, ctx.max_terms, ctx.seqs);
    const Complex shifted =
        detail::dirichlet_value(sw, a + 1, 0, z, tb, wp, ctx.max_terms, ctx.seqs);
    const Complex apow = pow_complex(Real(a, wp), -sw);
    return (lhs - root_power(z, 1, wp) * shifted - apow).round_to(ctx.precision);
}

Complex lerch_multiplication_check(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                                   unsigned long k, EvalContext& ctx) {
    ctx.validate();
    if (k < 1) throw DomainError("multiplication step k must be positive");
    if (sgn(a) <= 0) throw DomainError("lerch offset a must be positive");
    const mpfr_prec_t wp = ctx.working_prec();
    const long tb = ctx.precision + ctx.guard_bits;
    const Complex sw = s.round_to(wp);

    const Complex lhs = detail::dirichlet_value(sw, a * static_cast<unsigned long>(k), 0, z, tb, wp,
                                                ctx.max_terms, ctx.seqs);
    const RootOfUnity zk = z.pow(static_cast<long>(k));
    Complex acc(wp);
    for (unsigned long i = 0; i < k; ++i) {
        const mpq_class ai = a + mpq_class(i) / k;
        acc += root_power(z, i, wp) *
               detail::dirichlet_value(sw, ai, 0, zk, tb, wp, ctx.max_terms, ctx.seqs);
    }
    const Complex rhs = pow_complex(Real(static_cast<long>(k), wp), -sw) * acc;
    return (lhs - rhs).round_to(ctx.precision);
}

Complex taylor_expansion_check(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                               unsigned M, EvalContext& ctx) {
    ctx.validate();
    if (::abs(a) > mpq_class(9, 10)) throw DomainError("expansion point must satisfy |a| <= 9/10");
    const mpfr_prec_t wp = ctx.working_prec();
    const long tb = ctx.precision + ctx.guard_bits;
    const Complex sw = s.round_to(wp);

    const Complex lhs = root_power(z, 1, wp) * detail::dirichlet_value(sw, a + 1, 0, z, tb, wp,
                                                                       ctx.max_terms, ctx.seqs);

    Complex rhs(wp);
    Complex p(1L, wp);
    mpq_class apow = 1;
    for (unsigned m = 0; m <= M; ++m) {
        if (m > 0) {
            p = p * (sw + static_cast<long>(m) - 1L) / static_cast<long>(m);
            apow *= -a;
        }
        if (apow == 0) break;
        const Complex li = detail::dirichlet_value(sw + static_cast<long>(m), 0, 1, z, tb, wp,
                                                   ctx.max_terms, ctx.seqs);
        rhs += p * li * Real(apow, wp);
    }
    return (lhs - rhs).round_to(ctx.precision);
}

Complex li_continue(const Complex& s, const RootOfUnity& z, EvalContext& ctx, long force_min_d) {
    ctx.validate();
    const mpfr_prec_t wpc = ctx.continuation_prec();
    const Complex sw = s.round_to(wpc);
    const Real thresh = ctx.degeneracy_threshold(wpc);

    if (z.is_one() && (sw - 1L).abs() < thresh) {
        throw PoleAtOne("Li at z = 1 has its pole at s = 1");
    }

    long d = 0;
    {
        const Real line = margin_line(wpc);
        while (!(sw.re() + d > line)) ++d;
    }
    if (force_min_d > d) d = force_min_d;
    if (d == 0) return li_direct(s, z, ctx);

    const auto moduli = ctx.moduli_for(z.q);
    const long tb = static_cast<long>(wpc) - 8;
    const mpfr_prec_t wp_in = wpc + 8;
    const long delta = z.delta();

    std::map<long, Complex> rung;
    auto rung_at = [&](long idx) -> Complex {
        auto it = rung.find(idx);
        if (it != rung.end()) return it->second;
        assert(idx >= d);
        const Complex sj = (sw + idx).round_to(wp_in);
        Complex v = detail::dirichlet_value(sj, 0, 1, z, tb, wp_in, ctx.max_terms, ctx.seqs);
        return rung.emplace(idx, std::move(v)).first->second;
    };

    for (long jj = d - 1; jj >= 0; --jj) {
        const Complex sj = sw + jj;
        bool solved = false;
        Complex value(wpc);

        for (unsigned long k : moduli) {
            // primary form: Li(s)(1 - k^(delta-s)) = sum of shifted values
            const Real kr(static_cast<long>(k), wpc);
            const Complex divisor = Complex(1L, wpc) - pow_complex(kr, Complex(delta, wpc) - sj);
            if (!(divisor.abs() < thresh)) {
                auto weight = [&](unsigned m) { return weighted_power_sum_direct(z, k, m, -1); };
                auto li_at = [&](unsigned m) { return rung_at(jj + static_cast<long>(m)); };
                const Complex sum = detail::translation_sum(
                    sj, k, 1, weight, mpq_class(k - 1), k - 1, li_at, tb, wpc, ctx.max_terms);
                value = sum / divisor;
                solved = true;
                break;
            }

            // fallback: the zero-sum variant one step down, solved for its
            // m = 1 term (coefficient structure differs, so the divisor
            // zeros do not coincide with the primary form's).
            const Complex sp = sj - 1L;
            const Cyclotomic a1 = -(weighted_power_sum_direct(z, k, 1, +1) +
                                    weighted_power_sum_direct(z, k, 1, -1));
            const Complex lead = sp * embed_weight(a1, wpc);
            if (lead.abs() < thresh) continue;

            Complex finite(wpc);
            for (unsigned long h = 1; h < k; ++h) {
                finite += root_power(z, h, wpc) * pow_complex(Real(static_cast<long>(h), wpc), -sp);
            }
            auto weight = [&](unsigned m) {
                Cyclotomic w = weighted_power_sum_direct(z, k, m, +1);
                if (m % 2 != 0) w = -w;
                return w - weighted_power_sum_direct(z, k, m, -1);
            };
            auto li_at = [&](unsigned m) { return rung_at(jj + static_cast<long>(m) - 1); };
            const Complex rest = detail::translation_sum(
                sp, k, 2, weight, mpq_class(2 * (k - 1)), k - 1, li_at, tb, wpc, ctx.max_terms);
            const Complex coeff = lead * pow_complex(kr, -(sp + 1L));
            value = (-finite - rest) / coeff;
            solved = true;
            break;
        }

        if (!solved) {
            throw DegenerateDivisor("every modulus degenerates at this ladder point");
        }
        rung.emplace(jj, std::move(value));
    }
    return rung.at(0).round_to(ctx.precision);
}

Complex zeta_continue(const Complex& s, EvalContext& ctx) {
    ctx.validate();
    const mpfr_prec_t wpc = ctx.continuation_prec();
    const Complex sw = s.round_to(wpc);
    const Real thresh = ctx.degeneracy_threshold(wpc);
    if ((sw - 1L).abs() < thresh) throw PoleAtOne("zeta has its pole at s = 1");

    try {
        return li_continue(s, RootOfUnity(), ctx);
    } catch (const DegenerateDivisor&) {
        // zeta(s) = Li_{-1}(s)/(2^(1-s) - 1); compute the numerator with
        // extra headroom so the division cannot eat into the contract.
        const Complex factor =
            pow_complex(Real(2L, wpc), Complex(1L, wpc) - sw) - Complex(1L, wpc);
        if (factor.abs() < thresh) {
            throw DegenerateDivisor("both continuation routes degenerate at this point");
        }
        EvalContext boosted(ctx);
        boosted.precision = ctx.precision + ctx.guard_bits + 8;
        const Complex v = li_continue(s, RootOfUnity(2, 1), boosted);
        return (v / factor).round_to(ctx.precision);
    }
}

}  // namespace polylog
