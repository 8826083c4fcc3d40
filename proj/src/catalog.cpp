#include "polylog/catalog.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "json.hpp"
#include "polylog/recurrences.hpp"

namespace polylog {

namespace {

struct Row {
    IdentityId id;
    const char* name;
    const char* predicate;
};

constexpr Row kRows[] = {
    {IdentityId::Ramaswami2, "ramaswami-2", "z = 1, k = 2 fixed"},
    {IdentityId::Ramaswami3, "ramaswami-3", "z = 1, k = 3 fixed"},
    {IdentityId::Ramaswami6, "ramaswami-6", "z = 1, k = 6 fixed"},
    {IdentityId::ApostolK, "apostol-k", "z = 1, k >= 2"},
    {IdentityId::ApostolMobius, "apostol-mobius", "z = 1, k > 2"},
    {IdentityId::TransMain, "trans-main", "k == 1 (mod q), k >= 2"},
    {IdentityId::TransEuler, "trans-euler", "q >= 2, k == 1 (mod q), k >= 2"},
    {IdentityId::TransAlt, "trans-alt", "k == 1 (mod q), k >= 2"},
    {IdentityId::TransAdd, "trans-add", "k == 1 (mod q), k >= 2"},
    {IdentityId::TransSub, "trans-sub", "k == 1 (mod q), k >= 2"},
    {IdentityId::MobiusAlt, "mobius-alt", "k == 1 (mod q), k >= 2"},
    {IdentityId::Mobius, "mobius", "k == 1 (mod q), k >= 2"},
    {IdentityId::MobiusSub, "mobius-sub", "k == 1 (mod q), k >= 2"},
    {IdentityId::MobiusK3, "mobius-k3", "z = 1, k = 3 fixed"},
    {IdentityId::TaHalf, "ta-half", "k == 1 (mod q), k > 2"},
    {IdentityId::GcdFree, "gcd-free", "k == 1 (mod q), k >= 2"},
    {IdentityId::AltEven, "alt-even", "z = -1, k odd > 2"},
    {IdentityId::AltOdd, "alt-odd", "z = -1, k odd > 2"},
    {IdentityId::ZetaSeries, "zeta-series", "no parameters"},
};

static_assert(sizeof(kRows) / sizeof(kRows[0]) == kIdentityCount);

// z^e at precision wp
Complex root_pw(const RootOfUnity& z, unsigned long e, mpfr_prec_t wp) {
    return unit_root(static_cast<long>((z.j * (e % z.q)) % z.q), static_cast<long>(z.q), wp);
}

// Li_z(s) anywhere: direct summation degrades to the ladder transparently.
Complex li_value(const Complex& s, const RootOfUnity& z, EvalContext& ctx) {
    return z.is_one() ? zeta_continue(s, ctx) : li_continue(s, z, ctx);
}

// sum_{h=1}^{bound} z^(sign*h) h^m with no coprimality filter
Cyclotomic range_weighted_sum(const RootOfUnity& z, unsigned long bound, unsigned m, int sign) {
    Cyclotomic acc(z.q);
    for (unsigned long h = 1; h <= bound; ++h) {
        long e = sign < 0 ? -static_cast<long>(h) : static_cast<long>(h);
        acc += Cyclotomic::from_power(z, e) * mpq_class(int_pow(mpz_class(h), m));
    }
    return acc;
}

struct SideEval {
    EvalContext& ctx;
    RootOfUnity z;
    unsigned long k;
    mpfr_prec_t wp;
    long tb;
    Complex sw;
    std::map<unsigned, Complex> memo;

    Complex li_shift(unsigned m) {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Complex v = li_value(sw + static_cast<long>(m), z, ctx);
        return memo.emplace(m, std::move(v)).first->second;
    }

    // cap, base: the caller's guarantee |weight(m)| <= cap * base^m
    Complex msum(unsigned m_start, const mpq_class& cap, unsigned long base,
                 const std::function<Cyclotomic(unsigned)>& weight) {
        auto li_at = [this](unsigned m) { return li_shift(m); };
        return detail::translation_sum(sw, k, m_start, weight, cap, base, li_at, tb, wp,
                                       ctx.max_terms);
    }

    // 1 - k^(shift - s)
    Complex one_minus_kpow(long shift) {
        return Complex(1L, wp) - pow_complex(Real(static_cast<long>(k), wp),
                                             Complex(shift, wp) - sw);
    }

    // sum_{h=lo}^{hi} z^h h^(-s), optionally only over h coprime to k
    Complex finite_zh(unsigned long lo, unsigned long hi, bool coprime) {
        Complex acc(wp);
        for (unsigned long h = lo; h <= hi; ++h) {
            if (coprime && std::gcd(h, k) != 1) continue;
            acc += root_pw(z, h, wp) * pow_complex(Real(static_cast<long>(h), wp), -sw);
        }
        return acc;
    }

    // sum_{d | k} mu(d) d^(-s) Li_{z^d}(s)
    Complex mobius_lhs() {
        Complex acc(wp);
        for (unsigned long d : divisors(k)) {
            int mu = mobius(d);
            if (mu == 0) continue;
            Complex li = li_value(sw, z.pow(static_cast<long>(d)), ctx);
            acc += li * pow_complex(Real(static_cast<long>(d), wp), -sw) * static_cast<long>(mu);
        }
        return acc;
    }
};

using Sides = std::pair<Complex, Complex>;

Sides eval_zeta_series(const IdentityInstance& inst, EvalContext& ctx) {
    const mpfr_prec_t wp = ctx.working_prec();
    ZSeriesRep rep = zseries_representation(mpq_class(-3, 16), inst.terms);
    Complex rhs(wp);
    for (unsigned m = 1; m <= inst.terms; ++m) {
        const Complex zv = li_value(Complex(static_cast<long>(2 * m + 1), wp), RootOfUnity(), ctx);
        rhs += zv * Real(rep.coeff[m - 1], wp);
    }
    return {Complex(Real(rep.target, wp), Real(wp)), rhs};
}

}  // namespace

const char* identity_name(IdentityId id) {
    for (const Row& r : kRows)
        if (r.id == id) return r.name;
    throw std::invalid_argument("unknown identity id");
}

std::optional<IdentityId> identity_by_name(std::string_view name) {
    for (const Row& r : kRows)
        if (name == r.name) return r.id;
    return std::nullopt;
}

const std::vector<IdentityDescription>& list_identities() {
    static const std::vector<IdentityDescription> all = [] {
        std::vector<IdentityDescription> v;
        for (const Row& r : kRows) v.push_back({r.id, r.name, r.predicate});
        return v;
    }();
    return all;
}

IdentityInstance instantiate(IdentityId id, std::optional<unsigned long> q,
                             std::optional<unsigned long> j, std::optional<unsigned long> k) {
    IdentityInstance inst;
    inst.id = id;

    auto require_z = [&](unsigned long fq, unsigned long fj, const char* what) {
        if ((q && *q != fq) || (j && *j != fj)) throw InvalidModulus(what);
        inst.q = fq;
        inst.j = fj;
    };
    auto require_k = [&](unsigned long fk, const char* what) {
        if (k && *k != fk) throw InvalidModulus(what);
        inst.k = fk;
    };

    switch (id) {
        case IdentityId::Ramaswami2:
            require_z(1, 0, "ramaswami-2 fixes z = 1");
            require_k(2, "ramaswami-2 fixes k = 2");
            return inst;
        case IdentityId::Ramaswami3:
            require_z(1, 0, "ramaswami-3 fixes z = 1");
            require_k(3, "ramaswami-3 fixes k = 3");
            return inst;
        case IdentityId::Ramaswami6:
            require_z(1, 0, "ramaswami-6 fixes z = 1");
            require_k(6, "ramaswami-6 fixes k = 6");
            return inst;
        case IdentityId::MobiusK3:
            require_z(1, 0, "mobius-k3 fixes z = 1");
            require_k(3, "mobius-k3 fixes k = 3");
            return inst;
        case IdentityId::ApostolK:
            require_z(1, 0, "apostol-k fixes z = 1");
            inst.k = k.value_or(2);
            if (inst.k < 2) throw InvalidModulus("apostol-k needs k >= 2");
            return inst;
        case IdentityId::ApostolMobius:
            require_z(1, 0, "apostol-mobius fixes z = 1");
            inst.k = k.value_or(3);
            if (inst.k <= 2) throw InvalidModulus("apostol-mobius needs k > 2");
            return inst;
        case IdentityId::AltEven:
        case IdentityId::AltOdd:
            require_z(2, 1, "alternating identities fix z = -1");
            inst.k = k.value_or(3);
            if (inst.k <= 2 || inst.k % 2 == 0)
                throw InvalidModulus("alternating identities need odd k > 2");
            return inst;
        case IdentityId::ZetaSeries:
            if (q || j || k) throw InvalidModulus("zeta-series takes no parameters");
            inst.q = 1;
            inst.j = 0;
            inst.k = 0;
            return inst;
        default:
            break;
    }

    // the root-of-unity translation family
    inst.q = q.value_or(id == IdentityId::TransEuler ? 2 : 1);
    if (inst.q == 0) throw InvalidModulus("q must be positive");
    if (id == IdentityId::TransEuler && inst.q < 2) throw InvalidModulus("trans-euler needs q >= 2");

    if (inst.q == 1) {
        inst.j = 0;  // any j names the same z = 1
    } else {
        inst.j = j.value_or(1) % inst.q;
        if (std::gcd(inst.j, inst.q) != 1)
            throw NotPrimitiveRoot("j must be coprime to q");
    }

    const bool needs_k3 = id == IdentityId::TaHalf;
    inst.k = k.value_or(needs_k3 && inst.q + 1 <= 2 ? 2 * inst.q + 1 : inst.q + 1);
    if (inst.k < 2) throw InvalidModulus("k must be >= 2");
    if (needs_k3 && inst.k <= 2) throw InvalidModulus("ta-half needs k > 2");
    if (inst.k % inst.q != 1 % inst.q)
        throw InvalidModulus("k must be congruent to 1 mod q");
    return inst;
}

Sides eval_sides(const IdentityInstance& inst, const Complex& s, EvalContext& ctx) {
    ctx.validate();
    if (inst.id == IdentityId::ZetaSeries) return eval_zeta_series(inst, ctx);

    const mpfr_prec_t wp = ctx.working_prec();
    const long tb = ctx.precision + ctx.guard_bits;
    const RootOfUnity z = inst.z();
    const unsigned long k = inst.k;
    SideEval ev{ctx, z, k, wp, tb, s.round_to(wp), {}};
    Sequences& seqs = ctx.seqs;

    auto parity2 = [](unsigned m, mpq_class v) {
        return Cyclotomic(1, m % 2 == 0 ? 2 * v : mpq_class(0));
    };

    switch (inst.id) {
        case IdentityId::Ramaswami2: {
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(1);
            const Complex rhs = ev.msum(1, 1, 1, [](unsigned) { return Cyclotomic::one(1); });
            return {lhs, rhs};
        }
        case IdentityId::Ramaswami3:
        case IdentityId::Ramaswami6: {
            Complex lhs(wp);
            if (inst.id == IdentityId::Ramaswami3) {
                lhs = ev.li_shift(0) * ev.one_minus_kpow(1);
            } else {
                // 1 - 2^-s - 3^-s - 6^-s
                Complex f(1L, wp);
                for (long d : {2L, 3L, 6L}) f -= pow_complex(Real(d, wp), -ev.sw);
                lhs = ev.li_shift(0) * f;
            }
            const Complex rhs =
                Complex(1L, wp) +
                ev.msum(1, 2, 1, [&](unsigned m) { return parity2(m, 1); });
            return {lhs, rhs};
        }
        case IdentityId::ApostolK: {
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(1);
            const Complex rhs = ev.msum(
                1, k - 1, k - 1, [&](unsigned m) { return Cyclotomic(1, seqs.power_sum(k, m)); });
            return {lhs, rhs};
        }
        case IdentityId::ApostolMobius: {
            Complex factor(wp);
            for (unsigned long d : divisors(k)) {
                int mu = mobius(d);
                if (mu == 0) continue;
                factor += pow_complex(Real(static_cast<long>(d), wp), -ev.sw) *
                          static_cast<long>(mu);
            }
            const Complex lhs = ev.li_shift(0) * factor;
            const Complex rhs =
                ev.finite_zh(1, k / 2, true) +
                ev.msum(0, 2 * (k / 2), k / 2,
                        [&](unsigned m) { return parity2(m, apostol_phi(m, k)); });
            return {lhs, rhs};
        }
        case IdentityId::TransMain: {
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(z.delta());
            const Complex rhs = ev.msum(
                1, k - 1, k - 1, [&](unsigned m) { return weighted_power_sum_direct(z, k, m, -1); });
            return {lhs, rhs};
        }
        case IdentityId::TransEuler: {
            const unsigned long q = z.q;
            const unsigned long b = (k - 1) / q;
            // (z^j - 1) / (z^j (z - 1)) = (1 + z + ... + z^(j-1)) z^-j
            std::vector<Cyclotomic> fac;
            Cyclotomic run(q);
            for (unsigned long jj = 1; jj < q; ++jj) {
                run += Cyclotomic::from_power(z, static_cast<long>(jj) - 1);
                fac.push_back(run * Cyclotomic::from_power(z, -static_cast<long>(jj)));
            }
            // E_{q,m}(j) - E_{q,m}(j + bq) via the exact translation law
            // E_{q,m}(x + q) - E_{q,m}(x) = q ((x+1)^m - x^m); the literal
            // polynomial values grow like m! and are unusable at this depth.
            auto ediff = [&](unsigned m, unsigned long jj) {
                mpz_class acc = 0;
                for (unsigned long r = 0; r < b; ++r) {
                    mpz_class base(static_cast<unsigned long>(jj + r * q));
                    acc += int_pow(base + 1, m) - int_pow(base, m);
                }
                acc *= -static_cast<long>(q);
                return mpq_class(acc);
            };
            auto weight = [&](unsigned m) {
                Cyclotomic acc(q);
                for (unsigned long jj = 1; jj < q; ++jj) acc += fac[jj - 1] * ediff(m, jj);
                return acc;
            };
            // |fac_jj| <= jj and |ediff(m, jj)| <= q b (k-1)^m, so the weight
            // stays within (k-1) q (q-1)/2 * (k-1)^m
            mpz_class capz(static_cast<unsigned long>(k - 1));
            capz *= q;
            capz *= q - 1;
            capz /= 2;
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(0);
            const Complex rhs = ev.msum(1, mpq_class(capz), k - 1, weight) / static_cast<long>(q);
            return {lhs, rhs};
        }
        case IdentityId::TransAlt: {
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(z.delta());
            auto weight = [&](unsigned m) {
                Cyclotomic w = weighted_power_sum_direct(z, k, m, +1);
                return m % 2 == 0 ? w : -w;
            };
            return {lhs, ev.finite_zh(1, k - 1, false) + ev.msum(1, k - 1, k - 1, weight)};
        }
        case IdentityId::TransAdd: {
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(z.delta()) * 2L;
            auto weight = [&](unsigned m) {
                Cyclotomic w = weighted_power_sum_direct(z, k, m, +1);
                if (m % 2 != 0) w = -w;
                return w + weighted_power_sum_direct(z, k, m, -1);
            };
            return {lhs, ev.finite_zh(1, k - 1, false) + ev.msum(1, 2 * (k - 1), k - 1, weight)};
        }
        case IdentityId::TransSub: {
            auto weight = [&](unsigned m) {
                Cyclotomic w = weighted_power_sum_direct(z, k, m, +1);
                if (m % 2 != 0) w = -w;
                return w - weighted_power_sum_direct(z, k, m, -1);
            };
            return {Complex(wp),
                    ev.finite_zh(1, k - 1, false) + ev.msum(1, 2 * (k - 1), k - 1, weight)};
        }
        case IdentityId::MobiusAlt: {
            auto weight = [&](unsigned m) {
                Cyclotomic w = coprime_weighted_sum(z, k, m, +1, false);
                return m % 2 == 0 ? w : -w;
            };
            return {ev.mobius_lhs(), ev.finite_zh(1, k, true) + ev.msum(0, k - 1, k - 1, weight)};
        }
        case IdentityId::Mobius: {
            auto weight = [&](unsigned m) { return coprime_weighted_sum(z, k, m, -1, false); };
            return {ev.mobius_lhs(), ev.msum(0, k - 1, k - 1, weight)};
        }
        case IdentityId::MobiusSub: {
            auto weight = [&](unsigned m) {
                Cyclotomic w = coprime_weighted_sum(z, k, m, +1, false);
                if (m % 2 != 0) w = -w;
                return w - coprime_weighted_sum(z, k, m, -1, false);
            };
            return {Complex(wp),
                    ev.finite_zh(1, k, true) + ev.msum(0, 2 * (k - 1), k - 1, weight)};
        }
        case IdentityId::MobiusK3: {
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(1);
            auto weight = [](unsigned m) {
                return Cyclotomic(1, mpq_class(1 + int_pow(mpz_class(2), m)));
            };
            return {lhs, ev.msum(1, 2, 2, weight)};
        }
        case IdentityId::TaHalf: {
            auto weight = [&](unsigned m) {
                Cyclotomic w = coprime_weighted_sum(z, k, m, +1, true);
                if (m % 2 != 0) w = -w;
                return w + coprime_weighted_sum(z, k, m, -1, true);
            };
            return {ev.mobius_lhs(),
                    ev.finite_zh(1, k / 2, true) + ev.msum(0, 2 * (k / 2), k / 2, weight)};
        }
        case IdentityId::GcdFree: {
            Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(0);
            if (k % 2 == 0) {
                const Complex phi_half = detail::dirichlet_value(ev.sw, mpq_class(1, 2), 0, z, tb,
                                                                 wp, ctx.max_terms, seqs);
                lhs += pow_complex(Real(static_cast<long>(k), wp), -ev.sw) *
                       root_pw(z, k / 2, wp) * phi_half;
            }
            auto weight = [&](unsigned m) {
                Cyclotomic w = range_weighted_sum(z, k / 2, m, +1);
                if (m % 2 != 0) w = -w;
                return w + range_weighted_sum(z, k / 2, m, -1);
            };
            return {lhs, ev.finite_zh(1, k / 2, false) + ev.msum(0, 2 * (k / 2), k / 2, weight)};
        }
        case IdentityId::AltEven: {
            const Complex lhs = ev.li_shift(0) * ev.one_minus_kpow(0) * 2L;
            auto weight = [&](unsigned m) { return parity2(m, alt_power_sum(m, k)); };
            return {lhs, ev.finite_zh(1, k - 1, false) + ev.msum(1, 2 * (k - 1), k - 1, weight)};
        }
        case IdentityId::AltOdd: {
            auto weight = [&](unsigned m) {
                return Cyclotomic(1, m % 2 != 0 ? 2 * alt_power_sum(m, k) : mpq_class(0));
            };
            return {ev.finite_zh(1, k - 1, false), ev.msum(1, 2 * (k - 1), k - 1, weight)};
        }
        default:
            throw std::invalid_argument("unknown identity id");
    }
}

std::vector<Complex> sample_points(unsigned n, unsigned long seed, mpfr_prec_t prec) {
    std::mt19937_64 gen(seed);
    auto uniform = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
    std::vector<Complex> pts;
    pts.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        const double re = 1.1 + 2.9 * uniform();
        const double im = -5.0 + 10.0 * uniform();
        pts.emplace_back(re, im, prec);
    }
    return pts;
}

ResidualReport verify(const IdentityInstance& inst, const std::vector<Complex>& points,
                      EvalContext& ctx) {
    ctx.validate();
    if (points.empty()) throw std::invalid_argument("verify needs at least one point");

    const long p = ctx.precision;
    ResidualReport rep{inst, p, 0, {}, Real(p), Real(1L, p), false};
    bool all_ok = true;
    for (const Complex& s : points) {
        try {
            auto [lhs, rhs] = eval_sides(inst, s, ctx);
            Real resid = (lhs - rhs).abs().round_to(p);
            Real la = lhs.abs().round_to(p);
            if (resid > rep.max_residual) rep.max_residual = resid;
            if (la > rep.scale) rep.scale = la;
            rep.points.push_back({s, std::move(resid), std::move(la), {}});
        } catch (const std::exception& e) {
            all_ok = false;
            rep.points.push_back({s, Real(p), Real(p), e.what()});
        }
    }
    Real tol = Real::pow2(-(p - ctx.guard_bits - 8), p) * rep.scale;
    if (inst.id == IdentityId::ZetaSeries) {
        // a partial sum of M terms carries truncation below (M+1)(4/9)^M
        const unsigned M = inst.terms;
        mpz_class num = int_pow(mpz_class(4), M);
        num *= M + 1;
        mpq_class trunc(num, int_pow(mpz_class(9), M));
        trunc.canonicalize();
        const Real tr(trunc, p);
        if (tol < tr) tol = tr;
    }
    rep.pass = all_ok && rep.max_residual < tol;
    return rep;
}

std::string ResidualReport::json() const {
    nlohmann::ordered_json out;
    out["identity"] = identity_name(inst.id);
    out["q"] = inst.q;
    out["j"] = inst.j;
    out["k"] = inst.k;
    if (inst.id == IdentityId::ZetaSeries) out["terms"] = inst.terms;
    out["precision_bits"] = precision;
    out["seed"] = seed;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const PointResult& pr : points) {
        nlohmann::ordered_json row;
        row["re"] = pr.s.re().str();
        row["im"] = pr.s.im().str();
        row["residual"] = pr.error.empty() ? pr.residual.str(8) : "inf";
        if (!pr.error.empty()) row["error"] = pr.error;
        pts.push_back(std::move(row));
    }
    out["points"] = std::move(pts);
    out["max_residual"] = max_residual.str(8);
    out["pass"] = pass;
    return out.dump(2);
}

}  // namespace polylog
