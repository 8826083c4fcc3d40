#include "polylog/recurrences.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace polylog {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

mpz_class two_pow_minus1(unsigned long e) { return pow_ui(2, e) - 1; }

mpq_class bern_over_index(Sequences& seqs, unsigned i) {
    mpq_class b = seqs.bernoulli_number(2 * i);
    b /= 2 * i;
    b.canonicalize();
    return b;
}

}  // namespace

mpq_class li_minus1_neg(unsigned n, Sequences& seqs) {
    if (n == 0) return mpq_class(-1, 2);
    mpq_class v = seqs.bernoulli_number(n + 1);
    v *= 1 - pow_ui(2, n + 1);
    v /= n + 1;
    v.canonicalize();
    return v;
}

bool check_negint_specializations(unsigned n, unsigned long k, Sequences& seqs) {
    if (n == 0 || k < 3 || k % 2 == 0) throw std::invalid_argument("need n >= 1, k odd >= 3");

    // s = -2n: T(2n,k) + 2 sum_{m=1}^{n} C(2n,2m-1) Li_{-1}(2m-1-2n) k^(2n-2m+1) T(2m-1,k) = 0
    mpq_class lhs_even = alt_power_sum(2 * n, k);
    for (unsigned m = 1; m <= n; ++m) {
        mpq_class term = li_minus1_neg(2 * n - 2 * m + 1, seqs);
        term *= binomial(2 * n, 2 * m - 1);
        term *= pow_ui(k, 2 * n - 2 * m + 1);
        term *= alt_power_sum(2 * m - 1, k);
        term *= 2;
        lhs_even += term;
    }
    if (lhs_even != 0) return false;

    // s = 1-2n: 2 Li_{-1}(1-2n) (1 - k^(2n-1))
    //           = T(2n-1,k) + 2 sum_{m=1}^{n-1} C(2n-1,2m) Li_{-1}(1-2n+2m) k^(2n-1-2m) T(2m,k)
    mpq_class lhs_odd = li_minus1_neg(2 * n - 1, seqs);
    lhs_odd *= 1 - pow_ui(k, 2 * n - 1);
    lhs_odd *= 2;
    mpq_class rhs_odd = alt_power_sum(2 * n - 1, k);
    for (unsigned m = 1; m + 1 <= n; ++m) {
        mpq_class term = li_minus1_neg(2 * n - 2 * m - 1, seqs);
        term *= binomial(2 * n - 1, 2 * m);
        term *= pow_ui(k, 2 * n - 2 * m - 1);
        term *= alt_power_sum(2 * m, k);
        term *= 2;
        rhs_odd += term;
    }
    return lhs_odd == rhs_odd;
}

bool check_bernoulli_recurrences(unsigned n, unsigned long k, Sequences& seqs) {
    if (n == 0 || k < 3 || k % 2 == 0) throw std::invalid_argument("need n >= 1, k odd >= 3");

    // T(2n,k) = 2 sum_{i=1}^{n} C(2n,2i-1) (B_{2i}/2i) (2^(2i)-1) k^(2i-1) T(2n-2i+1,k)
    mpq_class rhs_a = 0;
    for (unsigned i = 1; i <= n; ++i) {
        mpq_class term = bern_over_index(seqs, i);
        term *= binomial(2 * n, 2 * i - 1);
        term *= two_pow_minus1(2 * i);
        term *= pow_ui(k, 2 * i - 1);
        term *= alt_power_sum(2 * n - 2 * i + 1, k);
        term *= 2;
        rhs_a += term;
    }
    if (alt_power_sum(2 * n, k) != rhs_a) return false;

    // (1-2^(2n))(1-k^(2n-1)) B_{2n}/2n
    //   = T(2n-1,k)/2 + sum_{i=1}^{n-1} C(2n-1,2i-1) (B_{2i}/2i) k^(2i-1) (1-2^(2i)) T(2n-2i,k)
    mpq_class lhs_b = bern_over_index(seqs, n);
    lhs_b *= 1 - pow_ui(2, 2 * n);
    lhs_b *= 1 - pow_ui(k, 2 * n - 1);
    mpq_class rhs_b = alt_power_sum(2 * n - 1, k);
    rhs_b /= 2;
    for (unsigned i = 1; i + 1 <= n; ++i) {
        mpq_class term = bern_over_index(seqs, i);
        term *= binomial(2 * n - 1, 2 * i - 1);
        term *= pow_ui(k, 2 * i - 1);
        term *= -two_pow_minus1(2 * i);
        term *= alt_power_sum(2 * n - 2 * i, k);
        rhs_b += term;
    }
    return lhs_b == rhs_b;
}

bool check_k3_recurrences(unsigned n, Sequences& seqs) {
    if (n == 0) throw std::invalid_argument("need n >= 1");

    // B_{2n} (2^(2n)-1) 3^(2n-1)
    //   = (2^(2n)-1)/2 + sum_{i=1}^{n-1} C(2n,2i-1) (B_{2i}/2i) (1-2^(2i)) 3^(2i-1) (2^(2n-2i+1)-1)
    mpq_class lhs_a = seqs.bernoulli_number(2 * n);
    lhs_a *= two_pow_minus1(2 * n);
    lhs_a *= pow_ui(3, 2 * n - 1);
    mpq_class rhs_a = two_pow_minus1(2 * n);
    rhs_a /= 2;
    for (unsigned i = 1; i + 1 <= n; ++i) {
        mpq_class term = bern_over_index(seqs, i);
        term *= binomial(2 * n, 2 * i - 1);
        term *= -two_pow_minus1(2 * i);
        term *= pow_ui(3, 2 * i - 1);
        term *= two_pow_minus1(2 * n - 2 * i + 1);
        rhs_a += term;
    }
    if (lhs_a != rhs_a) return false;

    // (1-2^(2n))(1-3^(2n-1)) B_{2n}/2n
    //   = (2^(2n-1)-1)/2 + sum_{i=1}^{n-1} C(2n-1,2i-1) (B_{2i}/2i) 3^(2i-1) (1-2^(2i)) (2^(2n-2i)-1)
    mpq_class lhs_b = bern_over_index(seqs, n);
    lhs_b *= 1 - pow_ui(2, 2 * n);
    lhs_b *= 1 - pow_ui(3, 2 * n - 1);
    mpq_class rhs_b = two_pow_minus1(2 * n - 1);
    rhs_b /= 2;
    for (unsigned i = 1; i + 1 <= n; ++i) {
        mpq_class term = bern_over_index(seqs, i);
        term *= binomial(2 * n - 1, 2 * i - 1);
        term *= pow_ui(3, 2 * i - 1);
        term *= -two_pow_minus1(2 * i);
        term *= two_pow_minus1(2 * n - 2 * i);
        rhs_b += term;
    }
    return lhs_b == rhs_b;
}

mpz_class tangent_via_recurrence(unsigned n, TangentVariant variant) {
    if (n == 0) throw std::invalid_argument("need n >= 1");
    const bool mod3 = variant == TangentVariant::Mod3;
    const unsigned long p = mod3 ? 3 : 5;
    std::vector<mpz_class> t(n + 1);
    for (unsigned i = 1; i <= n; ++i) {
        mpz_class rhs = pow_ui(2, mod3 ? 2 * i - 1 : 2 * i) * two_pow_minus1(2 * i - 1);
        mpz_class acc = 0;
        for (unsigned j = 1; j < i; ++j) {
            mpz_class term = binomial(2 * i - 1, 2 * j - 1);
            term *= pow_ui(p, 2 * j - 1);
            term *= pow_ui(2, 2 * i - 2 * j);
            term *= two_pow_minus1(2 * i - 2 * j);
            term *= t[j];
            acc += term;
        }
        if (!mod3) acc *= 2;
        rhs += acc;
        mpz_class lead = 1 - pow_ui(p, 2 * i - 1);
        if (!mpz_divisible_p(rhs.get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("tangent recurrence solve is non-integral");
        mpz_divexact(t[i].get_mpz_t(), rhs.get_mpz_t(), lead.get_mpz_t());
    }
    return t[n];
}

CongruenceReport congruence_scan(unsigned N, Sequences& seqs) {
    if (N < 2) throw std::invalid_argument("need N >= 2");
    CongruenceReport rep;
    rep.max_n = N;
    rep.pass = true;
    for (unsigned n = 2; n <= N; ++n) {
        CongruenceRow row;
        row.n = n;
        row.t = seqs.tangent_number(n);
        row.mod2 = static_cast<int>(mpz_fdiv_ui(row.t.get_mpz_t(), 2));
        row.mod3 = static_cast<int>(mpz_fdiv_ui(row.t.get_mpz_t(), 3));
        row.mod5 = static_cast<int>(mpz_fdiv_ui(row.t.get_mpz_t(), 5));
        row.mod10 = static_cast<int>(mpz_fdiv_ui(row.t.get_mpz_t(), 10));
        const int small = n % 2 ? 1 : 2;
        row.pass = row.mod2 == 0 && row.mod3 == small && row.mod5 == small &&
                   row.mod10 == (n % 2 ? 6 : 2);
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ZSeriesRep zseries_representation(const mpq_class& x, unsigned M) {
    if (M == 0) throw std::invalid_argument("need M >= 1");
    ZSeriesRep rep;
    rep.target = x;
    mpq_class scale = x;
    scale *= -16;
    scale /= 3;
    scale.canonicalize();
    for (unsigned m = 1; m <= M; ++m) {
        // c_m = scale * m (2^(2m-1)-1)(2^(-2m)-1)/3^(2m+1), all exact
        mpq_class c = scale;
        c *= m;
        c *= two_pow_minus1(2 * m - 1);
        mpz_class num = 1 - pow_ui(2, 2 * m);
        c *= mpq_class(num, pow_ui(2, 2 * m));
        c /= pow_ui(3, 2 * m + 1);
        c.canonicalize();
        rep.coeff.push_back(std::move(c));
    }
    return rep;
}

std::string CongruenceReport::json() const {
    nlohmann::ordered_json out;
    out["max_n"] = max_n;
    nlohmann::ordered_json rws = nlohmann::ordered_json::array();
    for (const CongruenceRow& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["t"] = r.t.get_str();
        row["mod2"] = r.mod2;
        row["mod3"] = r.mod3;
        row["mod5"] = r.mod5;
        row["mod10"] = r.mod10;
        row["pass"] = r.pass;
        rws.push_back(std::move(row));
    }
    out["rows"] = std::move(rws);
    out["pass"] = pass;
    return out.dump(2);
}

}  // namespace polylog
