#include "polylog/sequences.hpp"

#include <numeric>
#include <stdexcept>

namespace polylog {

mpz_class int_pow(const mpz_class& x, unsigned m) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), m);
    return r;
}

const mpq_class& Sequences::bernoulli_number(unsigned n) {
    if (bern_.empty()) bern_.push_back(mpq_class(1));
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    while (bern_.size() <= n) {
        unsigned m = static_cast<unsigned>(bern_.size());
        mpq_class acc(0);
        for (unsigned j = 0; j < m; ++j) acc += mpq_class(binomial(m + 1, j)) * bern_[j];
        mpq_class b = -acc / mpq_class(m + 1);
        if (m >= 3 && m % 2 == 1 && b != 0)
            throw std::logic_error("bernoulli_number: odd-index value must vanish");
        bern_.push_back(b);
    }
    return bern_[n];
}

mpq_class Sequences::bernoulli_poly_value(unsigned n, const mpq_class& x) {
    mpq_class acc(0);
    mpq_class xpow(1);
    // sum over k of C(n,k) B_k x^(n-k), accumulated from k = n down to 0
    for (unsigned k = 0; k <= n; ++k) {
        acc += mpq_class(binomial(n, n - k)) * bernoulli_number(n - k) * xpow;
        xpow *= x;
    }
    return acc;
}

mpq_class Sequences::power_sum(unsigned long k, unsigned m) {
    if (k < 1) throw std::invalid_argument("power_sum: k must be >= 1");
    if (m < 1) throw std::invalid_argument("power_sum: m must be >= 1");
    mpq_class kq(static_cast<unsigned long>(k));
    return (bernoulli_poly_value(m + 1, kq) - bernoulli_number(m + 1)) / mpq_class(m + 1);
}

const std::vector<mpq_class>& Sequences::euler_poly(unsigned long q, unsigned n) {
    if (q < 2) throw std::invalid_argument("euler_poly: q must be >= 2");
    auto& rows = euler_[q];
    while (rows.size() <= n) {
        unsigned m = static_cast<unsigned>(rows.size());
        // d_i = (sum_{t=0}^{q-1} t^i) / q; row_m = x^m - sum_{j<m} C(m,j) d_{m-j} row_j
        std::vector<mpq_class> row(m + 1, mpq_class(0));
        row[m] = 1;
        for (unsigned j = 0; j < m; ++j) {
            mpq_class d(0);
            for (unsigned long t = 0; t < q; ++t) d += int_pow(mpz_class(t), m - j);
            d /= static_cast<unsigned long>(q);
            mpq_class coef = mpq_class(binomial(m, j)) * d;
            for (unsigned i = 0; i <= j; ++i) row[i] -= coef * rows[j][i];
        }
        rows.push_back(std::move(row));
        // spot-check the defining window identity at small integer points
        for (long x = 0; x <= 2; ++x) {
            if (!euler_poly_window_check(q, m, mpq_class(x)))
                throw std::logic_error("euler_poly: window identity failed");
        }
    }
    return rows[n];
}

mpq_class Sequences::euler_poly_value(unsigned long q, unsigned n, const mpq_class& x) {
    const auto& row = euler_poly(q, n);
    mpq_class acc(0);
    for (size_t i = row.size(); i-- > 0;) acc = acc * x + row[i];
    return acc;
}

bool Sequences::euler_poly_window_check(unsigned long q, unsigned n, const mpq_class& x) {
    mpq_class acc(0);
    for (unsigned long i = 0; i < q; ++i) acc += euler_poly_value(q, n, x + mpq_class(i));
    mpq_class xn(1);
    for (unsigned i = 0; i < n; ++i) xn *= x;
    return acc == mpq_class(static_cast<unsigned long>(q)) * xn;
}

Cyclotomic Sequences::weighted_power_sum_closed(const RootOfUnity& z, unsigned long k,
                                                unsigned m) {
    if (z.q < 2) throw std::invalid_argument("weighted_power_sum_closed: q must be >= 2");
    if (k < 1) throw std::invalid_argument("weighted_power_sum_closed: k must be >= 1");
    if (m < 1) throw std::invalid_argument("weighted_power_sum_closed: m must be >= 1");
    unsigned long q = z.q;
    Cyclotomic zc = Cyclotomic::from_power(z, 1);
    Cyclotomic zk1 = Cyclotomic::from_power(z, static_cast<long>(k) - 1);
    Cyclotomic zm1inv = (zc - Cyclotomic::one(q)).inverse();
    Cyclotomic acc(q);
    for (unsigned long t = 1; t < q; ++t) {
        Cyclotomic coef = zc * (Cyclotomic::from_power(z, static_cast<long>(t)) - Cyclotomic::one(q)) * zm1inv;
        mpq_class e1 = euler_poly_value(q, m, mpq_class(static_cast<unsigned long>(t)));
        mpq_class e2 = euler_poly_value(q, m, mpq_class(k + t - 1));
        acc += coef * (Cyclotomic(q, e1) - zk1 * e2);
    }
    return acc * mpq_class(1, static_cast<unsigned long>(q));
}

mpz_class Sequences::tangent_number(unsigned n) {
    if (n < 1) throw std::invalid_argument("tangent_number: n must be >= 1");
    mpq_class b = bernoulli_number(2 * n);
    mpz_class p = int_pow(mpz_class(2), 2 * n);
    mpq_class t = mpq_class(p) * (mpq_class(1) - mpq_class(p)) * b / mpq_class(2 * n);
    if (n % 2 == 1) t = -t;
    if (t.get_den() != 1) throw std::logic_error("tangent_number: value not integral");
    return t.get_num();
}

Cyclotomic weighted_power_sum_direct(const RootOfUnity& z, unsigned long k, unsigned m,
                                     int sign) {
    if (k < 2) throw std::invalid_argument("weighted_power_sum_direct: k must be >= 2");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("weighted_power_sum_direct: sign must be +1 or -1");
    Cyclotomic acc(z.q);
    for (unsigned long h = 1; h < k; ++h) {
        long e = sign * static_cast<long>(h);
        acc += Cyclotomic::from_power(z, e) * mpq_class(int_pow(mpz_class(h), m));
    }
    return acc;
}

mpq_class alt_power_sum(unsigned m, unsigned long k) {
    if (k < 2) throw std::invalid_argument("alt_power_sum: k must be >= 2");
    mpz_class acc(0);
    for (unsigned long h = 1; h < k; ++h) {
        mpz_class t = int_pow(mpz_class(h), m);
        if (h % 2 == 1) acc -= t; else acc += t;
    }
    return mpq_class(acc);
}

Cyclotomic coprime_weighted_sum(const RootOfUnity& z, unsigned long k, unsigned m, int sign,
                                bool half) {
    if (k < 2) throw std::invalid_argument("coprime_weighted_sum: k must be >= 2");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("coprime_weighted_sum: sign must be +1 or -1");
    unsigned long hi = half ? k / 2 : k;
    Cyclotomic acc(z.q);
    for (unsigned long h = 1; h <= hi; ++h) {
        if (std::gcd(h, k) != 1) continue;
        acc += Cyclotomic::from_power(z, sign * static_cast<long>(h)) *
               mpq_class(int_pow(mpz_class(h), m));
    }
    return acc;
}

mpq_class apostol_phi(unsigned m, unsigned long k) {
    if (k <= 2) throw std::invalid_argument("apostol_phi: k must be > 2");
    mpz_class acc(0);
    for (unsigned long h = 1; h <= k / 2; ++h) {
        if (std::gcd(h, k) != 1) continue;
        acc += int_pow(mpz_class(h), m);
    }
    return mpq_class(acc);
}

}  // namespace polylog
