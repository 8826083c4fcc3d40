#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "polylog/exact.hpp"

// Bernoulli numbers/polynomials, generalized Euler polynomials E_{q,n}
// (generating function q*e^(x*t) / (1 + e^t + ... + e^((q-1)t))), power sums,
// root-of-unity weighted power sums, and tangent numbers.

namespace polylog {

// Owns the growable exact caches. Not safe for concurrent mutation; give each
// thread its own instance.
class Sequences {
public:
    // B_n, B_1 = -1/2.
    const mpq_class& bernoulli_number(unsigned n);

    // B_n(x) = sum_k C(n,k) B_k x^(n-k).
    mpq_class bernoulli_poly_value(unsigned n, const mpq_class& x);

    // sum_{h=1}^{k-1} h^m = (B_{m+1}(k) - B_{m+1}) / (m+1); k >= 1, m >= 1.
    mpq_class power_sum(unsigned long k, unsigned m);

    // Coefficient row of E_{q,n}(x), constant term first, length n+1; q >= 2.
    const std::vector<mpq_class>& euler_poly(unsigned long q, unsigned n);

    mpq_class euler_poly_value(unsigned long q, unsigned n, const mpq_class& x);

    // sum_{i=0}^{q-1} E_{q,n}(x+i) == q * x^n
    bool euler_poly_window_check(unsigned long q, unsigned n, const mpq_class& x);

    // sum_{h=1}^{k-1} z^h h^m via the Euler-polynomial closed form; q >= 2,
    // k >= 1, m >= 1. Equals weighted_power_sum_direct(z, k, m, +1).
    Cyclotomic weighted_power_sum_closed(const RootOfUnity& z, unsigned long k, unsigned m);

    // T_n = (-1)^n 2^(2n) (1 - 2^(2n)) B_{2n} / (2n); n >= 1. Integer.
    mpz_class tangent_number(unsigned n);

private:
    std::vector<mpq_class> bern_;
    std::map<unsigned long, std::vector<std::vector<mpq_class>>> euler_;
};

// sum_{h=1}^{k-1} z^(sign*h) h^m exactly in Q(zeta_q); sign is +1 or -1,
// k >= 2, m >= 0.
Cyclotomic weighted_power_sum_direct(const RootOfUnity& z, unsigned long k, unsigned m, int sign);

// T(m, k) = sum_{h=1}^{k-1} (-1)^h h^m; k >= 2, m >= 0.
mpq_class alt_power_sum(unsigned m, unsigned long k);

// sum over 1 <= h <= k (or h <= k/2 when half) with gcd(h, k) = 1 of
// z^(sign*h) h^m, exactly in Q(zeta_q).
Cyclotomic coprime_weighted_sum(const RootOfUnity& z, unsigned long k, unsigned m, int sign,
                                bool half);

// phi(m, k) = sum_{1 <= h <= k/2, gcd(h,k)=1} h^m; k > 2.
mpq_class apostol_phi(unsigned m, unsigned long k);

// x^m for integer x with m possibly 0 (0^0 = 1).
mpz_class int_pow(const mpz_class& x, unsigned m);

}  // namespace polylog
