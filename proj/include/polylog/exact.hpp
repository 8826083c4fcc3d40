#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "polylog/hp.hpp"

// Exact arithmetic: multiplicative number theory helpers, cyclotomic
// polynomials, and arithmetic in Q(zeta_q) on the power basis
// 1, zeta, ..., zeta^(phi(q)-1) reduced modulo the q-th cyclotomic polynomial.

namespace polylog {

// mu(n); rejects n = 0.
int mobius(unsigned long n);

unsigned long totient(unsigned long n);

// Sorted list of the positive divisors of n >= 1.
std::vector<unsigned long> divisors(unsigned long n);

// C(n, k); 0 when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

// Coefficients of Phi_q, constant term first. Integer coefficients.
std::vector<mpz_class> cyclotomic_polynomial(unsigned long q);

// "p/q" (denominator omitted when 1). parse_rational accepts the same forms.
std::string rational_str(const mpq_class& x);
mpq_class parse_rational(const std::string& s);

// A primitive q-th root of unity e^(2*pi*i*j/q); q = 1 encodes z = 1.
struct RootOfUnity {
    unsigned long q = 1;
    unsigned long j = 0;

    RootOfUnity() = default;
    RootOfUnity(unsigned long q_, unsigned long j_);

    bool is_one() const { return q == 1; }
    // z^e as a root of unity (order divides q).
    RootOfUnity pow(long e) const;
    // 1 for q = 1, else 0. Matches the integral part of 1/q.
    int delta() const { return q == 1 ? 1 : 0; }

    bool operator==(const RootOfUnity& o) const { return q == o.q && j == o.j; }
};

class Cyclotomic {
public:
    // Zero element of Q(zeta_q).
    explicit Cyclotomic(unsigned long q);
    Cyclotomic(unsigned long q, const mpq_class& rational);

    static Cyclotomic one(unsigned long q) { return Cyclotomic(q, mpq_class(1)); }
    // zeta_q^(j*e) for z = zeta_q^j; e may be negative.
    static Cyclotomic from_power(const RootOfUnity& z, long e);

    unsigned long order() const { return q_; }
    const std::vector<mpq_class>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    const mpq_class& rational() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    // Throws std::domain_error on division by zero.
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inverse() const;

    Cyclotomic operator*(const mpq_class& r) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Evaluate the coordinate polynomial at zeta_q = e^(2*pi*i/q).
    Complex embed(mpfr_prec_t prec) const;

    // "[q; c0, c1, ...]"
    std::string str() const;

private:
    void check_order(const Cyclotomic& o) const;
    unsigned long q_;
    std::vector<mpq_class> c_;  // size phi(q)
};

}  // namespace polylog
