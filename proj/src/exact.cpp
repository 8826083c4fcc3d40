#include "polylog/exact.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polylog {

int mobius(unsigned long n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be >= 1");
    int factors = 0;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

unsigned long totient(unsigned long n) {
    if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

using ZPoly = std::vector<mpz_class>;   // constant term first
using QPoly = std::vector<mpq_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact quotient a / b for monic-leading b dividing a exactly.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
    ztrim(a);
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        mpz_class c = a.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        ztrim(a);
    }
    if (!a.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
    return q;
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

// a mod b (b nonzero), in-place long division over Q.
QPoly qmod(QPoly a, const QPoly& b) {
    qtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qtrim(a);
    }
    return a;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    qtrim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qtrim(a);
    }
    qtrim(q);
    return {q, a};
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned long q) {
    if (q == 0) throw std::invalid_argument("cyclotomic_polynomial: q must be >= 1");
    if (q == 1) return {mpz_class(-1), mpz_class(1)};
    // (x^q - 1) / product of Phi_d over proper divisors d of q
    ZPoly num(q + 1, mpz_class(0));
    num[0] = -1;
    num[q] = 1;
    ZPoly den{mpz_class(1)};
    for (unsigned long d : divisors(q)) {
        if (d == q) continue;
        auto phi_d = cyclotomic_polynomial(d);
        den = zmul(den, ZPoly(phi_d.begin(), phi_d.end()));
    }
    return zdiv_exact(num, den);
}

std::string rational_str(const mpq_class& x) { return x.get_str(); }

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    mpq_class x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (x.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    x.canonicalize();
    return x;
}

RootOfUnity::RootOfUnity(unsigned long q_, unsigned long j_) : q(q_), j(j_) {
    if (q == 0) throw std::invalid_argument("RootOfUnity: q must be >= 1");
    if (q == 1) {
        if (j != 0) throw std::invalid_argument("RootOfUnity: q = 1 requires j = 0");
        return;
    }
    if (j == 0 || j >= q || std::gcd(j, q) != 1)
        throw std::invalid_argument("RootOfUnity: j must be in [1, q) and coprime to q");
}

RootOfUnity RootOfUnity::pow(long e) const {
    long qe = static_cast<long>(q);
    long r = ((static_cast<long>(j) * (e % qe)) % qe + qe) % qe;
    unsigned long g = std::gcd(static_cast<unsigned long>(r), q);
    if (r == 0) return RootOfUnity(1, 0);
    return RootOfUnity(q / g, static_cast<unsigned long>(r) / g);
}

Cyclotomic::Cyclotomic(unsigned long q) : q_(q) {
    if (q == 0) throw std::invalid_argument("Cyclotomic: q must be >= 1");
    c_.assign(totient(q), mpq_class(0));
}

Cyclotomic::Cyclotomic(unsigned long q, const mpq_class& rational) : Cyclotomic(q) {
    c_[0] = rational;
}

Cyclotomic Cyclotomic::from_power(const RootOfUnity& z, long e) {
    unsigned long q = z.q;
    long qe = static_cast<long>(q);
    long r = ((static_cast<long>(z.j) * (e % qe)) % qe + qe) % qe;
    // reduce x^r mod Phi_q
    auto phi_z = cyclotomic_polynomial(q);
    QPoly phi(phi_z.begin(), phi_z.end());
    QPoly xr(static_cast<size_t>(r) + 1, mpq_class(0));
    xr.back() = 1;
    QPoly red = qmod(std::move(xr), phi);
    Cyclotomic out(q);
    for (size_t i = 0; i < red.size(); ++i) out.c_[i] = red[i];
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const mpq_class& Cyclotomic::rational() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic::rational: value is irrational");
    return c_[0];
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
    if (q_ != o.q_) throw std::invalid_argument("Cyclotomic: mixed orders");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_order(o);
    Cyclotomic r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    check_order(o);
    Cyclotomic r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_order(o);
    auto phi_z = cyclotomic_polynomial(q_);
    QPoly phi(phi_z.begin(), phi_z.end());
    QPoly prod = qmod(qmul(QPoly(c_.begin(), c_.end()), QPoly(o.c_.begin(), o.c_.end())), phi);
    Cyclotomic r(q_);
    for (size_t i = 0; i < prod.size(); ++i) r.c_[i] = prod[i];
    return r;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& s) const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    auto phi_z = cyclotomic_polynomial(q_);
    QPoly phi(phi_z.begin(), phi_z.end());
    // extended Euclid: u*a + v*phi = gcd; gcd is a nonzero constant since
    // phi is irreducible and a != 0 with deg a < deg phi
    QPoly r0 = phi, r1(c_.begin(), c_.end());
    qtrim(r1);
    QPoly u0{}, u1{mpq_class(1)};  // coefficients of `a` along the remainders
    while (!r1.empty() && r1.size() > 1) {
        auto [qt, rem] = qdivmod(r0, r1);
        QPoly u2 = qsub(u0, qmul(qt, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw std::logic_error("Cyclotomic::inverse: gcd not constant");
    mpq_class g = r1[0];
    Cyclotomic out(q_);
    QPoly inv = qmod(std::move(u1), phi);
    for (size_t i = 0; i < inv.size(); ++i) out.c_[i] = inv[i] / g;
    return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    check_order(o);
    return *this * o.inverse();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return q_ == o.q_ && c_ == o.c_;
}

Complex Cyclotomic::embed(mpfr_prec_t prec) const {
    if (prec < 16) throw std::invalid_argument("Cyclotomic::embed: precision must be >= 16");
    Complex acc(prec);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Complex term = unit_root(static_cast<long>(i), static_cast<long>(q_), prec);
        acc += term * Real(c_[i], prec);
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "[" << q_ << ";";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : " ") << c_[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace polylog
