#include "polylog/hp.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace polylog {

namespace {
mpfr_prec_t min_prec(const Real& a, const Real& b) {
    return std::min(a.prec(), b.prec());
}
}  // namespace

Real Real::round_to(mpfr_prec_t p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::operator+(const Real& o) const {
    Real r(min_prec(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-(const Real& o) const {
    Real r(min_prec(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator*(const Real& o) const {
    Real r(min_prec(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator/(const Real& o) const {
    Real r(min_prec(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

Real Real::operator+(long n) const {
    Real r(prec());
    mpfr_add_si(r.v_, v_, n, MPFR_RNDN);
    return r;
}

Real Real::operator-(long n) const {
    Real r(prec());
    mpfr_sub_si(r.v_, v_, n, MPFR_RNDN);
    return r;
}

Real Real::operator*(long n) const {
    Real r(prec());
    mpfr_mul_si(r.v_, v_, n, MPFR_RNDN);
    return r;
}

Real Real::operator/(long n) const {
    Real r(prec());
    mpfr_div_si(r.v_, v_, n, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    Real r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::exp() const {
    Real r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::log() const {
    if (mpfr_sgn(v_) <= 0) throw std::domain_error("log: argument must be positive");
    Real r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::floor() const {
    Real r(prec());
    mpfr_floor(r.v_, v_);
    return r;
}

void Real::sin_cos(Real& s, Real& c) const {
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

Real Real::ldexp(long e) const {
    Real r(prec());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
    Real r(1L, prec);
    return r.ldexp(e);
}

std::string Real::str(size_t digits) const {
    if (digits == 0) digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 3;
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Re", static_cast<int>(digits - 1), v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

void Complex::equalize() {
    mpfr_prec_t p = std::min(re_.prec(), im_.prec());
    if (re_.prec() != p) re_ = re_.round_to(p);
    if (im_.prec() != p) im_ = im_.round_to(p);
}

Complex Complex::operator*(const Complex& o) const {
    return Complex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Complex Complex::operator/(const Complex& o) const {
    Real d = o.re_ * o.re_ + o.im_ * o.im_;
    if (d.is_zero()) throw std::domain_error("complex division by zero");
    return Complex((re_ * o.re_ + im_ * o.im_) / d, (im_ * o.re_ - re_ * o.im_) / d);
}

Real Complex::abs() const {
    Real r(prec());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
    return r;
}

Complex Complex::exp() const {
    Real m = re_.exp();
    Real s(prec()), c(prec());
    im_.sin_cos(s, c);
    return Complex(m * c, m * s);
}

std::string Complex::str(size_t digits) const {
    return re_.str(digits) + "," + im_.str(digits);
}

Complex pow_complex(const Real& base, const Complex& s) {
    Real l = base.log();
    return Complex(s.re() * l, s.im() * l).exp();
}

Complex unit_root(long num, long den, mpfr_prec_t prec) {
    if (den < 1) throw std::domain_error("unit_root: den must be >= 1");
    long r = ((num % den) + den) % den;
    Real angle = Real::pi(prec) * (2 * r) / den;
    Real s(prec), c(prec);
    angle.sin_cos(s, c);
    return Complex(c, s);
}

}  // namespace polylog
