#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

// Arbitrary-precision real/complex scalars on top of MPFR.
// Binary operations produce a result at the minimum precision of the
// operands; every value knows its own precision.

namespace polylog {

class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    Real(long n, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(double d, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(const mpq_class& q, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const mpz_class& z, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 16); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    Real round_to(mpfr_prec_t p) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    Real operator-() const;
    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    Real operator+(long n) const;
    Real operator-(long n) const;
    Real operator*(long n) const;
    Real operator/(long n) const;

    bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
    bool operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }
    bool operator<(long n) const { return mpfr_cmp_si(v_, n) < 0; }
    bool operator>(long n) const { return mpfr_cmp_si(v_, n) > 0; }
    bool operator<=(long n) const { return mpfr_cmp_si(v_, n) <= 0; }
    bool operator>=(long n) const { return mpfr_cmp_si(v_, n) >= 0; }

    Real abs() const;
    Real sqrt() const;
    Real exp() const;
    Real log() const;          // requires positive argument
    Real floor() const;
    void sin_cos(Real& s, Real& c) const;

    // *this * 2^e
    Real ldexp(long e) const;

    static Real pi(mpfr_prec_t prec);
    // 2^e at the given precision
    static Real pow2(long e, mpfr_prec_t prec);

    std::string str(size_t digits = 0) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
    mpfr_t v_;
};

class Complex {
public:
    explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) { equalize(); }
    Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
    Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }
    Complex round_to(mpfr_prec_t p) const { return Complex(re_.round_to(p), im_.round_to(p)); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Complex operator-() const { return Complex(-re_, -im_); }
    Complex conj() const { return Complex(re_, -im_); }
    Complex operator+(const Complex& o) const { return Complex(re_ + o.re_, im_ + o.im_); }
    Complex operator-(const Complex& o) const { return Complex(re_ - o.re_, im_ - o.im_); }
    Complex operator*(const Complex& o) const;
    Complex operator/(const Complex& o) const;
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    Complex operator*(const Real& r) const { return Complex(re_ * r, im_ * r); }
    Complex operator/(const Real& r) const { return Complex(re_ / r, im_ / r); }
    Complex operator+(long n) const { return Complex(re_ + n, im_); }
    Complex operator-(long n) const { return Complex(re_ - n, im_); }
    Complex operator*(long n) const { return Complex(re_ * n, im_ * n); }
    Complex operator/(long n) const { return Complex(re_ / n, im_ / n); }

    Real abs() const;

    // e^(this)
    Complex exp() const;

    std::string str(size_t digits = 0) const;

private:
    void equalize();
    Real re_, im_;
};

// base^s for real base > 0
Complex pow_complex(const Real& base, const Complex& s);

// e^(2*pi*i*num/den), den >= 1
Complex unit_root(long num, long den, mpfr_prec_t prec);

}  // namespace polylog
