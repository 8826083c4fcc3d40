#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "polylog/sequences.hpp"

using namespace polylog;

TEST_CASE("bernoulli numbers satisfy the defining recurrence") {
    Sequences seqs;
    // sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1 (with B_1 = -1/2)
    for (unsigned n = 1; n <= 40; ++n) {
        mpq_class acc = 0;
        for (unsigned k = 0; k <= n; ++k) {
            mpq_class t = seqs.bernoulli_number(k);
            t *= binomial(n + 1, k);
            acc += t;
        }
        CHECK(acc == 0);
    }
    CHECK(seqs.bernoulli_number(0) == 1);
    CHECK(seqs.bernoulli_number(1) == mpq_class(-1, 2));
    CHECK(seqs.bernoulli_number(10) == mpq_class(5, 66));
    CHECK(seqs.bernoulli_number(12) == mpq_class(-691, 2730));
    for (unsigned n = 3; n <= 39; n += 2) CHECK(seqs.bernoulli_number(n) == 0);
}

TEST_CASE("bernoulli polynomial values") {
    Sequences seqs;
    CHECK(seqs.bernoulli_poly_value(2, mpq_class(1, 2)) == mpq_class(-1, 12));
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(seqs.bernoulli_poly_value(n, 0) == seqs.bernoulli_number(n));
        // B_n(1) - B_n(0) = [n = 1]
        mpq_class diff = seqs.bernoulli_poly_value(n, 1) - seqs.bernoulli_number(n);
        CHECK(diff == (n == 1 ? 1 : 0));
        // reflection B_n(1 - x) = (-1)^n B_n(x)
        mpq_class l = seqs.bernoulli_poly_value(n, mpq_class(2, 3));
        mpq_class r = seqs.bernoulli_poly_value(n, mpq_class(1, 3));
        if (n % 2 != 0) r = -r;
        CHECK(l == r);
    }
}

TEST_CASE("power sums match direct summation") {
    Sequences seqs;
    for (unsigned long k = 1; k <= 12; ++k) {
        for (unsigned m = 1; m <= 8; ++m) {
            mpq_class direct = 0;
            for (unsigned long h = 1; h < k; ++h) direct += int_pow(mpz_class(h), m);
            CHECK(seqs.power_sum(k, m) == direct);
        }
    }
    CHECK(seqs.power_sum(2, 7) == 1);
    CHECK(seqs.power_sum(3, 2) == 5);
    CHECK(seqs.power_sum(5, 1) == 10);
}

TEST_CASE("euler polynomials satisfy the window identity") {
    Sequences seqs;
    for (unsigned long q = 2; q <= 5; ++q) {
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(seqs.euler_poly_window_check(q, n, 0));
            CHECK(seqs.euler_poly_window_check(q, n, 1));
            CHECK(seqs.euler_poly_window_check(q, n, mpq_class(-1, 2)));
        }
    }
    // q = 2 gives the classical Euler polynomials; E_1(x) = x - 1/2
    CHECK(seqs.euler_poly_value(2, 1, 1) == mpq_class(1, 2));
    CHECK(seqs.euler_poly_value(2, 1, 0) == mpq_class(-1, 2));
}

TEST_CASE("euler polynomial translation law equals literal differences") {
    Sequences seqs;
    // E_{q,m}(x + q) - E_{q,m}(x) = q ((x+1)^m - x^m), iterated b times;
    // this is the collapse the catalog uses where literal rows blow up
    for (unsigned long q : {2ul, 3ul, 5ul}) {
        for (unsigned m = 0; m <= 40; m += 5) {
            for (unsigned long j = 0; j < q; ++j) {
                for (unsigned long b = 1; b <= 4; ++b) {
                    mpq_class literal = seqs.euler_poly_value(q, m, j) -
                                        seqs.euler_poly_value(q, m, j + b * q);
                    mpz_class acc = 0;
                    for (unsigned long r = 0; r < b; ++r) {
                        mpz_class base(j + r * q);
                        acc += int_pow(base + 1, m) - int_pow(base, m);
                    }
                    acc *= -static_cast<long>(q);
                    CHECK(literal == mpq_class(acc));
                }
            }
        }
    }
}

TEST_CASE("weighted power sums: closed form equals direct form") {
    Sequences seqs;
    for (unsigned long q = 2; q <= 8; ++q) {
        for (unsigned long j = 1; j < q; ++j) {
            if (std::gcd(j, q) != 1) continue;
            const RootOfUnity z(q, j);
            const unsigned long k = q + 1;
            for (unsigned m = 1; m <= 6; ++m) {
                CHECK(seqs.weighted_power_sum_closed(z, k, m) ==
                      weighted_power_sum_direct(z, k, m, +1));
            }
        }
    }
}

TEST_CASE("direct weighted power sums, frozen cases") {
    // z = -1, k = 3, m = 1: -1 + 2 = 1
    CHECK(weighted_power_sum_direct(RootOfUnity(2, 1), 3, 1, +1) ==
          Cyclotomic(2, mpq_class(1)));
    // z = i, k = 5, m = 0: i - 1 - i + 1 = 0
    CHECK(weighted_power_sum_direct(RootOfUnity(4, 1), 5, 0, +1).is_zero());
    // z = 1: plain power sum
    CHECK(weighted_power_sum_direct(RootOfUnity(), 4, 2, +1) ==
          Cyclotomic(1, mpq_class(14)));
    // sign flips the exponent: conjugate sum for z on the unit circle
    const RootOfUnity z(5, 2);
    Cyclotomic direct(5);
    for (unsigned long h = 1; h < 7; ++h)
        direct += Cyclotomic::from_power(z, -static_cast<long>(h)) *
                  mpq_class(int_pow(mpz_class(h), 3));
    CHECK(weighted_power_sum_direct(z, 7, 3, -1) == direct);
}

TEST_CASE("alternating power sums") {
    for (unsigned long k = 3; k <= 9; k += 2) CHECK(alt_power_sum(0, k) == 0);
    CHECK(alt_power_sum(2, 3) == 3);
    CHECK(alt_power_sum(1, 5) == 2);
    for (unsigned long k = 2; k <= 9; ++k) {
        for (unsigned m = 0; m <= 6; ++m) {
            mpq_class direct = 0;
            for (unsigned long h = 1; h < k; ++h) {
                mpq_class t(int_pow(mpz_class(h), m));
                if (h % 2 != 0) t = -t;
                direct += t;
            }
            CHECK(alt_power_sum(m, k) == direct);
        }
    }
}

TEST_CASE("coprime-restricted weighted sums") {
    CHECK(coprime_weighted_sum(RootOfUnity(), 3, 1, +1, false) == Cyclotomic(1, mpq_class(3)));
    CHECK(coprime_weighted_sum(RootOfUnity(), 3, 4, +1, true) == Cyclotomic(1, mpq_class(1)));
    CHECK(coprime_weighted_sum(RootOfUnity(), 6, 0, +1, true) == Cyclotomic(1, mpq_class(1)));
    const RootOfUnity z(3, 1);
    for (unsigned m = 0; m <= 4; ++m) {
        for (bool half : {false, true}) {
            Cyclotomic direct(3);
            unsigned long hi = half ? 2 : 4;
            for (unsigned long h = 1; h <= hi; ++h) {
                if (std::gcd(h, 4ul) != 1) continue;
                direct += Cyclotomic::from_power(z, static_cast<long>(h)) *
                          mpq_class(int_pow(mpz_class(h), m));
            }
            CHECK(coprime_weighted_sum(z, 4, m, +1, half) == direct);
        }
    }
}

TEST_CASE("apostol phi sums") {
    CHECK(apostol_phi(0, 3) == 1);
    CHECK(apostol_phi(7, 3) == 1);
    CHECK(apostol_phi(1, 5) == 3);
    CHECK(apostol_phi(0, 6) == 1);
    CHECK(apostol_phi(2, 12) == 26);  // 1 + 25
}

TEST_CASE("tangent numbers") {
    Sequences seqs;
    const long expect[] = {1, 2, 16, 272, 7936};
    for (unsigned n = 1; n <= 5; ++n) CHECK(seqs.tangent_number(n) == expect[n - 1]);
    // integrality for a while beyond the table
    for (unsigned n = 6; n <= 30; ++n) CHECK(seqs.tangent_number(n) > 0);
}

TEST_CASE("int_pow corners") {
    CHECK(int_pow(mpz_class(0), 0) == 1);
    CHECK(int_pow(mpz_class(-2), 3) == -8);
    CHECK(int_pow(mpz_class(10), 6) == 1000000);
}
