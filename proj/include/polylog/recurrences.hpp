#pragma once

#include <string>
#include <vector>

#include "polylog/sequences.hpp"

// Exact verification of the alternating-sum recurrences, the tangent-number
// congruences they imply, and the zeta-series coefficient generator. All
// arithmetic is big-rational; checks return booleans instead of residuals.

namespace polylog {

// Li_{-1}(-n) exactly: -1/2 at n = 0, else (1 - 2^(n+1)) B_{n+1}/(n+1).
mpq_class li_minus1_neg(unsigned n, Sequences& seqs);

// Both negative-integer specializations of the alternating translation
// formulas at s = -2n and s = 1-2n; k odd >= 3.
bool check_negint_specializations(unsigned n, unsigned long k, Sequences& seqs);

// Both Bernoulli recurrences obtained from the specializations; k odd >= 3.
bool check_bernoulli_recurrences(unsigned n, unsigned long k, Sequences& seqs);

// The two k = 3 forms (T(s,3) = 2^s - 1 collapses the alternating sums).
bool check_k3_recurrences(unsigned n, Sequences& seqs);

enum class TangentVariant { Mod3, Mod5 };

// t_n = (-1)^n T_n via the integer recurrence with leading factor
// (1 - 3^(2n-1)) or (1 - 5^(2n-1)); throws std::logic_error if any solve is
// non-integral.
mpz_class tangent_via_recurrence(unsigned n, TangentVariant variant);

struct CongruenceRow {
    unsigned n;
    mpz_class t;  // T_n
    int mod2;
    int mod3;
    int mod5;
    int mod10;
    bool pass;
};

struct CongruenceReport {
    unsigned max_n;
    int t1 = 1;  // the lone odd tangent number, recorded as the exception
    std::vector<CongruenceRow> rows;
    bool pass;

    std::string json() const;
};

// Residues of T_n for 2 <= n <= N against the predicted pattern:
// even; mod 3 and mod 5 equal 1 (n odd) / 2 (n even); mod 10 equals
// 6 (n odd) / 2 (n even).
CongruenceReport congruence_scan(unsigned N, Sequences& seqs);

struct ZSeriesRep {
    mpq_class target;
    std::vector<mpq_class> coeff;  // coeff[i] is the weight of zeta(2(i+1)+1)
};

// x = sum_{m>=1} c_m zeta(2m+1) with
// c_m = (-16x/3) m (2^(2m-1)-1)(2^(-2m)-1)/3^(2m+1); first M coefficients.
ZSeriesRep zseries_representation(const mpq_class& x, unsigned M);

}  // namespace polylog
