#pragma once

#include <functional>
#include <vector>

#include "polylog/exact.hpp"
#include "polylog/hp.hpp"
#include "polylog/sequences.hpp"

// High-precision evaluation of the Lerch series phi(s, a, z) and Li_z(s) at
// roots of unity, plus analytic continuation of Li_z driven by the
// translation identities (solve the identity for the lowest-shift value, with
// all higher shifts taken from the convergent half-plane).

namespace polylog {

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : EvalError {
    using EvalError::EvalError;
};
struct ConvergenceFailure : EvalError {
    using EvalError::EvalError;
};
struct PoleAtOne : EvalError {
    using EvalError::EvalError;
};
struct DegenerateDivisor : EvalError {
    using EvalError::EvalError;
};

// Re(s) must exceed 1 by this much for direct summation.
inline constexpr double kHalfPlaneMargin = 1.0 / 256;

struct EvalContext {
    long precision = 128;   // output precision p, >= 16
    long guard_bits = 24;   // g
    long max_terms = 10000; // cap on direct series terms
    // When nonempty, replaces the default modulus list for every q; entries
    // must satisfy k >= 2, k == 1 (mod q) for the q they are used with.
    std::vector<unsigned long> modulus_override;
    Sequences seqs;

    EvalContext() = default;
    explicit EvalContext(long prec) : precision(prec) {}

    void validate() const;
    std::vector<unsigned long> moduli_for(unsigned long q) const;
    mpfr_prec_t working_prec() const { return precision + guard_bits + 16; }
    mpfr_prec_t continuation_prec() const { return precision + 2 * guard_bits + 32; }
    // 2^(-precision/4)
    Real degeneracy_threshold(mpfr_prec_t at) const;
};

// P_m(s) = s(s+1)...(s+m-1)/m!, P_0 = 1.
Complex rising_factor(const Complex& s, unsigned m);

// phi(s, a, z) = sum_{n>=0} z^n (n+a)^(-s); a > 0, Re(s) > 1 + margin.
Complex lerch_direct(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                     EvalContext& ctx);

// Li_z(s) = sum_{n>=1} z^n n^(-s); Re(s) > 1 + margin.
Complex li_direct(const Complex& s, const RootOfUnity& z, EvalContext& ctx);

// Residual of phi(s,a,z) = z*phi(s,a+1,z) + a^(-s).
Complex lerch_shift_check(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                          EvalContext& ctx);

// Residual of phi(s, k*a, z) = k^(-s) * sum_{i=0}^{k-1} z^i phi(s, a + i/k, z^k).
Complex lerch_multiplication_check(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                                   unsigned long k, EvalContext& ctx);

// Residual of z*phi(s, a+1, z) = sum_{m=0}^{M} (-a)^m P_m(s) Li_z(s+m);
// |a| <= 9/10 required (radius-1 expansion).
Complex taylor_expansion_check(const Complex& s, const mpq_class& a, const RootOfUnity& z,
                               unsigned M, EvalContext& ctx);

// Analytic continuation of Li_z to arbitrary s (z = 1: away from s = 1).
// force_min_d > 0 forces at least that many ladder steps even inside the
// convergence half-plane (testing hook for the region-overlap property).
Complex li_continue(const Complex& s, const RootOfUnity& z, EvalContext& ctx,
                    long force_min_d = 0);

// zeta(s) via Li_1, falling back to Li_{-1}(s)/(2^(1-s) - 1) when the ladder
// divisor degenerates (always the case at nonpositive integer s).
Complex zeta_continue(const Complex& s, EvalContext& ctx);

namespace detail {

// sum_{m >= m_start} P_m(s) k^(-(s+m)) w(m) L(m), truncated once a
// certificate bounds the tail below 2^(-tol_bits) * max(1, |sum|). Two
// certificates run side by side: the fast empirical one (three consecutive
// term magnitudes decreasing at the expected geometric ratio) and a rigorous
// majorant built from the caller's guarantee |w(m)| <= weight_cap *
// weight_base^m, which also covers weights whose magnitude oscillates with m.
// Terms with exactly-zero weight are skipped; the sum terminates exactly when
// the rising factor vanishes (s a nonpositive integer). w(m) must be valid
// for the order of z the caller works in; L(m) supplies Li_z(s+m).
Complex translation_sum(const Complex& s, unsigned long k, unsigned m_start,
                        const std::function<Cyclotomic(unsigned)>& weight,
                        const mpq_class& weight_cap, unsigned long weight_base,
                        const std::function<Complex(unsigned)>& li_at, long tol_bits,
                        mpfr_prec_t wp, long max_terms);

// Internal series evaluator shared by lerch_direct/li_direct and the
// continuation ladder: sum_{n >= start_n} z^n (n+a)^(-s) with certified
// absolute error below 2^(-tol_bits) * max(1, |result|).
Complex dirichlet_value(const Complex& s, const mpq_class& a, long start_n,
                        const RootOfUnity& z, long tol_bits, mpfr_prec_t wp, long max_terms,
                        Sequences& seqs);

}  // namespace detail

}  // namespace polylog
