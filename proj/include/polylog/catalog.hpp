#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polylog/analytic.hpp"

// The closed catalog of translation identities between Li_z(s) at a root of
// unity z and its shifts Li_z(s+m), as independently evaluable LHS/RHS pairs,
// plus a residual-based verifier over sampled points.

namespace polylog {

enum class IdentityId {
    Ramaswami2,
    Ramaswami3,
    Ramaswami6,
    ApostolK,
    ApostolMobius,
    TransMain,
    TransEuler,
    TransAlt,
    TransAdd,
    TransSub,
    MobiusAlt,
    Mobius,
    MobiusSub,
    MobiusK3,
    TaHalf,
    GcdFree,
    AltEven,
    AltOdd,
    ZetaSeries,
};

inline constexpr int kIdentityCount = 19;

struct InvalidModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPrimitiveRoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lowercase-hyphenated form, e.g. "trans-main".
const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_by_name(std::string_view name);

struct IdentityInstance {
    IdentityId id;
    unsigned long q = 1;
    unsigned long j = 0;
    unsigned long k = 2;
    unsigned terms = 50;  // partial-sum length, ZetaSeries only

    RootOfUnity z() const { return RootOfUnity(q, j); }
};

// Validates and fills defaults; empty optionals mean "use the identity's
// default". Fixed-parameter identities reject conflicting explicit values.
IdentityInstance instantiate(IdentityId id, std::optional<unsigned long> q = {},
                             std::optional<unsigned long> j = {},
                             std::optional<unsigned long> k = {});

// Both sides evaluated independently at the instance's precision. Points
// outside the direct-summation half-plane are served by the continuation
// ladder; its errors propagate.
std::pair<Complex, Complex> eval_sides(const IdentityInstance& inst, const Complex& s,
                                       EvalContext& ctx);

struct PointResult {
    Complex s;
    Real residual;      // |LHS - RHS|, meaningless when error is set
    Real lhs_abs;       // |LHS|, used for the pass scale
    std::string error;  // nonempty when evaluation failed at this point
};

struct ResidualReport {
    IdentityInstance inst;
    long precision;
    unsigned long seed = 0;
    std::vector<PointResult> points;
    Real max_residual;
    Real scale;  // max over points of max(1, |LHS|)
    bool pass;

    std::string json() const;
};

// Deterministic sample of the verification region Re in (1.1, 4),
// Im in (-5, 5).
std::vector<Complex> sample_points(unsigned n, unsigned long seed, mpfr_prec_t prec);

// pass iff every point evaluated and max_residual < 2^-(p-g-8) * scale.
ResidualReport verify(const IdentityInstance& inst, const std::vector<Complex>& points,
                      EvalContext& ctx);

struct IdentityDescription {
    IdentityId id;
    const char* name;
    const char* predicate;
};

// Static catalog dump in enum order.
const std::vector<IdentityDescription>& list_identities();

}  // namespace polylog
