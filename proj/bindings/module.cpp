#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylog/catalog.hpp"
#include "polylog/recurrences.hpp"

namespace py = pybind11;
using namespace polylog;

namespace {

Complex to_inner(std::complex<double> s, mpfr_prec_t wp) {
    return Complex(s.real(), s.imag(), wp);
}

std::complex<double> to_py(const Complex& v) {
    return {v.re().to_double(), v.im().to_double()};
}

EvalContext make_ctx(long prec) {
    EvalContext ctx;
    ctx.precision = prec;
    ctx.validate();
    return ctx;
}

}  // namespace

PYBIND11_MODULE(_polylog, m) {
    m.doc() = "exact and high-precision polylogarithm toolkit";

    m.def(
        "bern", [](unsigned n) {
            Sequences seqs;
            return rational_str(seqs.bernoulli_number(n));
        },
        py::arg("n"));

    m.def(
        "tangent",
        [](unsigned n, unsigned long mod) {
            if (n == 0) throw std::invalid_argument("tangent index must be >= 1");
            Sequences seqs;
            const mpz_class t = seqs.tangent_number(n);
            if (mod != 0) return std::to_string(mpz_fdiv_ui(t.get_mpz_t(), mod));
            return t.get_str();
        },
        py::arg("n"), py::arg("mod") = 0UL);

    m.def(
        "zeta",
        [](std::complex<double> s, long prec) {
            EvalContext ctx = make_ctx(prec);
            return to_py(zeta_continue(to_inner(s, ctx.working_prec()), ctx));
        },
        py::arg("s"), py::arg("prec") = 128L);

    m.def(
        "li",
        [](std::complex<double> s, unsigned long q, unsigned long j, long prec) {
            EvalContext ctx = make_ctx(prec);
            return to_py(li_continue(to_inner(s, ctx.working_prec()), RootOfUnity(q, j), ctx));
        },
        py::arg("s"), py::arg("q") = 1UL, py::arg("j") = 0UL, py::arg("prec") = 128L);

    m.def(
        "lerch",
        [](std::complex<double> s, const std::string& a, unsigned long q, unsigned long j,
           long prec) {
            EvalContext ctx = make_ctx(prec);
            return to_py(lerch_direct(to_inner(s, ctx.working_prec()), parse_rational(a),
                                      RootOfUnity(q, j), ctx));
        },
        py::arg("s"), py::arg("a") = "1", py::arg("q") = 1UL, py::arg("j") = 0UL,
        py::arg("prec") = 128L);

    m.def(
        "verify",
        [](const std::string& name, std::optional<unsigned long> q,
           std::optional<unsigned long> j, std::optional<unsigned long> k, unsigned points,
           long prec, unsigned long seed) {
            const auto id = identity_by_name(name);
            if (!id) throw std::invalid_argument("unknown identity: " + name);
            EvalContext ctx = make_ctx(prec);
            ResidualReport rep =
                verify(instantiate(*id, q, j, k), sample_points(points, seed, ctx.working_prec()),
                       ctx);
            rep.seed = seed;
            return rep.json();
        },
        py::arg("name"), py::arg("q") = py::none(), py::arg("j") = py::none(),
        py::arg("k") = py::none(), py::arg("points") = 10U, py::arg("prec") = 128L,
        py::arg("seed") = 0UL);

    m.def("list_identities", [] {
        std::vector<std::string> names;
        for (const IdentityDescription& d : list_identities()) names.emplace_back(d.name);
        return names;
    });

    m.def(
        "congruence",
        [](unsigned max_n) {
            Sequences seqs;
            return congruence_scan(max_n, seqs).json();
        },
        py::arg("max_n"));

    m.def(
        "zseries",
        [](const std::string& x, unsigned terms) {
            const ZSeriesRep rep = zseries_representation(parse_rational(x), terms);
            std::vector<std::string> out;
            out.reserve(rep.coeff.size());
            for (const mpq_class& c : rep.coeff) out.push_back(rational_str(c));
            return out;
        },
        py::arg("x"), py::arg("terms"));

    m.def(
        "check_recurrences",
        [](const std::string& which, unsigned n_max, unsigned long k) {
            if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
            Sequences seqs;
            bool ok = true;
            if (which == "k3") {
                for (unsigned n = 1; n <= n_max && ok; ++n) ok = check_k3_recurrences(n, seqs);
            } else if (which == "thm41") {
                for (unsigned n = 1; n <= n_max && ok; ++n)
                    ok = check_bernoulli_recurrences(n, k, seqs);
            } else if (which == "negint") {
                for (unsigned n = 1; n <= n_max && ok; ++n)
                    ok = check_negint_specializations(n, k, seqs);
            } else if (which == "tangent3" || which == "tangent5") {
                const TangentVariant variant =
                    which == "tangent3" ? TangentVariant::Mod3 : TangentVariant::Mod5;
                for (unsigned n = 1; n <= n_max && ok; ++n) {
                    mpz_class want = seqs.tangent_number(n);
                    if (n % 2 != 0) want = -want;
                    ok = tangent_via_recurrence(n, variant) == want;
                }
            } else {
                throw std::invalid_argument("unknown family: " + which);
            }
            return ok;
        },
        py::arg("which"), py::arg("n_max"), py::arg("k") = 3UL);
}
