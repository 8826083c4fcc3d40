#include "cli.hpp"

#include <mpfr.h>

#include <array>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polylog/catalog.hpp"
#include "polylog/recurrences.hpp"

namespace polylog::cli {
namespace {

Real parse_real(const std::string& text, mpfr_prec_t prec) {
    if (text.empty()) throw std::invalid_argument("empty numeric literal");
    Real r(prec);
    char* end = nullptr;
    mpfr_strtofr(r.raw(), text.c_str(), &end, 10, MPFR_RNDN);
    if (end != text.c_str() + text.size())
        throw std::invalid_argument("bad numeric literal: " + text);
    return r;
}

// "RE" or "RE,IM"
Complex parse_complex(const std::string& text, mpfr_prec_t prec) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return Complex(parse_real(text, prec), Real(prec));
    return Complex(parse_real(text.substr(0, comma), prec),
                   parse_real(text.substr(comma + 1), prec));
}

long resolve_precision(long flag_value) {
    if (flag_value > 0) {
        if (flag_value < 16) throw std::invalid_argument("--prec must be at least 16 bits");
        return flag_value;
    }
    if (const char* env = std::getenv("POLYLOG_PREC")) {
        const std::string text(env);
        char* end = nullptr;
        const long v = std::strtol(text.c_str(), &end, 10);
        if (text.empty() || end != text.c_str() + text.size() || v < 16)
            throw std::invalid_argument("bad POLYLOG_PREC value: " + text);
        return v;
    }
    return 128;
}

std::string instance_label(const IdentityInstance& inst) {
    std::string s = identity_name(inst.id);
    if (inst.id == IdentityId::ZetaSeries) return s + " terms=" + std::to_string(inst.terms);
    s += " q=" + std::to_string(inst.q);
    s += " j=" + std::to_string(inst.j);
    s += " k=" + std::to_string(inst.k);
    return s;
}

void print_report(const ResidualReport& rep, std::ostream& out) {
    out << instance_label(rep.inst) << ": " << (rep.pass ? "pass" : "FAIL")
        << " max_residual=" << rep.max_residual.str(8) << " points=" << rep.points.size()
        << "\n";
}

int cmd_eval(const std::string& which, const std::string& s_text,
             const std::optional<unsigned long>& q, const std::optional<unsigned long>& j,
             const std::optional<std::string>& a_text, long prec, std::ostream& out) {
    EvalContext ctx;
    ctx.precision = resolve_precision(prec);
    ctx.validate();
    const mpfr_prec_t wp = ctx.working_prec();
    const Complex s = parse_complex(s_text, wp);

    Complex value(wp);
    if (which == "zeta") {
        if (q || j || a_text)
            throw std::invalid_argument("--q/--j/--a do not apply to zeta");
        value = zeta_continue(s, ctx);
    } else {
        const unsigned long qv = q.value_or(1);
        const RootOfUnity z(qv, j.value_or(qv == 1 ? 0 : 1));
        if (which == "li") {
            if (a_text) throw std::invalid_argument("--a does not apply to li");
            value = li_continue(s, z, ctx);
        } else {
            const mpq_class a = a_text ? parse_rational(*a_text) : mpq_class(1);
            value = lerch_direct(s, a, z, ctx);
        }
    }
    out << value.round_to(ctx.precision).str() << "\n";
    return 0;
}

int cmd_verify(const std::string& name, const std::optional<unsigned long>& q,
               const std::optional<unsigned long>& j, const std::optional<unsigned long>& k,
               unsigned points, long prec, unsigned long seed, bool json, std::ostream& out) {
    const auto id = identity_by_name(name);
    if (!id) throw std::invalid_argument("unknown identity: " + name);
    const IdentityInstance inst = instantiate(*id, q, j, k);

    EvalContext ctx;
    ctx.precision = resolve_precision(prec);
    ctx.validate();
    ResidualReport rep = verify(inst, sample_points(points, seed, ctx.working_prec()), ctx);
    rep.seed = seed;
    if (json)
        out << rep.json() << "\n";
    else
        print_report(rep, out);
    return rep.pass ? 0 : 1;
}

// One valid instance set covering every identity: the root-of-unity family
// on a q = 1..6 grid plus the k = 13 corners, fixed-z rows once each.
std::vector<IdentityInstance> default_grid() {
    using Id = IdentityId;
    std::vector<IdentityInstance> grid;
    const std::vector<std::array<unsigned long, 3>> fam = {
        {1, 0, 2}, {2, 1, 3},  {3, 1, 4},  {4, 1, 5}, {5, 2, 6},
        {6, 1, 7}, {2, 1, 13}, {3, 2, 13}, {6, 5, 13}};

    grid.push_back(instantiate(Id::Ramaswami2));
    grid.push_back(instantiate(Id::Ramaswami3));
    grid.push_back(instantiate(Id::Ramaswami6));
    for (unsigned long k : {2ul, 5ul, 13ul}) grid.push_back(instantiate(Id::ApostolK, {}, {}, k));
    for (unsigned long k : {3ul, 6ul, 13ul})
        grid.push_back(instantiate(Id::ApostolMobius, {}, {}, k));
    for (Id id : {Id::TransMain, Id::TransEuler, Id::TransAlt, Id::TransAdd, Id::TransSub,
                  Id::MobiusAlt, Id::Mobius, Id::MobiusSub}) {
        for (const auto& p : fam) {
            if (id == Id::TransEuler && p[0] == 1) continue;
            grid.push_back(instantiate(id, p[0], p[1], p[2]));
        }
    }
    grid.push_back(instantiate(Id::MobiusK3));
    for (const auto& p : std::vector<std::array<unsigned long, 3>>{{1, 0, 3},
                                                                   {2, 1, 3},
                                                                   {3, 1, 4},
                                                                   {4, 1, 5},
                                                                   {5, 2, 6},
                                                                   {6, 1, 7},
                                                                   {4, 3, 13}})
        grid.push_back(instantiate(Id::TaHalf, p[0], p[1], p[2]));
    for (const auto& p : fam) grid.push_back(instantiate(Id::GcdFree, p[0], p[1], p[2]));
    for (unsigned long k : {3ul, 5ul, 13ul}) grid.push_back(instantiate(Id::AltEven, {}, {}, k));
    for (unsigned long k : {3ul, 5ul, 13ul}) grid.push_back(instantiate(Id::AltOdd, {}, {}, k));
    grid.push_back(instantiate(Id::ZetaSeries));
    return grid;
}

int cmd_verify_all(unsigned points, long prec, unsigned long seed, bool json, std::ostream& out) {
    EvalContext ctx;
    ctx.precision = resolve_precision(prec);
    ctx.validate();
    const auto pts = sample_points(points, seed, ctx.working_prec());

    size_t failed = 0;
    const auto grid = default_grid();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const IdentityInstance& inst : grid) {
        ResidualReport rep = verify(inst, pts, ctx);
        rep.seed = seed;
        if (!rep.pass) ++failed;
        if (json)
            arr.push_back(nlohmann::ordered_json::parse(rep.json()));
        else
            print_report(rep, out);
    }
    if (json) {
        out << arr.dump(2) << "\n";
    } else if (failed == 0) {
        out << "all " << grid.size() << " instances passed\n";
    } else {
        out << failed << " of " << grid.size() << " instances FAILED\n";
    }
    return failed == 0 ? 0 : 1;
}

int cmd_recurrence(const std::string& which, unsigned n_max,
                   const std::optional<unsigned long>& k, std::ostream& out) {
    if (n_max == 0) throw std::invalid_argument("--n-max must be >= 1");
    const bool takes_k = which == "thm41" || which == "negint";
    if (k && !takes_k) throw std::invalid_argument("--k does not apply to " + which);

    Sequences seqs;
    bool ok = true;
    std::string label = which;
    if (takes_k) {
        const unsigned long kv = k.value_or(3);
        label += " k=" + std::to_string(kv);
        for (unsigned n = 1; n <= n_max && ok; ++n)
            ok = which == "thm41" ? check_bernoulli_recurrences(n, kv, seqs)
                                  : check_negint_specializations(n, kv, seqs);
    } else if (which == "k3") {
        for (unsigned n = 1; n <= n_max && ok; ++n) ok = check_k3_recurrences(n, seqs);
    } else {
        const TangentVariant variant =
            which == "tangent3" ? TangentVariant::Mod3 : TangentVariant::Mod5;
        for (unsigned n = 1; n <= n_max && ok; ++n) {
            mpz_class want = seqs.tangent_number(n);
            if (n % 2 != 0) want = -want;
            ok = tangent_via_recurrence(n, variant) == want;
        }
    }
    out << label << " n=1.." << n_max << ": " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_congruence(unsigned max_n, bool json, std::ostream& out) {
    Sequences seqs;
    const CongruenceReport rep = congruence_scan(max_n, seqs);
    if (json) {
        out << rep.json() << "\n";
    } else {
        for (const CongruenceRow& r : rep.rows) {
            out << "n=" << r.n << " t=" << r.t.get_str() << " mod2=" << r.mod2
                << " mod3=" << r.mod3 << " mod5=" << r.mod5 << " mod10=" << r.mod10 << " "
                << (r.pass ? "ok" : "FAIL") << "\n";
        }
        out << (rep.pass ? "pass" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact and high-precision polylogarithm toolkit", "polylog"};
    app.require_subcommand(1);

    unsigned bern_n = 0;
    auto* bern = app.add_subcommand("bern", "print a Bernoulli number as p/q");
    bern->add_option("n", bern_n, "index")->required();

    unsigned tan_n = 0;
    std::optional<unsigned long> tan_mod;
    auto* tangent = app.add_subcommand("tangent", "print a tangent number");
    tangent->add_option("n", tan_n, "index, n >= 1")->required();
    tangent->add_option("--mod", tan_mod, "print the residue modulo this instead");

    std::string eval_which, eval_s;
    std::optional<unsigned long> eval_q, eval_j;
    std::optional<std::string> eval_a;
    long eval_prec = 0;
    auto* eval = app.add_subcommand("eval", "evaluate li, zeta, or lerch at a point");
    eval->add_option("function", eval_which, "li, zeta, or lerch")
        ->required()
        ->check(CLI::IsMember({"li", "zeta", "lerch"}));
    eval->add_option("--s", eval_s, "argument, RE or RE,IM")->required();
    eval->add_option("--q", eval_q, "root-of-unity order");
    eval->add_option("--j", eval_j, "root-of-unity exponent, coprime to q");
    eval->add_option("--a", eval_a, "lerch offset as P/Q, default 1");
    eval->add_option("--prec", eval_prec, "precision in bits, default 128");

    std::string v_name;
    std::optional<unsigned long> v_q, v_j, v_k;
    unsigned v_points = 10;
    long v_prec = 0;
    unsigned long v_seed = 0;
    bool v_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "check one identity at sampled points");
    verify_cmd->add_option("--identity", v_name, "catalog name, see `list`")->required();
    verify_cmd->add_option("--q", v_q, "root-of-unity order");
    verify_cmd->add_option("--j", v_j, "root-of-unity exponent");
    verify_cmd->add_option("--k", v_k, "shift modulus, k = 1 mod q");
    verify_cmd->add_option("--points", v_points, "sample count, default 10");
    verify_cmd->add_option("--prec", v_prec, "precision in bits, default 128");
    verify_cmd->add_option("--seed", v_seed, "sampler seed, default 0");
    verify_cmd->add_flag("--json", v_json, "emit the full report as JSON");

    unsigned va_points = 3;
    long va_prec = 0;
    unsigned long va_seed = 0;
    bool va_json = false;
    auto* verify_all =
        app.add_subcommand("verify-all", "run the whole catalog on a default parameter grid");
    verify_all->add_option("--points", va_points, "sample count per instance, default 3");
    verify_all->add_option("--prec", va_prec, "precision in bits, default 128");
    verify_all->add_option("--seed", va_seed, "sampler seed, default 0");
    verify_all->add_flag("--json", va_json, "emit an array of reports as JSON");

    std::string r_which;
    unsigned r_nmax = 0;
    std::optional<unsigned long> r_k;
    auto* rec = app.add_subcommand("recurrence", "run an exact recurrence family check");
    rec->add_option("--which", r_which, "thm41, k3, negint, tangent3, or tangent5")
        ->required()
        ->check(CLI::IsMember({"thm41", "k3", "negint", "tangent3", "tangent5"}));
    rec->add_option("--n-max", r_nmax, "check n = 1..N")->required();
    rec->add_option("--k", r_k, "shift modulus for thm41/negint, odd >= 3, default 3");

    unsigned c_max = 0;
    bool c_json = false;
    auto* cong = app.add_subcommand("congruence", "scan tangent-number residues");
    cong->add_option("--max", c_max, "scan n = 2..N")->required();
    cong->add_flag("--json", c_json, "emit the scan as JSON");

    std::string z_x;
    unsigned z_terms = 0;
    auto* zs = app.add_subcommand("zseries", "odd-zeta series coefficients for a rational");
    zs->add_option("--x", z_x, "target as P/Q")->required();
    zs->add_option("--terms", z_terms, "coefficient count, >= 1")->required();

    auto* list_cmd = app.add_subcommand("list", "print the identity catalog");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        const std::string what = e.get_name();
        return (what == "CallForHelp" || what == "CallForAllHelp" || what == "Success") ? 0 : 2;
    }

    try {
        if (app.got_subcommand(bern)) {
            Sequences seqs;
            out << rational_str(seqs.bernoulli_number(bern_n)) << "\n";
            return 0;
        }
        if (app.got_subcommand(tangent)) {
            if (tan_n == 0) throw std::invalid_argument("tangent index must be >= 1");
            Sequences seqs;
            const mpz_class t = seqs.tangent_number(tan_n);
            if (tan_mod) {
                if (*tan_mod == 0) throw std::invalid_argument("--mod must be >= 1");
                out << mpz_fdiv_ui(t.get_mpz_t(), *tan_mod) << "\n";
            } else {
                out << t.get_str() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(eval))
            return cmd_eval(eval_which, eval_s, eval_q, eval_j, eval_a, eval_prec, out);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(v_name, v_q, v_j, v_k, v_points, v_prec, v_seed, v_json, out);
        if (app.got_subcommand(verify_all))
            return cmd_verify_all(va_points, va_prec, va_seed, va_json, out);
        if (app.got_subcommand(rec)) return cmd_recurrence(r_which, r_nmax, r_k, out);
        if (app.got_subcommand(cong)) return cmd_congruence(c_max, c_json, out);
        if (app.got_subcommand(zs)) {
            const ZSeriesRep rep = zseries_representation(parse_rational(z_x), z_terms);
            for (const mpq_class& c : rep.coeff) out << rational_str(c) << "\n";
            return 0;
        }
        if (app.got_subcommand(list_cmd)) {
            for (const IdentityDescription& d : list_identities())
                out << d.name << ": " << d.predicate << "\n";
            return 0;
        }
        err << "no command selected\n";
        return 2;
    } catch (const EvalError& e) {
        err << "evaluation error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace polylog::cli
