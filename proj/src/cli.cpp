#include "hallkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hallkit/json_io.hpp"
#include "hallkit/verify.hpp"

namespace hallkit {

namespace {

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    Budget budget;
    bool quiet = false;
    bool stdin_used = false;

    void log(const std::string& msg) const {
        if (!quiet) err << msg << "\n";
    }
};

// Inline JSON, @path, or - for stdin.
Json read_json_arg(Context& ctx, const std::string& arg, const std::string& what) {
    if (arg == "-") {
        if (ctx.stdin_used) throw InputError("stdin can be read only once");
        ctx.stdin_used = true;
        std::stringstream ss;
        ss << ctx.in.rdbuf();
        return parse_json(ss.str(), what + " (stdin)");
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream file(arg.substr(1));
        if (!file) throw InputError("cannot open " + arg.substr(1));
        std::stringstream ss;
        ss << file.rdbuf();
        return parse_json(ss.str(), what + " (" + arg.substr(1) + ")");
    }
    return parse_json(arg, what);
}

QuiverPtr parse_quiver(Context& ctx, const std::string& s) {
    if (!s.empty() && (s[0] == '{' || s[0] == '@' || s == "-")) return share(quiver_from_json(read_json_arg(ctx, s, "quiver")));
    return share(Quiver::preset(s));
}

DimVec parse_dims(Context& ctx, const std::string& s) {
    const Json j = read_json_arg(ctx, s, "dimension vector");
    if (j.is_number_integer()) return {j.get<int>()};
    if (!j.is_array()) throw InputError("dimension vector must be an array of integers");
    DimVec d;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError("dimension vector must be an array of integers");
        d.push_back(x.get<int>());
    }
    return d;
}

Json fit_to_json(const PolyFit& fit) {
    Json samples = Json::array();
    for (const auto& s : fit.samples) samples.push_back({{"q", s.point}, {"value", rational_to_string(s.value)}});
    return {{"poly", ratpoly_to_json(fit.poly)},
            {"integer", is_integer_poly(fit.poly)},
            {"degree_bound", fit.degree_bound},
            {"samples", samples}};
}

void print_doc(const Context& ctx, const Json& j) { ctx.out << j.dump(2) << "\n"; }

// One JSON line per report, then a summary line; returns the exit code.
int print_reports(const Context& ctx, const std::string& identity, const std::vector<CheckReport>& rs, bool failures_only) {
    size_t bad = 0;
    for (const auto& r : rs) {
        if (!r.pass) ++bad;
        if (!failures_only || !r.pass) ctx.out << report_to_json(r).dump() << "\n";
    }
    ctx.out << Json{{"summary", identity}, {"instances", rs.size()}, {"failures", bad}}.dump() << "\n";
    return bad == 0 ? 0 : 1;
}

// classify -------------------------------------------------------------------

struct ClassifyArgs {
    std::string quiver = "jordan";
    int q = 2;
    std::string dims;
};

int cmd_classify(Context& ctx, const ClassifyArgs& a) {
    QuiverPtr quiver = parse_quiver(ctx, a.quiver);
    Field f = field_of_order(a.q, ctx.budget);
    DimVec d = parse_dims(ctx, a.dims);
    quiver->check_dims(d);
    const IsoClassTable t = iso_classes(quiver, d, f, ctx.budget);
    ctx.log(std::to_string(t.entries.size()) + " classes");
    print_doc(ctx, table_to_json(t));
    return 0;
}

// hall / grassmannian ----------------------------------------------------------

int cmd_hall(Context& ctx, const std::vector<std::string>& reps) {
    const Rep m = rep_from_json(read_json_arg(ctx, reps[0], "M"), ctx.budget);
    const Rep n = rep_from_json(read_json_arg(ctx, reps[1], "N"), ctx.budget);
    const Rep x = rep_from_json(read_json_arg(ctx, reps[2], "X"), ctx.budget);
    if (!m.compatible(n) || !m.compatible(x)) throw InputError("M, N and X must share quiver and field");
    const BigInt F = hall_number(m, n, x, ctx.budget);
    const BigInt am = aut_size(m, ctx.budget), an = aut_size(n, ctx.budget), ax = aut_size(x, ctx.budget);
    print_doc(ctx, {{"F", F.get_str()},
                    {"P", p_number(m, n, x, ctx.budget).get_str()},
                    {"a_M", am.get_str()},
                    {"a_N", an.get_str()},
                    {"a_X", ax.get_str()}});
    return 0;
}

int cmd_grassmannian(Context& ctx, const std::string& rep, const std::string& dims) {
    const Rep x = rep_from_json(read_json_arg(ctx, rep, "X"), ctx.budget);
    const DimVec e = parse_dims(ctx, dims);
    x.quiver().check_dims(e);
    if (!dim_leq(e, x.dims())) throw InputError("subdimension exceeds dim X");
    print_doc(ctx, {{"count", grassmannian_count(x, e, ctx.budget).get_str()}});
    return 0;
}

// polynomials ----------------------------------------------------------------

int cmd_hallpoly(Context& ctx, bool classical, bool discrete, const std::vector<std::string>& args) {
    if (classical == discrete) throw InputError("pass exactly one of --classical and --discrete");
    if (classical) {
        const Partition l = partition_from_json(read_json_arg(ctx, args[0], "lambda"));
        const Partition m = partition_from_json(read_json_arg(ctx, args[1], "mu"));
        const Partition n = partition_from_json(read_json_arg(ctx, args[2], "nu"));
        print_doc(ctx, fit_to_json(classical_hall_fit(l, m, n, ctx.budget)));
    } else {
        const DiscreteClass mu = discrete_from_json(read_json_arg(ctx, args[0], "mu"));
        const DiscreteClass nu = discrete_from_json(read_json_arg(ctx, args[1], "nu"));
        const DiscreteClass xi = discrete_from_json(read_json_arg(ctx, args[2], "xi"));
        print_doc(ctx, fit_to_json(universal_hall_fit(mu, nu, xi, ctx.budget)));
    }
    return 0;
}

struct SegreArgs {
    std::vector<std::string> symbols;
    bool check = false;
    std::vector<int> qs;
};

int cmd_segre(Context& ctx, const SegreArgs& a) {
    const SegreSymbol rho = segre_from_json(read_json_arg(ctx, a.symbols[0], "rho"));
    const SegreSymbol sigma = segre_from_json(read_json_arg(ctx, a.symbols[1], "sigma"));
    const SegreSymbol tau = segre_from_json(read_json_arg(ctx, a.symbols[2], "tau"));
    Json doc{{"rho", segre_to_string(rho)},
             {"sigma", segre_to_string(sigma)},
             {"tau", segre_to_string(tau)},
             {"F", ratpoly_to_json(segre_hall_poly(rho, sigma, tau, ctx.budget))}};
    for (const auto& [name, s] : {std::pair{"rho", &rho}, std::pair{"sigma", &sigma}, std::pair{"tau", &tau}}) {
        doc["n"][name] = ratpoly_to_json(n_sigma_poly(*s));
        doc["a"][name] = ratpoly_to_json(a_sigma_poly(*s));
    }
    int code = 0;
    if (a.check) {
        std::vector<int> qs = a.qs.empty() ? std::vector<int>{2, 3} : a.qs;
        Json reports = Json::array();
        size_t bad = 0;
        for (int q : qs) {
            ctx.log("checking at q=" + std::to_string(q));
            for (const auto& r : segre_sum_check(rho, sigma, tau, field_of_order(q, ctx.budget), ctx.budget)) {
                bad += !r.pass;
                reports.push_back(report_to_json(r));
            }
        }
        doc["reports"] = reports;
        doc["failures"] = bad;
        if (bad) code = 1;
    }
    print_doc(ctx, doc);
    return code;
}

int cmd_decomp(Context& ctx, const std::vector<std::string>& symbols) {
    const DecompSymbol alpha = decomp_from_json(read_json_arg(ctx, symbols[0], "alpha"));
    const DecompSymbol beta = decomp_from_json(read_json_arg(ctx, symbols[1], "beta"));
    const DecompSymbol gamma = decomp_from_json(read_json_arg(ctx, symbols[2], "gamma"));
    Json doc = fit_to_json(decomp_hall_fit(alpha, beta, gamma, ctx.budget));
    doc["alpha"] = decomp_to_string(alpha);
    doc["beta"] = decomp_to_string(beta);
    doc["gamma"] = decomp_to_string(gamma);
    print_doc(ctx, doc);
    return 0;
}

// verify / example -------------------------------------------------------------

struct VerifyArgs {
    std::string identity;
    std::string quiver = "jordan";
    int q = 2;
    std::optional<int> max_dim;
    std::string dims;
    bool all_classes = false;
    int trials = 25;
    std::uint64_t seed = 1;
    bool failures_only = false;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
    Field f = field_of_order(a.q, ctx.budget);
    if (a.identity == "torsion") return print_reports(ctx, a.identity, torsion_split_check(f, ctx.budget), a.failures_only);
    if (a.identity == "kronecker-regular") {
        std::vector<CheckReport> rs;
        for (int n : {0, 1})
            for (auto& r : kronecker_regular_check(f, n, ctx.budget)) rs.push_back(std::move(r));
        return print_reports(ctx, a.identity, rs, a.failures_only);
    }
    if (a.identity == "example") return print_reports(ctx, a.identity, example_reproduce(f, ctx.budget), a.failures_only);

    QuiverPtr quiver = parse_quiver(ctx, a.quiver);
    if (a.identity == "euler") {
        const int max_dim = a.max_dim.value_or(2);
        if (max_dim < 0) throw InputError("--max-dim must be >= 0");
        return print_reports(ctx, a.identity, euler_check(quiver, f, max_dim, a.trials, a.seed), a.failures_only);
    }

    DimVec bound;
    if (!a.dims.empty()) {
        if (a.max_dim) throw InputError("pass at most one of --dims and --max-dim");
        bound = parse_dims(ctx, a.dims);
    } else {
        const int m = a.max_dim.value_or(2);
        if (m < 0) throw InputError("--max-dim must be >= 0");
        bound.assign(quiver->n_vertices(), m);
    }
    quiver->check_dims(bound);
    const bool nilpotent = quiver->is_oriented_cycle() && !a.all_classes;
    ctx.log("building class tables below " + Json(bound).dump() + (nilpotent ? " (nilpotent classes)" : ""));
    ClassUniverse u(quiver, f, bound, nilpotent, ctx.budget);
    ctx.log(std::to_string(u.size()) + " classes");

    std::vector<CheckReport> rs;
    if (a.identity == "green")
        rs = green_check(u);
    else if (a.identity == "assoc")
        rs = assoc_check(u);
    else if (a.identity == "riedtmann")
        rs = riedtmann_check(u);
    else if (a.identity == "tables")
        rs = table_check(u);
    else if (a.identity == "defect")
        rs = defect_check(u);
    else
        throw InputError("unknown identity " + a.identity);
    return print_reports(ctx, a.identity, rs, a.failures_only);
}

int cmd_example(Context& ctx, int q, bool failures_only) {
    const auto rs = example_reproduce(field_of_order(q, ctx.budget), ctx.budget);
    const int code = print_reports(ctx, "example", rs, failures_only);
    auto first = [&](const std::string& id) {
        for (const auto& r : rs)
            if (r.identity == id) return rational_to_string(r.lhs);
        return std::string("0/1");
    };
    const SegreSymbol rho = make_segre({{{1, 1}, 1}, {{1, 1, 1}, 1}, {{2, 1}, 1}});
    const SegreSymbol sigma = make_segre({{{1}, 1}, {{1}, 1}});
    const SegreSymbol tau = make_segre({{{1, 1, 1}, 1}, {{2, 1, 1}, 1}, {{2, 1}, 1}});
    const RatPoly F = segre_hall_poly(rho, sigma, tau, ctx.budget);
    ctx.out << Json{{"q", q},
                    {"F", ratpoly_to_json(F)},
                    {"F(q)", rational_to_string(F.eval(q))},
                    {"sum_over_R_S", first("example_sum_RS")},
                    {"sum_over_S_T", first("example_sum_ST")},
                    {"sum_over_R_T", first("example_sum_RT")}}
                   .dump()
            << "\n";
    return code;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err, default_budget()};
    CLI::App app{"Hall numbers and Hall polynomials of quiver representations over finite fields", "hallkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-candidates", ctx.budget.max_candidates, "Cap on enumerated endomorphism candidates")
        ->capture_default_str();
    app.add_option("--max-subspaces", ctx.budget.max_subspaces, "Cap on enumerated subspace tuples per call")
        ->capture_default_str();
    app.add_flag("--quiet", ctx.quiet, "Suppress progress messages on stderr");

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "List the isomorphism classes of one dimension vector");
    classify->add_option("--quiver", ca.quiver, "Preset name or quiver JSON")->capture_default_str();
    classify->add_option("--q", ca.q, "Field order")->capture_default_str();
    classify->add_option("--dims", ca.dims, "Dimension vector, e.g. [2,1]")->required();

    std::vector<std::string> hall_args;
    auto* hall = app.add_subcommand("hall", "F and P numbers for representations M N X (JSON, @file or -)");
    hall->add_option("reps", hall_args, "M N X")->required()->expected(3)->allow_extra_args(false);

    std::string gr_rep, gr_dims;
    auto* gr = app.add_subcommand("grassmannian", "Number of subrepresentations of X with dimension vector e");
    gr->add_option("X", gr_rep, "Representation JSON")->required();
    gr->add_option("e", gr_dims, "Dimension vector")->required();

    bool hp_classical = false, hp_discrete = false;
    std::vector<std::string> hp_args;
    auto* hp = app.add_subcommand("hallpoly", "Hall polynomial by interpolation");
    hp->add_flag("--classical", hp_classical, "Arguments are partitions lambda mu nu (Jordan quiver)");
    hp->add_flag("--discrete", hp_discrete, "Arguments are discrete classes mu nu xi");
    hp->add_option("args", hp_args, "Three partitions or classes")->required()->expected(3)->allow_extra_args(false);

    SegreArgs sa;
    auto* segre = app.add_subcommand("segre", "Segre Hall polynomial F_{rho sigma}^tau with n and a polynomials");
    segre->add_option("symbols", sa.symbols, "rho sigma tau, each [[[parts],degree],...]")->required()->expected(3)->allow_extra_args(false);
    segre->add_flag("--check", sa.check, "Also compare against brute-force class sums");
    segre->add_option("--q", sa.qs, "Field orders for --check (default 2 3)");

    std::vector<std::string> dc_args;
    auto* decomp = app.add_subcommand("decomp", "Kronecker decomposition-class Hall polynomial");
    decomp->add_option("symbols", dc_args, "alpha beta gamma, each {\"P\":[..],\"I\":[..],\"regular\":[..]}")
        ->required()
        ->expected(3)
        ->allow_extra_args(false);

    VerifyArgs va;
    const std::vector<std::string> identities{"green", "assoc",  "riedtmann",       "tables", "defect",
                                              "euler", "torsion", "kronecker-regular", "example"};
    auto* verify = app.add_subcommand("verify", "Exhaustive identity sweep; prints one report per instance");
    verify->add_option("--identity", va.identity, "One of: " + join(identities))
        ->required()
        ->check(CLI::IsMember(identities));
    verify->add_option("--quiver", va.quiver, "Preset name or quiver JSON")->capture_default_str();
    verify->add_option("--q", va.q, "Field order")->capture_default_str();
    verify->add_option("--max-dim", va.max_dim, "Bound on every vertex dimension (default 2)");
    verify->add_option("--dims", va.dims, "Componentwise bound on dimension vectors");
    verify->add_flag("--all-classes", va.all_classes, "On cyclic quivers, include non-nilpotent classes");
    verify->add_option("--trials", va.trials, "Random pairs for euler")->capture_default_str();
    verify->add_option("--seed", va.seed, "Seed for euler")->capture_default_str();
    verify->add_flag("--failures-only", va.failures_only, "Print only failing reports and the summary");

    int ex_q = 3;
    bool ex_failures_only = false;
    auto* example = app.add_subcommand("example", "Segre worked example: pointwise counts, sums and polynomial");
    example->add_option("--q", ex_q, "Field order (at least 3)")->capture_default_str();
    example->add_flag("--failures-only", ex_failures_only, "Print only failing reports and the summary");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*classify) return cmd_classify(ctx, ca);
        if (*hall) return cmd_hall(ctx, hall_args);
        if (*gr) return cmd_grassmannian(ctx, gr_rep, gr_dims);
        if (*hp) return cmd_hallpoly(ctx, hp_classical, hp_discrete, hp_args);
        if (*segre) return cmd_segre(ctx, sa);
        if (*decomp) return cmd_decomp(ctx, dc_args);
        if (*verify) return cmd_verify(ctx, va);
        if (*example) return cmd_example(ctx, ex_q, ex_failures_only);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace hallkit
