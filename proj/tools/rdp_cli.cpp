// Command-line frontend: evaluate reversed Dickson polynomials, analyze
// their permutation behaviour, print value tables, and run the verification
// suites. Tables print as CSV; analyze and verify print a JSON envelope.

#include <CLI11.hpp>
#include <iostream>

#include "rdp/report.hpp"
#include "rdp/verify.hpp"

#ifndef RDP_DATA_DIR
#define RDP_DATA_DIR "tests/data"
#endif

namespace {

using rdp::i64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

rdp::Kind parse_kind(const std::string& s) {
    if (s == "D" || s == "d" || s == "0") return rdp::kFirstKind;
    if (s == "E" || s == "e" || s == "1") return rdp::kSecondKind;
    try {
        int k = std::stoi(s);
        if (k >= 0) return rdp::Kind{k};
    } catch (const std::exception&) {
    }
    throw UsageError("invalid --kind '" + s + "' (use D, E, or a k >= 0)");
}

std::pair<i64, i64> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        i64 n = std::stoll(s);
        return {n, n};
    }
    i64 lo = std::stoll(s.substr(0, dots));
    i64 hi = std::stoll(s.substr(dots + 2));
    if (lo < 0 || hi < lo) throw UsageError("invalid --n range '" + s + "'");
    return {lo, hi};
}

int cmd_eval(const std::string& kind_s, i64 n, i64 a, i64 mod, std::optional<i64> x,
             bool all_x, const std::string& route) {
    rdp::Kind kind = parse_kind(kind_s);
    rdp::ResidueRing ring(mod);
    rdp::RdpSpec spec{n, kind, a, ring};
    auto eval_one = [&](i64 xx) {
        if (route == "recurrence") return rdp::eval_recurrence(spec, xx);
        if (route == "explicit") return rdp::eval_explicit(spec, xx);
        if (route == "functional") return rdp::eval_functional(spec, xx);
        throw UsageError("invalid --route '" + route + "'");
    };
    if (all_x) {
        for (i64 xx = 0; xx < mod; ++xx) std::cout << (xx ? "," : "") << eval_one(xx);
        std::cout << '\n';
    } else if (x) {
        std::cout << eval_one(*x) << '\n';
    } else {
        throw UsageError("eval needs --x or --all-x");
    }
    return 0;
}

int cmd_table(const std::string& kind_s, i64 mod, const std::string& range,
              std::optional<i64> x) {
    rdp::Kind kind = parse_kind(kind_s);
    rdp::ResidueRing ring(mod);
    if (!ring.is_prime_power()) throw UsageError("table requires a prime-power modulus");
    auto [lo, hi] = parse_range(range);
    if (x)
        std::cout << rdp::render_table_row(kind, ring, lo, hi, ring.reduce(*x)) << '\n';
    else
        std::cout << rdp::render_table_csv(kind, ring, lo, hi);
    return 0;
}

int cmd_analyze(const std::string& kind_s, i64 n, i64 a, i64 mod, bool want_cpp) {
    rdp::Kind kind = parse_kind(kind_s);
    rdp::ResidueRing ring(mod);
    rdp::PermReport report = rdp::analyze_rdp(n, kind, a, ring, want_cpp);
    rdp::json params{{"kind", kind.k}, {"n", n}, {"a", a}, {"mod", mod}, {"cpp", want_cpp}};
    std::cout << rdp::make_envelope("analyze", params, rdp::to_json(report)).dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, i64 prime_cap, const std::string& data_dir) {
    rdp::SuiteReport report;
    if (suite == "t5") report = rdp::suite_t5();
    else if (suite == "t7") report = rdp::suite_t7();
    else if (suite == "ring2") report = rdp::suite_ring2();
    else if (suite == "ring3") report = rdp::suite_ring3();
    else if (suite == "fixed-points") report = rdp::suite_fixed_points();
    else if (suite == "cycle-types") report = rdp::suite_cycle_types();
    else if (suite == "periods") report = rdp::suite_periods(prime_cap);
    else if (suite == "conjectures") report = rdp::suite_conjectures(prime_cap);
    else if (suite == "golden-appendix") report = rdp::suite_golden_appendix(data_dir);
    else if (suite == "selftest-fail") report = rdp::suite_selftest_fail();
    else if (suite == "all") report = rdp::suite_all(prime_cap, data_dir);
    else throw UsageError("unknown suite '" + suite + "'");

    rdp::json params{{"suite", suite}, {"prime_cap", prime_cap}};
    std::cout << rdp::make_envelope("verify", params, rdp::to_json(report)).dump(2) << '\n';
    return report.all_hard_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversed Dickson polynomial toolkit"};
    app.require_subcommand(1);

    std::string kind_s = "D", route = "recurrence", range = "0..0", suite = "all";
    std::string data_dir = RDP_DATA_DIR;
    i64 n = 0, a = 1, mod = 0, prime_cap = 31;
    std::optional<i64> x;
    bool all_x = false, want_cpp = false, want_fixed = false, want_cycle = false;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one polynomial");
    eval->add_option("--kind", kind_s);
    eval->add_option("--n", n)->required();
    eval->add_option("--a", a);
    eval->add_option("--mod", mod)->required();
    eval->add_option("--x", x);
    eval->add_flag("--all-x", all_x);
    eval->add_option("--route", route)
        ->check(CLI::IsMember({"recurrence", "explicit", "functional"}));

    CLI::App* table = app.add_subcommand("table", "CSV value grid, rows x, columns n");
    table->add_option("--kind", kind_s);
    table->add_option("--mod", mod)->required();
    table->add_option("--n", range)->required();
    table->add_option("--x", x);

    CLI::App* analyze = app.add_subcommand("analyze", "permutation report for one polynomial");
    analyze->add_option("--kind", kind_s);
    analyze->add_option("--n", n)->required();
    analyze->add_option("--a", a);
    analyze->add_option("--mod", mod)->required();
    analyze->add_flag("--cpp", want_cpp);
    analyze->add_flag("--fixed-points", want_fixed);   // always included in the report
    analyze->add_flag("--cycle-type", want_cycle);     // included whenever the map is a PP

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"t5", "t7", "ring2", "ring3", "fixed-points", "cycle-types",
                               "periods", "conjectures", "golden-appendix", "selftest-fail",
                               "all"}));
    verify->add_option("--prime-cap", prime_cap);
    verify->add_option("--data-dir", data_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; any parse problem is usage
    }

    try {
        if (eval->parsed()) return cmd_eval(kind_s, n, a, mod, x, all_x, route);
        if (table->parsed()) return cmd_table(kind_s, mod, range, x);
        if (analyze->parsed()) return cmd_analyze(kind_s, n, a, mod, want_cpp);
        if (verify->parsed()) return cmd_verify(suite, prime_cap, data_dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rdp::InvalidModulus& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rdp::UnsupportedRing& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
