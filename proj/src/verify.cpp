#include "rdp/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rdp {

namespace {

std::string join(const std::vector<i64>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::string set_str(const std::vector<i64>& v) { return "{" + join(v) + "}"; }

CheckLine line(std::string name, bool hard, bool ok, std::string detail = {}) {
    return CheckLine{std::move(name), hard, ok, std::move(detail)};
}

std::vector<i64> residues_in(i64 lo, i64 hi, const std::vector<i64>& classes, i64 mod) {
    std::vector<i64> out;
    for (i64 n = lo; n <= hi; ++n)
        if (std::find(classes.begin(), classes.end(), n % mod) != classes.end())
            out.push_back(n);
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<i64> parse_csv_ints(const std::string& text) {
    std::vector<i64> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

}  // namespace

std::string render_table_csv(Kind kind, const ResidueRing& ring, i64 n_lo, i64 n_hi) {
    std::ostringstream os;
    os << 'x';
    for (i64 n = n_lo; n <= n_hi; ++n) os << ',' << n;
    os << '\n';
    for (i64 x = 0; x < ring.modulus(); ++x)
        os << x << ',' << render_table_row(kind, ring, n_lo, n_hi, x) << '\n';
    return os.str();
}

std::string render_table_row(Kind kind, const ResidueRing& ring, i64 n_lo, i64 n_hi, i64 x) {
    std::vector<i64> seq = value_sequence(kind, 1, x, ring, n_hi);
    std::vector<i64> window(seq.begin() + n_lo, seq.end());
    return join(window);
}

SuiteReport suite_t5() {
    SuiteReport rep;
    rep.suite = "t5";
    ScanResult r = scan_first_kind_pp(5);
    std::vector<i64> expect{2, 3, 6, 10, 15};
    rep.add(line("first-kind PP set over F_5 is {2,3,6,10,15} mod 24", true,
                 r.classification.pp_indices == expect,
                 "scanned " + set_str(r.classification.pp_indices)));
    return rep;
}

SuiteReport suite_t7() {
    SuiteReport rep;
    rep.suite = "t7";
    ScanResult r = scan_first_kind_pp(7);
    std::vector<i64> expect{2, 3, 9, 14, 15, 21};
    rep.add(line("first-kind PP set over F_7 is {2,3,9,14,15,21} mod 48", true,
                 r.classification.pp_indices == expect,
                 "scanned " + set_str(r.classification.pp_indices)));
    return rep;
}

namespace {

// Direct bijectivity scan over Z_{p^t} (no lifting shortcut).
std::vector<i64> direct_ring_scan(Kind kind, i64 modulus, i64 bound) {
    ResidueRing ring(modulus);
    return scan_pp_indices(kind, 1, ring, bound, false);
}

void ring_class_check(SuiteReport& rep, Kind kind, i64 p, int t, i64 bound,
                      const std::vector<i64>& classes, i64 mod, const std::string& label) {
    i64 pw = 1;
    for (int i = 0; i < t; ++i) pw *= p;
    std::vector<i64> got = direct_ring_scan(kind, pw, bound);
    std::vector<i64> expect = residues_in(1, bound, classes, mod);
    rep.add(line(label + " over Z_" + std::to_string(pw), true, got == expect,
                 "scanned " + set_str(got) + " expected " + set_str(expect)));
}

}  // namespace

SuiteReport lifting_vs_tabulation(i64 p, int t_max, i64 n_max) {
    SuiteReport rep;
    rep.suite = "lifting p=" + std::to_string(p);
    for (int t = 1; t <= t_max; ++t) {
        i64 pw = 1;
        for (int i = 0; i < t; ++i) pw *= p;
        ResidueRing ring(pw);
        bool ok = true;
        i64 bad = -1;
        for (Kind kind : {kFirstKind, kSecondKind}) {
            for (i64 n = 1; n <= n_max && ok; ++n) {
                bool direct = is_permutation(tabulate_rdp(n, kind, 1, ring));
                bool lifted = is_pp_prime_power(n, kind, 1, p, t);
                if (direct != lifted) {
                    ok = false;
                    bad = n;
                }
            }
        }
        rep.add(line("lifting = tabulation over Z_" + std::to_string(pw) + ", n <= " +
                         std::to_string(n_max),
                     true, ok, ok ? "" : "first mismatch at n=" + std::to_string(bad)));
    }
    return rep;
}

SuiteReport suite_ring2() {
    SuiteReport rep;
    rep.suite = "ring2";
    // base ring Z_2: PP iff n = 0 mod 3 (n >= 1) for D, n = 2 mod 3 for E
    ring_class_check(rep, kFirstKind, 2, 1, 96, {0}, 3, "D PP iff n=0 mod 3");
    ring_class_check(rep, kSecondKind, 2, 1, 96, {2}, 3, "E PP iff n=2 mod 3");
    // lifted rings, t >= 2: D iff n = 3 mod 6, E iff n = 2 mod 6
    for (int t = 2; t <= 6; ++t) {
        ring_class_check(rep, kFirstKind, 2, t, 96, {3}, 6, "D PP iff n=3 mod 6");
        ring_class_check(rep, kSecondKind, 2, t, 96, {2}, 6, "E PP iff n=2 mod 6");
    }
    rep.merge(lifting_vs_tabulation(2, 3, 120));
    return rep;
}

SuiteReport suite_ring3() {
    SuiteReport rep;
    rep.suite = "ring3";
    // base ring Z_3
    ring_class_check(rep, kFirstKind, 3, 1, 72, {2}, 4, "D PP iff n=2 mod 4");
    ring_class_check(rep, kSecondKind, 3, 1, 72, {2, 3, 5, 15, 20}, 24,
                     "E PP iff n=2,3,5,15,20 mod 24");
    // lifted rings, t >= 2
    for (int t = 2; t <= 4; ++t) {
        ring_class_check(rep, kFirstKind, 3, t, 72, {2, 14}, 24, "D PP iff n=2,14 mod 24");
        ring_class_check(rep, kSecondKind, 3, t, 72, {2, 3, 5, 15, 20, 29, 39, 50, 51, 68}, 72,
                         "E PP iff n in {2,3,5,15,20,29,39,50,51,68} mod 72");
    }
    rep.merge(lifting_vs_tabulation(3, 3, 120));
    return rep;
}

SuiteReport suite_fixed_points() {
    SuiteReport rep;
    rep.suite = "fixed-points";
    for (i64 p : {5, 7, 13, 17, 19, 29, 31, 37, 61}) rep.merge(fixed_point_census(p));
    return rep;
}

SuiteReport suite_cycle_types() {
    SuiteReport rep;
    rep.suite = "cycle-types";
    rep.merge(cycle_type_check(3));
    for (i64 p = 5; p <= 97; ++p)
        if (is_prime(p)) rep.merge(cycle_type_check(p));
    return rep;
}

SuiteReport suite_periods(i64 prime_cap) {
    SuiteReport rep;
    rep.suite = "periods";
    for (i64 p = 3; p <= prime_cap; p += 2) {
        if (!is_prime(p)) continue;
        auto [report, verdict] = derivative_quarter_period(p);
        std::ostringstream d;
        d << "p=" << p << " measured period " << report.period;
        if (report.predicted) d << " predicted " << *report.predicted;
        if (p == 3) {
            rep.add(line("derivative period at 1/4, p=3, is 18", true, report.period == 18,
                         d.str()));
        } else if (p == 5) {
            rep.add(line("derivative period at 1/4, p=5, is 20", true, report.period == 20,
                         d.str()));
        } else if (p == 7) {
            rep.add(line("derivative period at 1/4, p=7, is 21", true, report.period == 21,
                         d.str()));
        } else {
            rep.add(line("derivative period at 1/4 matches prediction, p=" + std::to_string(p),
                         false, report.matches_prediction.value_or(false), d.str()));
        }
    }
    return rep;
}

SuiteReport suite_conjectures(i64 prime_cap) {
    SuiteReport rep;
    rep.suite = "conjectures";

    // First-kind PP classification for 5 <= p <= cap.
    for (i64 p = 5; p <= prime_cap; p += 2) {
        if (!is_prime(p)) continue;
        ScanResult r = scan_first_kind_pp(p);
        std::vector<i64> expect = ccc1_expected(p);
        bool sufficiency = std::includes(r.classification.pp_indices.begin(),
                                         r.classification.pp_indices.end(), expect.begin(),
                                         expect.end());
        rep.add(line("first-kind PP sufficiency p=" + std::to_string(p), true, sufficiency,
                     "scanned " + set_str(r.classification.pp_indices)));
        bool equal = r.classification.pp_indices == expect;
        // necessity is a theorem at p = 5, 7; conjecture support elsewhere
        rep.add(line("first-kind PP set equality p=" + std::to_string(p), p == 5 || p == 7,
                     equal, "expected " + set_str(expect)));
    }

    // First-kind CPP classification.
    {
        ScanResult r3 = scan_first_kind_cpp(3);
        std::vector<i64> expect3{2, 6};
        rep.add(line("first-kind CPP over Z_3 iff n=2,6 mod 8", true,
                     r3.classification.cpp_indices == expect3,
                     "scanned " + set_str(r3.classification.cpp_indices)));
    }
    for (i64 p : {5, 7, 13}) {
        ScanResult r = scan_first_kind_cpp(p);
        const std::vector<i64>& got = r.classification.cpp_indices;
        std::vector<i64> proven{2, 3, 2 * p, 3 * p};
        if (p % 12 == 1) proven.insert(proven.end(), {p + 1, p + 2, 2 * p + 1});
        std::sort(proven.begin(), proven.end());
        std::vector<i64> proven_absent;
        if (p % 12 == 5) proven_absent = {p + 1};
        if (p % 12 == 7) proven_absent = {p + 2, 2 * p + 1};

        bool suff = std::includes(got.begin(), got.end(), proven.begin(), proven.end());
        bool absent_ok = true;
        for (i64 n : proven_absent)
            if (std::binary_search(got.begin(), got.end(), n)) absent_ok = false;
        rep.add(line("first-kind CPP proven members present p=" + std::to_string(p), true, suff,
                     "scanned " + set_str(got)));
        if (!proven_absent.empty())
            rep.add(line("first-kind CPP proven non-members absent p=" + std::to_string(p), true,
                         absent_ok, "must exclude " + set_str(proven_absent)));
        rep.add(line("first-kind CPP set equality p=" + std::to_string(p), false,
                     got == cj10c_expected(p), "expected " + set_str(cj10c_expected(p))));
    }

    // Second-kind PP / CPP classifications. Full-period scans stay cheap well
    // past the default cap; 61 bounds the worst case regardless.
    const i64 second_cap = std::min<i64>(prime_cap, 61);
    for (i64 p = 3; p <= second_cap; p += 2) {
        if (!is_prime(p)) continue;
        ScanResult r = scan_second_kind_pp(p);
        std::vector<i64> expect = second_pp_expected(p);
        bool hard = p <= 7;  // theorem-pinned sets at 3, 5, 7
        rep.add(line("second-kind PP set p=" + std::to_string(p), hard,
                     r.classification.pp_indices == expect,
                     "scanned " + set_str(r.classification.pp_indices) + " expected " +
                         set_str(expect)));
    }
    for (i64 p = 3; p <= second_cap; p += 2) {
        if (!is_prime(p)) continue;
        ScanResult r = scan_second_kind_cpp(p);
        std::vector<i64> expect = second_cpp_expected(p);
        // theorem at p = 3; at 5 and 7 the full-period scan itself decides
        // the set, since the PP sets there are theorems; conjecture support
        // beyond that
        rep.add(line("second-kind CPP set p=" + std::to_string(p), p <= 7,
                     r.classification.cpp_indices == expect,
                     "scanned " + set_str(r.classification.cpp_indices) + " expected " +
                         set_str(expect)));
    }

    // Closed forms and the a = 0 facts ride along with the conjecture suite.
    for (i64 p : {5, 7, 13, 17}) rep.merge(closed_form_cross_checks(p));
    rep.merge(verify_a_zero(2, 3));
    rep.merge(verify_a_zero(3, 2));
    rep.merge(verify_a_zero(5, 2, 12));
    return rep;
}

SuiteReport suite_golden_appendix(const std::filesystem::path& data_dir) {
    SuiteReport rep;
    rep.suite = "golden-appendix";

    struct TableSpec {
        const char* file;
        i64 p;
        i64 n_hi;
    };
    for (const TableSpec& ts : {TableSpec{"table_d_z5.csv", 5, 23},
                                TableSpec{"table_d_z7.csv", 7, 47}}) {
        std::string want = read_file(data_dir / ts.file);
        std::string got = render_table_csv(kFirstKind, ResidueRing(ts.p), 0, ts.n_hi);
        rep.add(line(std::string("table ") + ts.file + " byte-match", true, got == want, ""));
    }

    struct SeqSpec {
        const char* file;
        i64 p;
        i64 n_hi;
    };
    for (const SeqSpec& ss : {SeqSpec{"seq_e_deriv_quarter_z3.txt", 3, 17},
                              SeqSpec{"seq_e_deriv_quarter_z5.txt", 5, 19},
                              SeqSpec{"seq_e_deriv_quarter_z7.txt", 7, 20}}) {
        ResidueRing ring(ss.p);
        std::vector<i64> want = parse_csv_ints(read_file(data_dir / ss.file));
        std::vector<i64> got =
            derivative_sequence(kSecondKind, 1, mod_inv(4, ss.p), ring, ss.n_hi);
        rep.add(line(std::string("sequence ") + ss.file + " exact match", true, got == want,
                     "computed " + join(got)));
    }

    // First-kind derivative sequence at x = 1 over Z_3. The bundled reference
    // knowingly deviates at one index: its entry at n = 20 is 0, while both
    // the derivative recurrence and the symbolic derivative of the
    // coefficient polynomial give 1 (the mod-24 classification value). Its
    // first two entries are the function values, a convention this generator
    // reproduces for the comparison.
    {
        ResidueRing z3(3);
        std::vector<i64> want = parse_csv_ints(read_file(data_dir / "seq_d_deriv_x1_z3.txt"));
        std::vector<i64> got = derivative_sequence(kFirstKind, 1, 1, z3, 23);
        std::vector<i64> vals = value_sequence(kFirstKind, 1, 1, z3, 1);
        got[0] = vals[0];
        got[1] = vals[1];
        std::vector<i64> mismatches;
        for (size_t i = 0; i < want.size(); ++i)
            if (got.size() != want.size() || got[i] != want[i])
                mismatches.push_back(static_cast<i64>(i));
        bool sole_known_deviation = mismatches == std::vector<i64>{20};
        i64 oracle = formal_derivative(coefficient_poly({20, kFirstKind, 1, z3})).eval(1);
        rep.add(line("sequence seq_d_deriv_x1_z3.txt matches except n=20", true,
                     sole_known_deviation, "mismatch indices " + set_str(mismatches)));
        rep.add(line("n=20 deviation resolves to 1 by the symbolic derivative", true,
                     oracle == 1 && got[20] == 1,
                     "oracle " + std::to_string(oracle) + " recurrence " +
                         std::to_string(got[20]) + " reference " + std::to_string(want[20])));
    }
    return rep;
}

SuiteReport suite_selftest_fail() {
    SuiteReport rep;
    rep.suite = "selftest-fail";
    rep.add(line("synthetic check that always fails", true, false,
                 "exercises the non-zero exit path"));
    return rep;
}

SuiteReport suite_all(i64 prime_cap, const std::filesystem::path& data_dir) {
    SuiteReport rep;
    rep.suite = "all";
    rep.merge(suite_t5());
    rep.merge(suite_t7());
    rep.merge(suite_ring2());
    rep.merge(suite_ring3());
    rep.merge(suite_fixed_points());
    rep.merge(suite_cycle_types());
    rep.merge(suite_periods(std::min<i64>(prime_cap, 13)));
    rep.merge(suite_conjectures(prime_cap));
    rep.merge(suite_golden_appendix(data_dir));
    return rep;
}

}  // namespace rdp
