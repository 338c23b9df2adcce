// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// criterion fails. Soft conjecture comparisons are reported inside the line
// that owns them; they never flip a line by themselves unless the criterion
// pins the exact set.

#include <chrono>
#include <iostream>
#include <sstream>

#include "rdp/verify.hpp"

using namespace rdp;

namespace {

struct Criterion {
    bool ok;
    std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const Criterion& c, double seconds,
            double limit_seconds) {
    bool ok = c.ok && seconds < limit_seconds;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title << " ("
              << seconds << " s, limit " << limit_seconds << " s)";
    if (!c.detail.empty()) std::cout << " — " << c.detail;
    std::cout << '\n';
    if (!ok) ++failures;
}

template <typename Fn>
void run(int number, const std::string& title, double limit_seconds, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    Criterion c = fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, title, c, secs, limit_seconds);
}

std::string join(const std::vector<i64>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

Criterion from_suite(const SuiteReport& rep) {
    std::ostringstream os;
    int bad = 0;
    for (const CheckLine& c : rep.checks)
        if (c.hard && !c.ok) {
            if (bad++ < 4) os << "failed: " << c.name << " (" << c.detail << "); ";
        }
    if (bad > 4) os << (bad - 4) << " more; ";
    std::ostringstream summary;
    summary << rep.checks.size() << " checks";
    if (bad) summary << ", " << bad << " hard failures: " << os.str();
    return {rep.all_hard_ok(), summary.str()};
}

Criterion criterion_golden() { return from_suite(suite_golden_appendix(RDP_DATA_DIR)); }

Criterion criterion_t5() { return from_suite(suite_t5()); }
Criterion criterion_t7() { return from_suite(suite_t7()); }

Criterion criterion_conjecture_31() {
    std::ostringstream detail;
    bool ok = true;
    for (i64 p = 5; p <= 31; p += 2) {
        if (!is_prime(p)) continue;
        ScanResult r = scan_first_kind_pp(p);
        std::vector<i64> expect = ccc1_expected(p);
        bool match = r.classification.pp_indices == expect;
        if (!match) {
            ok = false;
            detail << "p=" << p << " scanned {" << join(r.classification.pp_indices)
                   << "} expected {" << join(expect) << "}; ";
        }
    }
    if (ok) detail << "scanned sets equal the conjectured sets for all 5 <= p <= 31";
    return {ok, detail.str()};
}

Criterion criterion_rings() {
    SuiteReport rep;
    rep.merge(suite_ring2());
    rep.merge(suite_ring3());
    rep.merge(lifting_vs_tabulation(5, 3, 120));
    return from_suite(rep);
}

Criterion criterion_fixed_points() {
    SuiteReport rep;
    std::ostringstream detail;
    bool ok = true;
    auto count = [](i64 p, i64 n) {
        return static_cast<i64>(fixed_points(tabulate_rdp(n, kFirstKind, 1, ResidueRing(p))).size());
    };
    for (i64 p : {13, 37, 61})
        if (count(p, p + 1) != 1) {
            ok = false;
            detail << "D_{p+1} at p=" << p << " expected 1; ";
        }
    for (i64 p : {5, 17, 29})
        if (count(p, p + 1) != 0) {
            ok = false;
            detail << "D_{p+1} at p=" << p << " expected 0; ";
        }
    for (i64 p : {7, 13, 19, 31, 37}) {
        if (count(p, p + 2) != (p + 1) / 2 || count(p, 2 * p + 1) != (p + 1) / 2) {
            ok = false;
            detail << "D_{p+2}/D_{2p+1} at p=" << p << " expected " << (p + 1) / 2 << "; ";
        }
    }
    for (i64 p : {5, 7, 13, 17, 19, 29, 31, 37, 61}) rep.merge(fixed_point_census(p));
    if (!rep.all_hard_ok()) {
        ok = false;
        detail << "census hard assertions failed; ";
    }
    if (ok) detail << "counts exact for every listed prime";
    return {ok, detail.str()};
}

Criterion criterion_cycle_types() {
    SuiteReport rep = cycle_type_check(3);
    for (i64 p = 5; p <= 97; ++p)
        if (is_prime(p)) rep.merge(cycle_type_check(p));
    return from_suite(rep);
}

Criterion criterion_cpp_sets() {
    std::ostringstream detail;
    bool ok = true;
    for (i64 p : {5, 7, 13}) {
        ScanResult r = scan_first_kind_cpp(p);
        std::vector<i64> expect = cj10c_expected(p);
        if (r.classification.cpp_indices != expect) {
            ok = false;
            detail << "first-kind CPP p=" << p << " scanned {"
                   << join(r.classification.cpp_indices) << "} expected {" << join(expect)
                   << "}; ";
        }
    }
    ScanResult r3 = scan_first_kind_cpp(3);
    if (r3.classification.cpp_indices != std::vector<i64>{2, 6}) {
        ok = false;
        detail << "first-kind CPP p=3 must be {2,6} within [1,8]; ";
    }
    ScanResult e3 = scan_second_kind_cpp(3);
    if (e3.classification.cpp_indices != std::vector<i64>{3, 15}) {
        ok = false;
        detail << "second-kind CPP p=3 must be {3,15} within [1,24]; ";
    }
    if (ok)
        detail << "sets equal conjectured classification at p=5,7,13 "
                  "(sufficiency proven, necessity decided by the full-period scan); "
                  "p=3 theorems hold";
    return {ok, detail.str()};
}

Criterion criterion_second_kind_pp() {
    std::ostringstream detail;
    bool ok = true;
    for (i64 p : {5, 7}) {
        ScanResult r = scan_second_kind_pp(p);
        std::vector<i64> expect = second_pp_expected(p);
        detail << "p=" << p << " -> {" << join(r.classification.pp_indices) << "}; ";
        if (r.classification.pp_indices != expect) ok = false;
    }
    return {ok, detail.str()};
}

Criterion criterion_periods() {
    std::ostringstream detail;
    bool ok = true;
    const std::vector<std::pair<i64, i64>> hard{{3, 18}, {5, 20}, {7, 21}};
    for (auto [p, expect] : hard) {
        auto [r, v] = derivative_quarter_period(p);
        if (r.period != expect) {
            ok = false;
            detail << "p=" << p << " measured " << r.period << " expected " << expect << "; ";
        }
    }
    for (i64 p : {11, 13, 31}) {
        auto [r, v] = derivative_quarter_period(p);
        detail << "p=" << p << " measured " << r.period << " predicted " << *r.predicted
               << (r.matches_prediction.value_or(false) ? " (match)" : " (no match, reported)")
               << "; ";
    }
    return {ok, detail.str()};
}

Criterion criterion_oracles() {
    std::ostringstream detail;
    i64 mismatches = 0;

    // recurrence = explicit = functional, odd p <= 13, n <= 2000, kinds 0-1
    for (i64 p : {3, 5, 7, 11, 13}) {
        ResidueRing ring(p);
        for (Kind kind : {kFirstKind, kSecondKind}) {
            std::vector<i64> f0(p, ring.reduce(2 - kind.k)), f1(p, 1);
            for (i64 n = 0; n <= 2000; ++n) {
                if (n >= 2)
                    for (i64 x = 0; x < p; ++x) {
                        i64 f = ring.sub(f1[x], ring.mul(x, f0[x]));
                        f0[x] = f1[x];
                        f1[x] = f;
                    }
                const std::vector<i64>& row = n == 0 ? f0 : f1;
                CoefPoly expl = explicit_poly({n, kind, 1, ring});
                for (i64 x = 0; x < p; ++x) {
                    i64 rec = row[x];
                    if (expl.eval(x) != rec) ++mismatches;
                    if (eval_functional({n, kind, 1, ring}, x) != rec) ++mismatches;
                }
            }
        }
    }
    detail << "three-route agreement over p in {3,5,7,11,13}, n <= 2000; ";

    // Hermite = tabulation
    for (i64 p : {5, 7}) {
        ResidueRing ring(p);
        for (i64 n = 1; n <= p * p - 1; ++n) {
            bool tab = is_permutation(tabulate_rdp(n, kFirstKind, 1, ring));
            bool herm = hermite_check(coefficient_poly({n, kFirstKind, 1, ring}), p);
            if (tab != herm) ++mismatches;
        }
    }
    detail << "hermite = tabulation for p in {5,7}; ";

    // CRT + lifting = direct tabulation for m <= 60
    for (i64 m = 2; m <= 60; ++m) {
        ResidueRing ring(m);
        for (Kind kind : {kFirstKind, kSecondKind})
            for (i64 n = 1; n <= 100; ++n)
                if (is_pp_crt(n, kind, 1, m) != is_permutation(tabulate_rdp(n, kind, 1, ring)))
                    ++mismatches;
    }
    detail << "crt+lifting = tabulation for m <= 60; ";

    // Frobenius identity on coefficient polynomials
    for (i64 p : {3, 5, 7}) {
        ResidueRing ring(p);
        for (i64 n = 0; n <= 200; ++n) {
            CoefPoly dn = coefficient_poly({n, kFirstKind, 1, ring});
            CoefPoly dnp = coefficient_poly({n * p, kFirstKind, 1, ring});
            if (!(dnp == poly_pow(dn, p))) ++mismatches;
        }
    }
    detail << "frobenius D_np = D_n^p for p in {3,5,7}, n <= 200; ";
    detail << "mismatches " << mismatches;
    return {mismatches == 0, detail.str()};
}

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);

    run(1, "golden tables and sequences reproduce the reference data", 5.0, criterion_golden);
    run(2, "first-kind PP set over F_5 is {2,3,6,10,15}", 1.0, criterion_t5);
    run(3, "first-kind PP set over F_7 is {2,3,9,14,15,21}", 1.0, criterion_t7);
    run(4, "first-kind PP sets match the mod-12 classification for 5 <= p <= 31", 120.0,
        criterion_conjecture_31);
    run(5, "ring classifications over Z_{2^t} and Z_{3^t}, lifting = tabulation", 30.0,
        criterion_rings);
    run(6, "fixed-point counts for D_{p+1}, D_{p+2}, D_{2p+1}", 5.0, criterion_fixed_points);
    run(7, "cycle types match order-based predictions for 5 <= p <= 97 (and p=3)", 30.0,
        criterion_cycle_types);
    run(8, "CPP classifications at p=5,7,13 and the p=3 theorems", 60.0, criterion_cpp_sets);
    run(9, "second-kind PP sets {2,3,15,94} at p=5 and {2,3,170} at p=7", 60.0,
        criterion_second_kind_pp);
    run(10, "derivative periods 18/20/21 hard; p=11,13,31 reported against predictions", 120.0,
        criterion_periods);
    run(11, "oracle equivalences: routes, hermite, crt+lifting, frobenius", 120.0,
        criterion_oracles);

    if (failures == 0)
        std::cout << "all 11 acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria failed\n";
    return failures == 0 ? 0 : 1;
}
