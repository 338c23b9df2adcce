#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rdp/report.hpp"
#include "rdp/verify.hpp"

using namespace rdp;

TEST_CASE("first-kind pp scans") {
    CHECK(scan_first_kind_pp(5).classification.pp_indices == std::vector<i64>{2, 3, 6, 10, 15});
    CHECK(scan_first_kind_pp(7).classification.pp_indices ==
          std::vector<i64>{2, 3, 9, 14, 15, 21});
    ScanResult r11 = scan_first_kind_pp(11);
    CHECK(r11.classification.pp_indices == std::vector<i64>{2, 3, 22, 33});
    REQUIRE(r11.verdict.has_value());
    CHECK(r11.verdict->status == ConjectureStatus::ConfirmedAtScale);
    CHECK_THROWS_AS(scan_first_kind_pp(3), std::invalid_argument);
}

TEST_CASE("first-kind cpp scans") {
    CHECK(scan_first_kind_cpp(13).classification.cpp_indices ==
          std::vector<i64>{2, 3, 14, 15, 26, 27, 39});
    CHECK(scan_first_kind_cpp(7).classification.cpp_indices ==
          std::vector<i64>{2, 3, 14, 21});
    CHECK(scan_first_kind_cpp(5).classification.cpp_indices ==
          std::vector<i64>{2, 3, 10, 15});
    ScanResult r3 = scan_first_kind_cpp(3);
    CHECK(r3.classification.cpp_indices == std::vector<i64>{2, 6});
    CHECK_FALSE(r3.verdict.has_value());
}

TEST_CASE("second-kind scans") {
    CHECK(scan_second_kind_pp(5).classification.pp_indices == std::vector<i64>{2, 3, 15, 94});
    CHECK(scan_second_kind_pp(7).classification.pp_indices == std::vector<i64>{2, 3, 170});
    ScanResult r11 = scan_second_kind_pp(11);
    CHECK(r11.classification.pp_indices == std::vector<i64>{2, 3});
    REQUIRE(r11.verdict.has_value());
    CHECK(r11.verdict->id == "conjJ52");
    CHECK(r11.verdict->status == ConjectureStatus::ConfirmedAtScale);

    CHECK(scan_second_kind_cpp(5).classification.cpp_indices == std::vector<i64>{3});
    CHECK(scan_second_kind_cpp(7).classification.cpp_indices == std::vector<i64>{3});
    CHECK(scan_second_kind_cpp(3).classification.cpp_indices == std::vector<i64>{3, 15});
}

TEST_CASE("congruence class compaction is lossless") {
    for (const ScanResult& r :
         {scan_first_kind_pp(5), scan_first_kind_pp(13), scan_second_kind_pp(5)}) {
        const IndexClassification& c = r.classification;
        std::vector<i64> regenerated;
        for (i64 n = 1; n <= c.scan_bound; ++n) {
            i64 residue = n % c.class_modulus;
            if (std::find(c.congruence_classes.begin(), c.congruence_classes.end(), residue) !=
                c.congruence_classes.end())
                regenerated.push_back(n);
        }
        const std::vector<i64>& basis =
            c.cpp_indices.empty() ? c.pp_indices : c.cpp_indices;
        CHECK(regenerated == basis);
        CHECK(c.scan_bound % c.class_modulus == 0);
    }
}

TEST_CASE("ring scans") {
    CHECK(scan_ring(kFirstKind, 2, 5, 36).pp_indices == std::vector<i64>{3, 9, 15, 21, 27, 33});
    CHECK(scan_ring(kSecondKind, 3, 2, 72).pp_indices ==
          std::vector<i64>{2, 3, 5, 15, 20, 29, 39, 50, 51, 68});
    CHECK(scan_ring(kFirstKind, 3, 1, 24).pp_indices ==
          std::vector<i64>{2, 6, 10, 14, 18, 22});
    IndexClassification c = scan_ring(kFirstKind, 2, 5, 36);
    CHECK(c.modulus == 32);
    CHECK(c.class_modulus == 6);
    CHECK(c.congruence_classes == std::vector<i64>{3});
}

TEST_CASE("derivative period scans") {
    auto [r3, v3] = derivative_quarter_period(3);
    CHECK(r3.period == 18);
    CHECK_FALSE(r3.predicted.has_value());
    CHECK_FALSE(v3.has_value());

    auto [r5, v5] = derivative_quarter_period(5);
    CHECK(r5.period == 20);
    CHECK(r5.predicted == 20);
    REQUIRE(v5.has_value());
    CHECK(v5->id == "C1");
    CHECK(v5->status == ConjectureStatus::ConfirmedAtScale);

    auto [r7, v7] = derivative_quarter_period(7);
    CHECK(r7.period == 21);
    CHECK(r7.predicted == 21);
    CHECK(v7->id == "C2");

    // no proper divisor of the reported period is itself a period
    for (const PeriodReport& r : {r3, r5, r7}) {
        for (i64 q = 1; q < r.period; ++q) {
            if (r.period % q != 0) continue;
            bool works = true;
            for (i64 i = r.start_offset; i + q < static_cast<i64>(r.terms.size()); ++i)
                if (r.terms[i] != r.terms[i + q]) {
                    works = false;
                    break;
                }
            CHECK_FALSE(works);
        }
    }
}

TEST_CASE("mersenne period claim fails at p = 31") {
    // the measured minimal period is p*ord_p(2) = 155; 465 is a period but
    // not the minimal one, and the verdict records the counterexample
    auto [r31, v31] = derivative_quarter_period(31);
    CHECK(r31.period == 155);
    CHECK(r31.predicted == 465);
    CHECK(r31.matches_prediction == false);
    REQUIRE(v31.has_value());
    CHECK(v31->id == "C2");
    CHECK(v31->status == ConjectureStatus::Counterexample);
}

TEST_CASE("fixed point census") {
    CHECK(fixed_point_census(13).all_hard_ok());
    CHECK(fixed_point_census(17).all_hard_ok());
    CHECK(fixed_point_census(7).all_hard_ok());
    CHECK(fixed_point_census(5).all_hard_ok());
    CHECK(fixed_point_census(37).all_hard_ok());
}

TEST_CASE("cycle type checks") {
    CHECK(cycle_type_check(3).all_hard_ok());
    CHECK(cycle_type_check(5).all_hard_ok());
    CHECK(cycle_type_check(7).all_hard_ok());
    CHECK(cycle_type_check(13).all_hard_ok());
    CHECK(cycle_type_check(19).all_hard_ok());
}

TEST_CASE("small-index second-kind cycle types") {
    auto type_of = [](i64 n, Kind kind, i64 p, bool plus_x = false) {
        return cycle_type(tabulate_rdp(n, kind, 1, ResidueRing(p), plus_x)).expanded();
    };
    CHECK(type_of(5, kSecondKind, 3) == std::vector<i64>{2, 1});
    CHECK(type_of(15, kSecondKind, 3) == std::vector<i64>{3});
    CHECK(type_of(20, kSecondKind, 3) == std::vector<i64>{2, 1});
    CHECK(type_of(94, kSecondKind, 5) == std::vector<i64>{3, 1, 1});
    CHECK(type_of(170, kSecondKind, 7) == std::vector<i64>{4, 2, 1});
    CHECK(type_of(15, kSecondKind, 3, true) == std::vector<i64>{2, 1});
}

TEST_CASE("shifted-map cycle types") {
    // D_3 + x and D_{3p} + x are 1 - 2x, so their type follows ord_p(-2);
    // E_3 + x is 1 - x, an involution with one fixed point
    for (i64 p : {5, 7, 13, 19}) {
        ResidueRing ring(p);
        i64 len = mult_order(-2, p);
        i64 j = (p - 1) / len;
        std::vector<i64> expect(j, len);
        expect.push_back(1);
        CHECK(cycle_type(tabulate_rdp(3, kFirstKind, 1, ring, true)).expanded() == expect);
        CHECK(cycle_type(tabulate_rdp(3 * p, kFirstKind, 1, ring, true)).expanded() == expect);

        std::vector<i64> invol((p - 1) / 2, 2);
        invol.push_back(1);
        CHECK(cycle_type(tabulate_rdp(3, kSecondKind, 1, ring, true)).expanded() == invol);
    }
}

TEST_CASE("crt decomposes through the prime-power factors") {
    for (i64 n = 1; n <= 100; ++n)
        CHECK(is_pp_crt(n, kFirstKind, 1, 15) ==
              (is_pp_prime_power(n, kFirstKind, 1, 3, 1) &&
               is_pp_prime_power(n, kFirstKind, 1, 5, 1)));
}

TEST_CASE("a = 0 report") {
    CHECK(verify_a_zero(2, 3).all_hard_ok());
    CHECK(verify_a_zero(3, 2).all_hard_ok());
    CHECK(verify_a_zero(5, 2, 12).all_hard_ok());
}

TEST_CASE("closed form cross checks") {
    for (i64 p : {5, 7, 13, 17}) CHECK(closed_form_cross_checks(p).all_hard_ok());
}

TEST_CASE("named suites pass") {
    CHECK(suite_t5().all_hard_ok());
    CHECK(suite_t7().all_hard_ok());
    CHECK(suite_golden_appendix(RDP_TEST_DATA_DIR).all_hard_ok());
    CHECK_FALSE(suite_selftest_fail().all_hard_ok());
}

TEST_CASE("chunked scan agrees with the single slice") {
    // hi above the threading threshold so the chunk-seeding path runs
    ResidueRing f13(13);
    setenv("RDP_THREADS", "5", 1);
    std::vector<i64> threaded = scan_pp_indices(kFirstKind, 1, f13, 5000, false);
    setenv("RDP_THREADS", "1", 1);
    std::vector<i64> serial = scan_pp_indices(kFirstKind, 1, f13, 5000, false);
    unsetenv("RDP_THREADS");
    CHECK(threaded == serial);

    // ground truth on a window that crosses a chunk boundary
    for (i64 n = 990; n <= 1010; ++n) {
        bool pp = is_permutation(tabulate_rdp(n, kFirstKind, 1, f13));
        bool scanned = std::binary_search(threaded.begin(), threaded.end(), n);
        CHECK(pp == scanned);
    }
}

TEST_CASE("scan determinism") {
    ScanResult a = scan_first_kind_pp(13);
    ScanResult b = scan_first_kind_pp(13);
    CHECK(to_json(a).dump() == to_json(b).dump());

    SuiteReport s1 = fixed_point_census(13);
    SuiteReport s2 = fixed_point_census(13);
    CHECK(to_json(s1).dump(2) == to_json(s2).dump(2));
}

TEST_CASE("json round trips") {
    PermReport pr = analyze_rdp(2, kFirstKind, 1, ResidueRing(5), true);
    json j = to_json(pr);
    PermReport back = perm_report_from_json(j);
    CHECK(back.is_pp == pr.is_pp);
    CHECK(back.is_cpp == pr.is_cpp);
    CHECK(back.fixed_points == pr.fixed_points);
    CHECK(back.cycle_type == pr.cycle_type);
    CHECK(to_json(back).dump() == j.dump());

    PermReport bad = analyze_rdp(4, kFirstKind, 1, ResidueRing(5), false);
    json jb = to_json(bad);
    CHECK(to_json(perm_report_from_json(jb)).dump() == jb.dump());

    SuiteReport suite = verify_a_zero(3, 2);
    json js = to_json(suite);
    CHECK(to_json(suite_report_from_json(js)).dump() == js.dump());
}
