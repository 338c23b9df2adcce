#pragma once

#include <optional>
#include <string>

#include "rdp/permcheck.hpp"

namespace rdp {

/// Result of one exhaustive PP/CPP index scan, with the congruence-class
/// compaction of the found index set.
struct IndexClassification {
    i64 modulus = 0;  // p, or the prime power / composite the scan ran over
    Kind kind = kFirstKind;
    i64 scan_bound = 0;                    // scanned n in [1, scan_bound]
    std::vector<i64> pp_indices;           // sorted
    std::vector<i64> cpp_indices;          // sorted; filled by CPP scans only
    std::vector<i64> congruence_classes;   // residues mod class_modulus
    i64 class_modulus = 0;
    friend bool operator==(const IndexClassification&, const IndexClassification&) = default;
};

struct PeriodReport {
    i64 p = 0;
    Kind kind = kSecondKind;
    i64 point = 0;  // the 1/4 residue
    std::vector<i64> terms;
    i64 start_offset = 2;  // periodicity measured on the tail n >= 2
    i64 period = 0;
    std::optional<i64> predicted;
    std::optional<bool> matches_prediction;
};

enum class ConjectureStatus { ConfirmedAtScale, Counterexample, SufficientDirectionOnly };

struct ConjectureVerdict {
    std::string id;  // CCC1, CJ10C, conjJ51, conjJ52, conjJ53, C1, C2, C3
    i64 p = 0;
    ConjectureStatus status = ConjectureStatus::ConfirmedAtScale;
    std::optional<i64> counterexample;
};

struct ScanResult {
    IndexClassification classification;
    std::optional<ConjectureVerdict> verdict;  // absent where a theorem governs
};

/// One assertion made by a verification routine. Hard lines are backed by a
/// proof and must hold; soft lines report conjecture support.
struct CheckLine {
    std::string name;
    bool hard = true;
    bool ok = false;
    std::string detail;
    friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> checks;
    bool all_hard_ok() const;
    bool all_ok() const;
    void add(CheckLine line) { checks.push_back(std::move(line)); }
    void merge(const SuiteReport& other);
};

// --- scan plumbing -------------------------------------------------------

/// Worker count for index scans; the RDP_THREADS environment variable caps
/// it. Results are merged in index order, so the count never changes output.
int scan_thread_count();

/// PP (and optionally CPP) indices of the family over ring for n in [1, hi].
std::vector<i64> scan_pp_indices(Kind kind, i64 a, const ResidueRing& ring, i64 hi,
                                 bool require_cpp);

/// Smallest divisor M of bound such that the index set is M-periodic on
/// [1, bound]; returns (M, residues mod M).
std::pair<i64, std::vector<i64>> derive_classes(const std::vector<i64>& indices, i64 bound);

// --- conjectured / proven index sets -------------------------------------

std::vector<i64> ccc1_expected(i64 p);        // first-kind PP, by p mod 12
std::vector<i64> cj10c_expected(i64 p);       // first-kind CPP, p > 3
std::vector<i64> second_pp_expected(i64 p);   // second-kind PP within [1, p(p^2-1)]
std::vector<i64> second_cpp_expected(i64 p);  // second-kind CPP within [1, p(p^2-1)]

// --- the scans ------------------------------------------------------------

ScanResult scan_first_kind_pp(i64 p);    // p > 3, n in [1, p^2-1]
ScanResult scan_first_kind_cpp(i64 p);   // odd p, n in [1, p^2-1]
ScanResult scan_second_kind_pp(i64 p);   // p >= 3, n in [1, p(p^2-1)]
ScanResult scan_second_kind_cpp(i64 p);  // p >= 3, n in [1, p(p^2-1)]

/// PP over Z_{p^t} for n in [1, bound] via the lifting criterion.
IndexClassification scan_ring(Kind kind, i64 p, int t, i64 bound);

/// Minimal period of the n >= 2 tail of E_n'(1, 1/4) mod p over a window of
/// 4p(p-1) terms; compared against p(p-1) or p(p-1)/2 by Mersenne status for
/// p > 3 (no prediction exists for p = 3).
std::pair<PeriodReport, std::optional<ConjectureVerdict>> derivative_quarter_period(i64 p);

/// Fixed-point counts of D_n(1,.) for n in {2, 2p, 3, 3p, p+1, p+2, 2p+1},
/// asserted wherever a theorem covers the (p mod 12, n) combination.
SuiteReport fixed_point_census(i64 p);

/// Observed vs predicted cycle types for the D_2/D_{2p}, D_3/D_{3p}, E_2,
/// E_3, D_2+x and (p = 1,7 mod 12) D_{p+2}/D_{2p+1} families.
SuiteReport cycle_type_check(i64 p);

/// PP / non-PP facts for a = 0 over Z_{p^s}, s <= t, n <= bound.
SuiteReport verify_a_zero(i64 p, int t, i64 bound = 24);

/// Pointwise checks of the closed forms of D_{p+1}, D_{p+2}, the
/// square/non-square trichotomy of 2x^{(p+1)/2} - x, and the piecewise
/// low-degree forms of E_15, E_94 (p=5) and E_170 (p=7).
SuiteReport closed_form_cross_checks(i64 p);

}  // namespace rdp
