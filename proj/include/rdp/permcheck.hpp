#pragma once

#include <functional>
#include <optional>

#include "rdp/dickson.hpp"

namespace rdp {

/// Full image table of a map Z_m -> Z_m.
struct PermMap {
    ResidueRing ring;
    std::vector<i64> image;  // image[x] = f(x), entries in [0, m)
};

/// First collision found in lexicographic scan order.
struct Witness {
    i64 x1 = 0;
    i64 x2 = 0;
    i64 image = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Multiset of cycle lengths, stored as (length, multiplicity) pairs sorted
/// descending by length. Lengths sum to m.
struct CycleType {
    std::vector<std::pair<i64, i64>> cycles;
    std::vector<i64> expanded() const;  // e.g. {4,1} or {2,2,2,1}
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

struct PermReport {
    bool is_pp = false;
    std::optional<bool> is_cpp;
    std::vector<i64> fixed_points;
    std::optional<CycleType> cycle_type;  // present iff is_pp
    std::optional<Witness> witness;       // present iff !is_pp
};

PermMap tabulate(const std::function<i64(i64)>& f, const ResidueRing& ring);
PermMap tabulate_rdp(i64 n, Kind kind, i64 a, const ResidueRing& ring, bool plus_x = false);

bool is_permutation(const PermMap& map, std::optional<Witness>* witness = nullptr);

/// PP over Z_m decided through the prime-power factors of m; agrees with
/// direct tabulation over Z_m.
bool is_pp_crt(i64 n, Kind kind, i64 a, i64 m);

/// PP over Z_{p^t}: direct tabulation for t = 1; for t > 1 the lifting
/// criterion (PP mod p and formal derivative never zero on F_p).
bool is_pp_prime_power(i64 n, Kind kind, i64 a, i64 p, int t);

/// True iff both f and f + x are bijections on Z_m.
bool is_cpp(i64 n, Kind kind, i64 a, const ResidueRing& ring);

/// Hermite's criterion over F_p: exactly one root, and deg(poly^t mod x^p-x)
/// <= p-2 for 1 <= t <= p-2 with t not divisible by p.
/// Throws UnsupportedRing for a composite modulus.
bool hermite_check(const CoefPoly& poly, i64 p);

std::vector<i64> fixed_points(const PermMap& map);  // ascending

CycleType cycle_type(const PermMap& map);  // throws NotBijective

i64 iterate_count(const PermMap& map, i64 x, i64 k);

/// Assemble the full report for one reversed Dickson map; is_cpp is computed
/// only when requested.
PermReport analyze_rdp(i64 n, Kind kind, i64 a, const ResidueRing& ring, bool want_cpp);

}  // namespace rdp
