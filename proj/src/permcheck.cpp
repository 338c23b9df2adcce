#include "rdp/permcheck.hpp"

#include <algorithm>
#include <map>

namespace rdp {

std::vector<i64> CycleType::expanded() const {
    std::vector<i64> out;
    for (auto [len, mult] : cycles)
        for (i64 i = 0; i < mult; ++i) out.push_back(len);
    return out;
}

PermMap tabulate(const std::function<i64(i64)>& f, const ResidueRing& ring) {
    std::vector<i64> image(ring.modulus());
    for (i64 x = 0; x < ring.modulus(); ++x) image[x] = ring.reduce(f(x));
    return {ring, std::move(image)};
}

PermMap tabulate_rdp(i64 n, Kind kind, i64 a, const ResidueRing& ring, bool plus_x) {
    return tabulate(
        [&](i64 x) {
            i64 v = eval_recurrence({n, kind, a, ring}, x);
            return plus_x ? ring.add(v, x) : v;
        },
        ring);
}

bool is_permutation(const PermMap& map, std::optional<Witness>* witness) {
    const i64 m = map.ring.modulus();
    std::vector<i64> first_preimage(m, -1);
    for (i64 x = 0; x < m; ++x) {
        i64 y = map.image[x];
        if (first_preimage[y] >= 0) {
            if (witness) *witness = Witness{first_preimage[y], x, y};
            return false;
        }
        first_preimage[y] = x;
    }
    if (witness) witness->reset();
    return true;
}

bool is_pp_prime_power(i64 n, Kind kind, i64 a, i64 p, int t) {
    if (!is_prime(p) || t < 1)
        throw std::invalid_argument("is_pp_prime_power: need prime p and t >= 1");
    ResidueRing fp(p);
    PermMap base = tabulate_rdp(n, kind, reduce_mod(a, p), fp);
    if (!is_permutation(base)) return false;
    if (t == 1) return true;
    for (i64 s = 0; s < p; ++s)
        if (derivative_at(kind, reduce_mod(a, p), s, fp, n) == 0) return false;
    return true;
}

bool is_pp_crt(i64 n, Kind kind, i64 a, i64 m) {
    ResidueRing ring(m);
    for (const Factor& f : ring.factors()) {
        if (!is_pp_prime_power(n, kind, a, f.prime, f.exponent)) return false;
    }
    return true;
}

bool is_cpp(i64 n, Kind kind, i64 a, const ResidueRing& ring) {
    return is_permutation(tabulate_rdp(n, kind, a, ring)) &&
           is_permutation(tabulate_rdp(n, kind, a, ring, /*plus_x=*/true));
}

namespace {

// Reduce mod x^p - x over F_p: x^j folds onto x^{j-(p-1)} for j >= p.
std::vector<i64> fold_mod_xp_minus_x(std::vector<i64> c, i64 p) {
    for (size_t j = c.size(); j-- > static_cast<size_t>(p);) {
        if (c[j] == 0) continue;
        c[j - (p - 1)] = reduce_mod(c[j - (p - 1)] + c[j], p);
        c[j] = 0;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::vector<i64> mul_folded(const std::vector<i64>& f, const std::vector<i64>& g, i64 p) {
    if (f.empty() || g.empty()) return {};
    std::vector<i64> out(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            out[i + j] = reduce_mod(out[i + j] + f[i] * g[j], p);
    return fold_mod_xp_minus_x(std::move(out), p);
}

}  // namespace

bool hermite_check(const CoefPoly& poly, i64 p) {
    if (!poly.ring().is_prime() || poly.ring().modulus() != p)
        throw UnsupportedRing("hermite_check: polynomial must live over F_p");
    std::vector<i64> f = fold_mod_xp_minus_x(poly.coeffs(), p);
    CoefPoly reduced(poly.ring(), f);

    i64 roots = 0;
    for (i64 x = 0; x < p; ++x)
        if (reduced.eval(x) == 0) ++roots;
    if (roots != 1) return false;

    std::vector<i64> g{1};
    for (i64 t = 1; t <= p - 2; ++t) {
        g = mul_folded(g, f, p);
        if (t % p != 0 && static_cast<i64>(g.size()) - 1 > p - 2) return false;
    }
    return true;
}

std::vector<i64> fixed_points(const PermMap& map) {
    std::vector<i64> out;
    for (i64 x = 0; x < map.ring.modulus(); ++x)
        if (map.image[x] == x) out.push_back(x);
    return out;
}

CycleType cycle_type(const PermMap& map) {
    if (!is_permutation(map)) throw NotBijective("cycle_type: map is not a bijection");
    const i64 m = map.ring.modulus();
    std::vector<bool> seen(m, false);
    std::map<i64, i64> mult;
    for (i64 x = 0; x < m; ++x) {
        if (seen[x]) continue;
        i64 len = 0, y = x;
        do {
            seen[y] = true;
            y = map.image[y];
            ++len;
        } while (y != x);
        ++mult[len];
    }
    CycleType out;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) out.cycles.push_back(*it);
    return out;
}

i64 iterate_count(const PermMap& map, i64 x, i64 k) {
    x = map.ring.reduce(x);
    for (i64 i = 0; i < k; ++i) x = map.image[x];
    return x;
}

PermReport analyze_rdp(i64 n, Kind kind, i64 a, const ResidueRing& ring, bool want_cpp) {
    PermReport report;
    PermMap map = tabulate_rdp(n, kind, a, ring);
    std::optional<Witness> witness;
    report.is_pp = is_permutation(map, &witness);
    report.witness = witness;
    report.fixed_points = fixed_points(map);
    if (report.is_pp) report.cycle_type = cycle_type(map);
    if (want_cpp) report.is_cpp = report.is_pp && is_cpp(n, kind, a, ring);
    return report;
}

}  // namespace rdp
