#include "rdp/ring.hpp"

#include <numeric>

namespace rdp {

i64 mod_pow(i64 a, i64 e, i64 m) {
    if (m < 1) throw InvalidModulus("mod_pow: modulus must be positive");
    a = reduce_mod(a, m);
    i64 r = 1 % m;
    while (e > 0) {
        if (e & 1) r = reduce_mod(r * a, m);
        a = reduce_mod(a * a, m);
        e >>= 1;
    }
    return r;
}

i64 mod_inv(i64 a, i64 m) {
    a = reduce_mod(a, m);
    // extended Euclid
    i64 old_r = a, r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw NotInvertible("mod_inv: element not coprime to modulus");
    return reduce_mod(old_s, m);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<Factor> factorize(i64 n) {
    if (n < 2) throw InvalidModulus("factorize: argument must be >= 2");
    std::vector<Factor> out;
    for (i64 d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

ResidueRing::ResidueRing(i64 m) : m_(m) {
    if (m < 2) throw InvalidModulus("ResidueRing: modulus must be >= 2");
    factors_ = factorize(m);
    is_prime_power_ = factors_.size() == 1;
    is_prime_ = is_prime_power_ && factors_[0].exponent == 1;
}

int legendre(i64 a, i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw InvalidModulus("legendre: modulus must be an odd prime");
    i64 r = mod_pow(a, (p - 1) / 2, p);
    if (r == p - 1) return -1;
    return static_cast<int>(r);  // 0 or 1
}

i64 mult_order(i64 a, i64 p) {
    a = reduce_mod(a, p);
    if (std::gcd(a, p) != 1) throw NotInvertible("mult_order: element not a unit");
    i64 acc = a, k = 1;
    while (acc != 1) {
        acc = reduce_mod(acc * a, p);
        ++k;
    }
    return k;
}

bool is_mersenne_prime(i64 p) {
    if (p < 3 || !is_prime(p)) return false;
    return ((p + 1) & p) == 0;  // p+1 a power of two
}

std::optional<i64> sqrt_mod(i64 a, i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw InvalidModulus("sqrt_mod: modulus must be an odd prime");
    a = reduce_mod(a, p);
    if (a == 0) return 0;
    if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;

    i64 r;
    if (p % 4 == 3) {
        r = mod_pow(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        i64 q = p - 1;
        int s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        i64 z = smallest_nonresidue(p);
        i64 m = s;
        i64 c = mod_pow(z, q, p);
        i64 t = mod_pow(a, q, p);
        r = mod_pow(a, (q + 1) / 2, p);
        while (t != 1) {
            i64 t2 = t;
            i64 i = 0;
            while (t2 != 1) {
                t2 = reduce_mod(t2 * t2, p);
                ++i;
            }
            i64 b = c;
            for (i64 j = 0; j < m - i - 1; ++j) b = reduce_mod(b * b, p);
            m = i;
            c = reduce_mod(b * b, p);
            t = reduce_mod(t * c, p);
            r = reduce_mod(r * b, p);
        }
    }
    return std::min(r, p - r);
}

i64 smallest_nonresidue(i64 p) {
    for (i64 d = 2; d < p; ++d)
        if (legendre(d, p) == -1) return d;
    throw InvalidModulus("smallest_nonresidue: no non-residue found");
}

}  // namespace rdp
