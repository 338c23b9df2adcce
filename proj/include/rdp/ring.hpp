#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rdp/errors.hpp"

namespace rdp {

using i64 = std::int64_t;

struct Factor {
    i64 prime;
    int exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Normalize x into [0, m).
inline i64 reduce_mod(i64 x, i64 m) {
    x %= m;
    return x < 0 ? x + m : x;
}

i64 mod_pow(i64 a, i64 e, i64 m);      // e >= 0; 0^0 = 1
i64 mod_inv(i64 a, i64 m);             // throws NotInvertible when gcd(a,m) != 1

bool is_prime(i64 n);
std::vector<Factor> factorize(i64 n);  // trial division, sorted ascending

/// The ring Z_m with its factorization. All residues live in [0, m).
class ResidueRing {
   public:
    explicit ResidueRing(i64 m);

    i64 modulus() const { return m_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_prime() const { return is_prime_; }
    bool is_prime_power() const { return is_prime_power_; }

    i64 reduce(i64 x) const { return reduce_mod(x, m_); }
    i64 add(i64 a, i64 b) const { return reduce_mod(a + b, m_); }
    i64 sub(i64 a, i64 b) const { return reduce_mod(a - b, m_); }
    i64 mul(i64 a, i64 b) const { return reduce_mod(reduce(a) * reduce(b), m_); }
    i64 neg(i64 a) const { return reduce_mod(-a, m_); }
    i64 pow(i64 a, i64 e) const { return mod_pow(a, e, m_); }
    i64 inv(i64 a) const { return mod_inv(a, m_); }

    friend bool operator==(const ResidueRing& l, const ResidueRing& r) { return l.m_ == r.m_; }

   private:
    i64 m_;
    std::vector<Factor> factors_;
    bool is_prime_ = false;
    bool is_prime_power_ = false;
};

/// Legendre symbol (a/p) in {-1, 0, +1} via Euler's criterion.
/// Throws InvalidModulus unless p is an odd prime.
int legendre(i64 a, i64 p);

/// Smallest k >= 1 with a^k = 1 (mod p). Throws NotInvertible when gcd(a,p) != 1.
i64 mult_order(i64 a, i64 p);

/// True iff p is prime and p = 2^k - 1 for some k >= 2.
bool is_mersenne_prime(i64 p);

/// A square root of a mod odd prime p, canonical representative in [0, p/2];
/// nullopt when a is a non-residue.
std::optional<i64> sqrt_mod(i64 a, i64 p);

/// Smallest positive quadratic non-residue mod odd prime p.
i64 smallest_nonresidue(i64 p);

}  // namespace rdp
