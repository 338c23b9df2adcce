#include "rdp/quadext.hpp"

namespace rdp {

QuadExt QuadExt::pow(i64 e) const {
    QuadExt r = from_base(1, p, d);
    QuadExt base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

QuadExt QuadExt::inverse() const {
    // (a + b*s)^-1 = (a - b*s) / (a^2 - b^2 d)
    i64 norm = reduce_mod(a * a - b * b % p * d, p);
    if (norm == 0) throw NotInvertible("QuadExt::inverse: zero element");
    i64 ninv = mod_inv(norm, p);
    return {a * ninv, (p - b) * ninv, p, d};
}

QuadExt ext_make(i64 x, i64 p) {
    if (p < 3 || !is_prime(p)) throw InvalidModulus("ext_make: p must be an odd prime");
    x = reduce_mod(x, p);
    const i64 inv2 = (p + 1) / 2;
    const i64 u = reduce_mod(1 - 4 * x, p);
    const i64 d = smallest_nonresidue(p);
    if (auto s = sqrt_mod(u, p)) {
        return {(1 + *s) * inv2, 0, p, d};
    }
    // u is a non-residue: s = t*sqrt(d) with t^2 = u/d
    i64 t = *sqrt_mod(reduce_mod(u * mod_inv(d, p), p), p);
    i64 b = reduce_mod(t * inv2, p);
    if (b > (p - 1) / 2) b = p - b;
    return {inv2, b, p, d};
}

}  // namespace rdp
