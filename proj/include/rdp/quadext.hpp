#pragma once

#include "rdp/ring.hpp"

namespace rdp {

/// Element a + b*sqrt(d) of F_{p^2}, p an odd prime, d a fixed non-residue.
/// Multiplication: (a1+b1*s)(a2+b2*s) = (a1*a2 + b1*b2*d) + (a1*b2 + a2*b1)*s.
struct QuadExt {
    i64 a = 0;
    i64 b = 0;
    i64 p = 3;
    i64 d = 2;

    QuadExt() = default;
    QuadExt(i64 a_, i64 b_, i64 p_, i64 d_)
        : a(reduce_mod(a_, p_)), b(reduce_mod(b_, p_)), p(p_), d(d_) {}

    static QuadExt from_base(i64 a_, i64 p_, i64 d_) { return {a_, 0, p_, d_}; }

    bool in_base_field() const { return b == 0; }

    QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b, p, d}; }
    QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b, p, d}; }
    QuadExt operator*(const QuadExt& o) const {
        return {a * o.a % p + b * o.b % p * d, a * o.b + b * o.a, p, d};
    }
    friend bool operator==(const QuadExt& l, const QuadExt& r) {
        return l.a == r.a && l.b == r.b && l.p == r.p && l.d == r.d;
    }

    QuadExt pow(i64 e) const;
    QuadExt inverse() const;  // throws NotInvertible on zero
};

/// Canonical y in F_{p^2} with y*(1-y) = x, via y = (1+s)/2, s^2 = 1-4x.
/// When 1-4x is a residue the root s in [0, p/2] is taken; otherwise the
/// branch whose sqrt(d)-coordinate lies in [1, (p-1)/2] is returned. The two
/// branches are y and 1-y, and everything downstream is symmetric in them.
QuadExt ext_make(i64 x, i64 p);

inline QuadExt ext_pow(const QuadExt& y, i64 n) { return y.pow(n); }

}  // namespace rdp
