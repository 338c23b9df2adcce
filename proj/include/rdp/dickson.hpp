#pragma once

#include <vector>

#include "rdp/quadext.hpp"
#include "rdp/ring.hpp"

namespace rdp {

/// Which family of reversed Dickson polynomials: k=0 is the first kind D_n,
/// k=1 the second kind E_n, and k>=2 the (k+1)-th kind D_{n,k}.
struct Kind {
    int k = 0;
    constexpr explicit Kind(int kk) : k(kk) {}
    friend bool operator==(const Kind&, const Kind&) = default;
};

inline constexpr Kind kFirstKind{0};
inline constexpr Kind kSecondKind{1};

/// One evaluation problem: the n-th polynomial of the given kind with
/// parameter a (default 1 throughout the classification results) over ring.
struct RdpSpec {
    i64 n = 0;
    Kind kind = kFirstKind;
    i64 a = 1;
    ResidueRing ring;
};

/// Dense coefficient vector c_0..c_deg over Z_m, trailing zeros trimmed.
/// The zero polynomial is the empty vector.
class CoefPoly {
   public:
    CoefPoly(ResidueRing ring, std::vector<i64> coeffs);

    const ResidueRing& ring() const { return ring_; }
    const std::vector<i64>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    i64 degree() const { return static_cast<i64>(c_.size()) - 1; }  // -1 for zero
    i64 eval(i64 x) const;

    friend bool operator==(const CoefPoly& l, const CoefPoly& r) {
        return l.ring_.modulus() == r.ring_.modulus() && l.c_ == r.c_;
    }

   private:
    ResidueRing ring_;
    std::vector<i64> c_;
};

CoefPoly poly_mul(const CoefPoly& f, const CoefPoly& g);
CoefPoly poly_pow(const CoefPoly& f, i64 e);

// --- The three evaluation routes ----------------------------------------
//
// D_{n,k}(a,x) satisfies f_n = a*f_{n-1} - x*f_{n-2} with f_0 = 2-k, f_1 = a,
// has the explicit expansion sum_i (n-ki)/(n-i) C(n-i,i) a^{n-2i} (-x)^i, and
// for a=1 over F_p the functional form under x = y(1-y), y in F_{p^2}:
//   k=0:  y^n + (1-y)^n
//   k=1:  (y^{n+1} - (1-y)^{n+1})/(2y-1),  and (n+1)/2^n at x = 1/4.

i64 eval_recurrence(const RdpSpec& spec, i64 x);

/// Explicit-sum route. Coefficients are exact unbounded integers reduced only
/// at the end, so the route is independent of the recurrence.
i64 eval_explicit(const RdpSpec& spec, i64 x);
CoefPoly explicit_poly(const RdpSpec& spec);

/// Functional-expression route. Requires an odd prime field and a = 1; kinds
/// k >= 2 are evaluated as (1-k)*D_n + k*E_n.
/// Throws UnsupportedRing for even characteristic or composite moduli.
i64 eval_functional(const RdpSpec& spec, i64 x);

/// Coefficient vector of degree <= floor(n/2), reduced mod m but never mod
/// x^p - x (the formal derivative of the reduced form would differ).
CoefPoly coefficient_poly(const RdpSpec& spec);

/// Term-wise derivative c_i * i * x^{i-1} mod m.
CoefPoly formal_derivative(const CoefPoly& poly);

/// D_n'(1,x) over F_p, p odd, n >= 2: -n * E_{n-2}(1,x) away from x = 1/4,
/// the formal-derivative value at x = 1/4.
i64 derivative_first_kind(i64 n, i64 x, i64 p);

/// E_n'(1,x) over F_p, p odd: [-(n+1) D_n(1,x) + 2 E_n(1,x)] / (1-4x) away
/// from x = 1/4, the formal-derivative value at x = 1/4.
i64 derivative_second_kind(i64 n, i64 x, i64 p);

/// Closed forms at a = 0 (kinds 0 and 1 only): zero for odd n, and for n = 2l
/// the values 2(-x)^l and (-x)^l respectively.
i64 closed_form_a_zero(i64 n, Kind kind, i64 x, const ResidueRing& ring);

/// [f_0(c), ..., f_{n_max}(c)] at a fixed argument c.
std::vector<i64> value_sequence(Kind kind, i64 a, i64 c, const ResidueRing& ring, i64 n_max);

/// [f_0'(c), ..., f_{n_max}'(c)]: formal-derivative values, generated by
/// differentiating the recurrence (d_n = a*d_{n-1} - f_{n-2} - c*d_{n-2}).
std::vector<i64> derivative_sequence(Kind kind, i64 a, i64 c, const ResidueRing& ring, i64 n_max);

/// Single formal-derivative value f_n'(c); same route as derivative_sequence.
i64 derivative_at(Kind kind, i64 a, i64 c, const ResidueRing& ring, i64 n);

}  // namespace rdp
