#include "rdp/dickson.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace rdp {

using boost::multiprecision::cpp_int;

namespace {

std::vector<i64> trim(std::vector<i64> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

i64 reduce_cpp(const cpp_int& v, i64 m) {
    cpp_int r = v % m;
    if (r < 0) r += m;
    return static_cast<i64>(r);
}

void require_kind01(Kind kind, const char* who) {
    if (kind.k != 0 && kind.k != 1)
        throw std::invalid_argument(std::string(who) + ": kind must be 0 or 1");
}

}  // namespace

CoefPoly::CoefPoly(ResidueRing ring, std::vector<i64> coeffs) : ring_(ring) {
    for (i64& c : coeffs) c = ring_.reduce(c);
    c_ = trim(std::move(coeffs));
}

i64 CoefPoly::eval(i64 x) const {
    x = ring_.reduce(x);
    i64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
}

CoefPoly poly_mul(const CoefPoly& f, const CoefPoly& g) {
    const ResidueRing& ring = f.ring();
    if (f.is_zero() || g.is_zero()) return {ring, {}};
    std::vector<i64> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        for (size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] = ring.add(out[i + j], ring.mul(f.coeffs()[i], g.coeffs()[j]));
    return {ring, std::move(out)};
}

CoefPoly poly_pow(const CoefPoly& f, i64 e) {
    CoefPoly r(f.ring(), {1});
    CoefPoly base = f;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base);
        if (e >>= 1) base = poly_mul(base, base);
    }
    return r;
}

i64 eval_recurrence(const RdpSpec& spec, i64 x) {
    const ResidueRing& ring = spec.ring;
    const i64 a = ring.reduce(spec.a);
    x = ring.reduce(x);
    i64 f0 = ring.reduce(2 - spec.kind.k);
    if (spec.n == 0) return f0;
    i64 f1 = a;
    for (i64 i = 2; i <= spec.n; ++i) {
        i64 f = ring.sub(ring.mul(a, f1), ring.mul(x, f0));
        f0 = f1;
        f1 = f;
    }
    return f1;
}

CoefPoly explicit_poly(const RdpSpec& spec) {
    const ResidueRing& ring = spec.ring;
    const i64 n = spec.n;
    const i64 k = spec.kind.k;
    const i64 a = ring.reduce(spec.a);
    if (n == 0) return {ring, {ring.reduce(2 - k)}};

    const i64 imax = n / 2;
    std::vector<i64> c(imax + 1, 0);
    cpp_int binom = 1;  // C(n-i, i)
    for (i64 i = 0; i <= imax; ++i) {
        cpp_int coef;
        if (i == 0) {
            coef = 1;
        } else {
            // (n-ki)/(n-i) C(n-i,i) = C(n-i,i) - (k-1) C(n-i-1,i-1); the
            // second term is binom*i/(n-i), an exact integer division.
            cpp_int lower = binom * i / (n - i);
            coef = binom - (k - 1) * lower;
        }
        i64 r = reduce_cpp(coef, ring.modulus());
        if (i & 1) r = ring.neg(r);  // folds (-1)^i of (-x)^i
        c[i] = ring.mul(r, ring.pow(a, n - 2 * i));
        if (i < imax) binom = binom * (n - 2 * i) * (n - 2 * i - 1) / ((n - i) * (i + 1));
    }
    return {ring, std::move(c)};
}

i64 eval_explicit(const RdpSpec& spec, i64 x) { return explicit_poly(spec).eval(x); }

i64 eval_functional(const RdpSpec& spec, i64 x) {
    const ResidueRing& ring = spec.ring;
    const i64 p = ring.modulus();
    if (!ring.is_prime() || p == 2)
        throw UnsupportedRing("eval_functional: requires an odd prime field");
    if (ring.reduce(spec.a) != 1)
        throw std::invalid_argument("eval_functional: defined for a = 1 only");
    const i64 n = spec.n;
    const int k = spec.kind.k;
    x = ring.reduce(x);

    const QuadExt y = ext_make(x, p);
    const QuadExt z = QuadExt::from_base(1, p, y.d) - y;  // 1 - y

    auto first = [&]() -> i64 {
        QuadExt v = y.pow(n) + z.pow(n);
        if (!v.in_base_field())
            throw std::logic_error("eval_functional: first-kind value left the base field");
        return v.a;
    };
    auto second = [&]() -> i64 {
        const i64 quarter = mod_inv(4, p);
        if (x == quarter) {
            // E_n(1, 1/4) = (n+1)/2^n
            return ring.mul(ring.reduce(n + 1), mod_inv(mod_pow(2, n, p), p));
        }
        QuadExt num = y.pow(n + 1) - z.pow(n + 1);
        QuadExt den = y + y - QuadExt::from_base(1, p, y.d);  // 2y - 1
        QuadExt v = num * den.inverse();
        if (!v.in_base_field())
            throw std::logic_error("eval_functional: second-kind value left the base field");
        return v.a;
    };

    if (k == 0) return first();
    if (k == 1) return second();
    return ring.add(ring.mul(ring.reduce(1 - k), first()), ring.mul(ring.reduce(k), second()));
}

CoefPoly coefficient_poly(const RdpSpec& spec) {
    const ResidueRing& ring = spec.ring;
    const i64 a = ring.reduce(spec.a);
    std::vector<i64> p0{ring.reduce(2 - spec.kind.k)};
    if (spec.n == 0) return {ring, std::move(p0)};
    std::vector<i64> p1{a};
    for (i64 i = 2; i <= spec.n; ++i) {
        std::vector<i64> next(i / 2 + 1, 0);
        for (size_t j = 0; j < next.size(); ++j) {
            i64 v = j < p1.size() ? ring.mul(a, p1[j]) : 0;
            if (j >= 1 && j - 1 < p0.size()) v = ring.sub(v, p0[j - 1]);
            next[j] = v;
        }
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return {ring, std::move(p1)};
}

CoefPoly formal_derivative(const CoefPoly& poly) {
    const ResidueRing& ring = poly.ring();
    if (poly.degree() < 1) return {ring, {}};
    std::vector<i64> out(poly.degree(), 0);
    for (i64 i = 1; i <= poly.degree(); ++i)
        out[i - 1] = ring.mul(poly.coeffs()[i], ring.reduce(i));
    return {ring, std::move(out)};
}

i64 derivative_at(Kind kind, i64 a, i64 c, const ResidueRing& ring, i64 n) {
    a = ring.reduce(a);
    c = ring.reduce(c);
    i64 f0 = ring.reduce(2 - kind.k), f1 = a;
    i64 d0 = 0, d1 = 0;
    if (n == 0) return d0;
    for (i64 i = 2; i <= n; ++i) {
        i64 f = ring.sub(ring.mul(a, f1), ring.mul(c, f0));
        i64 d = ring.sub(ring.sub(ring.mul(a, d1), f0), ring.mul(c, d0));
        f0 = f1;
        f1 = f;
        d0 = d1;
        d1 = d;
    }
    return d1;
}

std::vector<i64> derivative_sequence(Kind kind, i64 a, i64 c, const ResidueRing& ring,
                                     i64 n_max) {
    a = ring.reduce(a);
    c = ring.reduce(c);
    std::vector<i64> out;
    out.reserve(n_max + 1);
    i64 f0 = ring.reduce(2 - kind.k), f1 = a;
    i64 d0 = 0, d1 = 0;
    if (n_max >= 0) out.push_back(d0);
    if (n_max >= 1) out.push_back(d1);
    for (i64 i = 2; i <= n_max; ++i) {
        i64 f = ring.sub(ring.mul(a, f1), ring.mul(c, f0));
        i64 d = ring.sub(ring.sub(ring.mul(a, d1), f0), ring.mul(c, d0));
        f0 = f1;
        f1 = f;
        d0 = d1;
        d1 = d;
        out.push_back(d1);
    }
    return out;
}

std::vector<i64> value_sequence(Kind kind, i64 a, i64 c, const ResidueRing& ring, i64 n_max) {
    a = ring.reduce(a);
    c = ring.reduce(c);
    std::vector<i64> out;
    out.reserve(n_max + 1);
    i64 f0 = ring.reduce(2 - kind.k), f1 = a;
    if (n_max >= 0) out.push_back(f0);
    if (n_max >= 1) out.push_back(f1);
    for (i64 i = 2; i <= n_max; ++i) {
        i64 f = ring.sub(ring.mul(a, f1), ring.mul(c, f0));
        f0 = f1;
        f1 = f;
        out.push_back(f1);
    }
    return out;
}

i64 derivative_first_kind(i64 n, i64 x, i64 p) {
    if (n < 2) throw std::invalid_argument("derivative_first_kind: requires n >= 2");
    ResidueRing ring(p);
    if (!ring.is_prime() || p == 2)
        throw UnsupportedRing("derivative_first_kind: requires an odd prime field");
    x = ring.reduce(x);
    if (x != mod_inv(4, p)) {
        // D_n'(1,x) = -n E_{n-2}(1,x) away from 1/4
        i64 e = eval_recurrence({n - 2, kSecondKind, 1, ring}, x);
        return ring.mul(ring.neg(ring.reduce(n)), e);
    }
    return derivative_at(kFirstKind, 1, x, ring, n);
}

i64 derivative_second_kind(i64 n, i64 x, i64 p) {
    ResidueRing ring(p);
    if (!ring.is_prime() || p == 2)
        throw UnsupportedRing("derivative_second_kind: requires an odd prime field");
    x = ring.reduce(x);
    if (x != mod_inv(4, p)) {
        // E_n'(1,x) = [-(n+1) D_n(1,x) + 2 E_n(1,x)] / (1-4x)
        i64 dn = eval_recurrence({n, kFirstKind, 1, ring}, x);
        i64 en = eval_recurrence({n, kSecondKind, 1, ring}, x);
        i64 num = ring.add(ring.mul(ring.neg(ring.reduce(n + 1)), dn), ring.mul(2, en));
        return ring.mul(num, mod_inv(ring.reduce(1 - 4 * x), p));
    }
    return derivative_at(kSecondKind, 1, x, ring, n);
}

i64 closed_form_a_zero(i64 n, Kind kind, i64 x, const ResidueRing& ring) {
    require_kind01(kind, "closed_form_a_zero");
    if (n % 2 == 1) return 0;
    i64 base = ring.pow(ring.neg(ring.reduce(x)), n / 2);
    return kind.k == 0 ? ring.mul(2, base) : base;
}

}  // namespace rdp
