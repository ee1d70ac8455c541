#pragma once

// Division-algebra view of a normalized triple (I, C_f, Z) with
//
//   C_f = (0 0 a / 1 0 b / 0 1 c),   Z = (0 z1 z1' / 0 z2 z2' / 1 z3 z3').
//
// Multiplication is x*y := M_x y with M_x = x1 I + x2 C_f + x3 Z; since the
// first column of M_x is x itself, e1 is the identity and the triple's
// matrices are the structure matrices of left multiplication. The module
// also provides the dual triple (right-multiplication structure matrices),
// the commutativity/associativity criteria, and the classification used by
// the census.

#include <array>
#include <stdexcept>

#include "gf.hpp"
#include "mat3.hpp"
#include "rankcode.hpp"

namespace mrd33 {

using Vec3 = std::array<Felem, 3>;

enum class SemifieldClass { field, commutative_nonassociative, proper_noncommutative };

inline const char* to_string(SemifieldClass c) {
    switch (c) {
        case SemifieldClass::field: return "field";
        case SemifieldClass::commutative_nonassociative: return "commutative_nonassociative";
        default: return "proper_noncommutative";
    }
}

struct SemifieldView {
    MonicCubic f;  // x^3 - c x^2 - b x - a
    Vec3 z{};      // second column of Z
    Vec3 zp{};     // third column of Z
};

inline Mat3 z_matrix(const SemifieldView& v) {
    Mat3 z;
    z.at(2, 0) = 1;
    for (int i = 0; i < 3; ++i) {
        z.at(i, 1) = v.z[std::size_t(i)];
        z.at(i, 2) = v.zp[std::size_t(i)];
    }
    return z;
}

inline MrdTriple view_triple(const SemifieldView& v) {
    return make_triple(mat3_identity(), companion(v.f), z_matrix(v));
}

inline SemifieldView make_view(const MrdTriple& t) {
    if (t.a1 != mat3_identity())
        throw std::invalid_argument("make_view: first matrix must be the identity");
    const MonicCubic f{t.a2.at(0, 2), t.a2.at(1, 2), t.a2.at(2, 2)};
    if (t.a2 != companion(f))
        throw std::invalid_argument("make_view: second matrix is not a companion matrix");
    if (t.a3.at(0, 0) != 0 || t.a3.at(1, 0) != 0 || t.a3.at(2, 0) != 1)
        throw std::invalid_argument("make_view: Z must have first column (0,0,1)^T");
    SemifieldView v;
    v.f = f;
    for (int i = 0; i < 3; ++i) {
        v.z[std::size_t(i)] = t.a3.at(i, 1);
        v.zp[std::size_t(i)] = t.a3.at(i, 2);
    }
    return v;
}

inline Mat3 mult_matrix(const FieldCtx& F, const SemifieldView& v, const Vec3& x) {
    return combine(F, view_triple(v), x[0], x[1], x[2]);
}

inline Vec3 multiply(const FieldCtx& F, const SemifieldView& v, const Vec3& x, const Vec3& y) {
    return mul_vec(F, mult_matrix(F, v, x), y);
}

// Exhaustive product scan for zero divisors of the algebra attached to any
// triple: exists x,y != 0 with (x1 A1 + x2 A2 + x3 A3) y = 0. Scaling x only
// scales the product, so x runs over projective representatives.
inline bool product_zero_scan(const FieldCtx& F, const Mat3& a1, const Mat3& a2, const Mat3& a3) {
    const int q = F.q();
    const MrdTriple t = make_triple(a1, a2, a3);
    bool found = false;
    for_each_projective(q, [&](Felem x1, Felem x2, Felem x3) {
        const Mat3 m = combine(F, t, x1, x2, x3);
        for (int y0 = 0; y0 < q && !found; ++y0)
            for (int y1 = 0; y1 < q && !found; ++y1)
                for (int y2 = 0; y2 < q && !found; ++y2) {
                    if (y0 == 0 && y1 == 0 && y2 == 0) continue;
                    const Vec3 prod = mul_vec(F, m, Vec3{Felem(y0), Felem(y1), Felem(y2)});
                    if (prod == Vec3{0, 0, 0}) found = true;
                }
        return !found;
    });
    return found;
}

// Equivalent to !is_mrd; the small fields get the operational product scan and
// a cross-check of the two routes.
inline bool has_zero_divisors(const FieldCtx& F, const SemifieldView& v) {
    const MrdTriple t = view_triple(v);
    const bool mrd = is_mrd(F, t);
    if (F.q() <= 3) {
        const bool scanned = product_zero_scan(F, t.a1, t.a2, t.a3);
        if (scanned == mrd)
            throw std::logic_error("has_zero_divisors: product scan disagrees with the MRD test");
        return scanned;
    }
    return !mrd;
}

namespace detail {

inline bool commutative_exhaustive(const FieldCtx& F, const SemifieldView& v) {
    const int q = F.q();
    for (int x0 = 0; x0 < q; ++x0)
        for (int x1 = 0; x1 < q; ++x1)
            for (int x2 = 0; x2 < q; ++x2) {
                const Vec3 x{Felem(x0), Felem(x1), Felem(x2)};
                const Mat3 mx = mult_matrix(F, v, x);
                for (int y0 = 0; y0 < q; ++y0)
                    for (int y1 = 0; y1 < q; ++y1)
                        for (int y2 = 0; y2 < q; ++y2) {
                            const Vec3 y{Felem(y0), Felem(y1), Felem(y2)};
                            if (mul_vec(F, mx, y) != multiply(F, v, y, x)) return false;
                        }
            }
    return true;
}

inline bool associative_exhaustive(const FieldCtx& F, const SemifieldView& v) {
    const int q = F.q();
    const int n = q * q * q;
    const auto vec = [&](int i) {
        return Vec3{Felem(i % q), Felem((i / q) % q), Felem(i / (q * q))};
    };
    for (int xi = 0; xi < n; ++xi)
        for (int yi = 0; yi < n; ++yi) {
            const Vec3 xy = multiply(F, v, vec(xi), vec(yi));
            for (int zi = 0; zi < n; ++zi) {
                const Vec3 lhs = multiply(F, v, xy, vec(zi));
                const Vec3 rhs = multiply(F, v, vec(xi), multiply(F, v, vec(yi), vec(zi)));
                if (lhs != rhs) return false;
            }
        }
    return true;
}

}  // namespace detail

// Commutative iff (a,b,c) = (z1,z2,z3): the basis products e2*e3 and e3*e2
// determine everything by bilinearity.
inline bool is_commutative(const FieldCtx& F, const SemifieldView& v) {
    const bool crit = (v.f.a == v.z[0] && v.f.b == v.z[1] && v.f.c == v.z[2]);
    if (F.q() <= 3 && crit != detail::commutative_exhaustive(F, v))
        throw std::logic_error("is_commutative: criterion disagrees with the operational check");
    return crit;
}

// Associative iff Z = C_f^2, in which case the algebra is the field F_{q^3}.
inline bool is_associative(const FieldCtx& F, const SemifieldView& v) {
    const Mat3 cf = companion(v.f);
    const bool crit = (z_matrix(v) == mul(F, cf, cf));
    if (F.q() <= 3 && crit != detail::associative_exhaustive(F, v))
        throw std::logic_error("is_associative: criterion disagrees with the operational check");
    return crit;
}

// The dual (right-multiplication) triple: C_g with g = x^3 - z3 x^2 - z2 x - z1
// and Z_hat = (0 a z1' / 0 b z2' / 1 c z3'). Requires an MRD input; the dual
// is MRD again, g is irreducible, and the construction is an involution.
inline SemifieldView dual_triple(const FieldCtx& F, const SemifieldView& v) {
    if (!is_mrd(F, view_triple(v)))
        throw std::invalid_argument("dual_triple: input triple is not MRD");
    SemifieldView d;
    d.f = MonicCubic{v.z[0], v.z[1], v.z[2]};
    d.z = Vec3{v.f.a, v.f.b, v.f.c};
    d.zp = v.zp;
    if (!is_irreducible_cubic(F, d.f))
        throw std::logic_error("dual_triple: dual polynomial is reducible");
    if (!is_mrd(F, view_triple(d))) throw std::logic_error("dual_triple: dual triple is not MRD");
    const SemifieldView dd = [&] {
        SemifieldView back;
        back.f = MonicCubic{d.z[0], d.z[1], d.z[2]};
        back.z = Vec3{d.f.a, d.f.b, d.f.c};
        back.zp = d.zp;
        return back;
    }();
    if (!(dd.f == v.f && dd.z == v.z && dd.zp == v.zp))
        throw std::logic_error("dual_triple: duality failed to be an involution");
    return d;
}

// Entrywise check of x1 I + x2 C_f + x3 Z = (x | C_g x | Z_hat x) for a vector
// x over F_{q^3}. C_g and Z_hat are the dual-triple matrices, built directly
// from the view so the identity can also be probed on non-MRD triples.
inline bool structure_identity_check(const ExtCtx& E, const SemifieldView& v,
                                     const std::array<Xelem, 3>& x) {
    const XMat3 lhs = [&] {
        XMat3 m = scale(E, x[0], embed(E, mat3_identity()));
        m = add(E, m, scale(E, x[1], embed(E, companion(v.f))));
        return add(E, m, scale(E, x[2], embed(E, z_matrix(v))));
    }();

    const Mat3 cg = companion(MonicCubic{v.z[0], v.z[1], v.z[2]});
    Mat3 zhat;
    zhat.at(2, 0) = 1;
    zhat.at(0, 1) = v.f.a;
    zhat.at(1, 1) = v.f.b;
    zhat.at(2, 1) = v.f.c;
    for (int i = 0; i < 3; ++i) zhat.at(i, 2) = v.zp[std::size_t(i)];

    const auto col1 = x;
    const auto col2 = mul_vec(E, embed(E, cg), x);
    const auto col3 = mul_vec(E, embed(E, zhat), x);
    for (int i = 0; i < 3; ++i) {
        if (lhs.at(i, 0) != col1[std::size_t(i)]) return false;
        if (lhs.at(i, 1) != col2[std::size_t(i)]) return false;
        if (lhs.at(i, 2) != col3[std::size_t(i)]) return false;
    }
    return true;
}

// Classification by the matrices alone, so brute-force and parametric
// pipelines stay comparable. Requires an MRD triple.
inline SemifieldClass classify(const FieldCtx& F, const SemifieldView& v) {
    if (!is_mrd(F, view_triple(v)))
        throw std::invalid_argument("classify: input triple is not MRD");
    if (is_associative(F, v)) return SemifieldClass::field;
    if (is_commutative(F, v)) return SemifieldClass::commutative_nonassociative;
    return SemifieldClass::proper_noncommutative;
}

}  // namespace mrd33
