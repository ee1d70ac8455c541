#pragma once

// 3x3 matrices over F_q: companion matrices, determinant, rank,
// characteristic polynomial, conjugation. The dimension is baked into the
// type; the census loops rely on it being fully unrolled.

#include <array>
#include <cstdint>
#include <stdexcept>

#include "gf.hpp"

namespace mrd33 {

struct Mat3 {
    std::array<Felem, 9> e{};  // row-major

    Felem& at(int i, int j) { return e[std::size_t(i) * 3 + std::size_t(j)]; }
    Felem at(int i, int j) const { return e[std::size_t(i) * 3 + std::size_t(j)]; }

    friend bool operator==(const Mat3&, const Mat3&) = default;
    friend auto operator<=>(const Mat3&, const Mat3&) = default;
};

// 54-bit packing (6 bits per entry, q <= 64); used as set/sort key.
inline std::uint64_t encode(const Mat3& m) {
    std::uint64_t k = 0;
    for (int i = 8; i >= 0; --i) k = (k << 6) | m.e[std::size_t(i)];
    return k;
}

inline Mat3 mat3_identity() {
    Mat3 m;
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 1;
    return m;
}

inline Mat3 companion(const MonicCubic& f) {
    Mat3 m;
    m.at(0, 2) = f.a;
    m.at(1, 0) = 1;
    m.at(1, 2) = f.b;
    m.at(2, 1) = 1;
    m.at(2, 2) = f.c;
    return m;
}

inline Mat3 add(const FieldCtx& F, const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[std::size_t(i)] = F.add(x.e[std::size_t(i)], y.e[std::size_t(i)]);
    return r;
}

inline Mat3 sub(const FieldCtx& F, const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[std::size_t(i)] = F.sub(x.e[std::size_t(i)], y.e[std::size_t(i)]);
    return r;
}

inline Mat3 scale(const FieldCtx& F, Felem s, const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[std::size_t(i)] = F.mul(s, x.e[std::size_t(i)]);
    return r;
}

inline Mat3 mul(const FieldCtx& F, const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Felem s = F.mul(x.at(i, 0), y.at(0, j));
            s = F.add(s, F.mul(x.at(i, 1), y.at(1, j)));
            s = F.add(s, F.mul(x.at(i, 2), y.at(2, j)));
            r.at(i, j) = s;
        }
    return r;
}

inline std::array<Felem, 3> mul_vec(const FieldCtx& F, const Mat3& m, const std::array<Felem, 3>& v) {
    std::array<Felem, 3> r{};
    for (int i = 0; i < 3; ++i) {
        Felem s = F.mul(m.at(i, 0), v[0]);
        s = F.add(s, F.mul(m.at(i, 1), v[1]));
        s = F.add(s, F.mul(m.at(i, 2), v[2]));
        r[std::size_t(i)] = s;
    }
    return r;
}

inline Felem det(const FieldCtx& F, const Mat3& m) {
    const Felem m00 = F.sub(F.mul(m.at(1, 1), m.at(2, 2)), F.mul(m.at(1, 2), m.at(2, 1)));
    const Felem m01 = F.sub(F.mul(m.at(1, 0), m.at(2, 2)), F.mul(m.at(1, 2), m.at(2, 0)));
    const Felem m02 = F.sub(F.mul(m.at(1, 0), m.at(2, 1)), F.mul(m.at(1, 1), m.at(2, 0)));
    Felem d = F.mul(m.at(0, 0), m00);
    d = F.sub(d, F.mul(m.at(0, 1), m01));
    return F.add(d, F.mul(m.at(0, 2), m02));
}

// Gaussian elimination with first-nonzero pivoting; exact arithmetic needs no
// tolerance.
inline int rank(const FieldCtx& F, const Mat3& m) {
    std::array<std::array<Felem, 3>, 3> a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[std::size_t(i)][std::size_t(j)] = m.at(i, j);
    int r = 0;
    for (int col = 0; col < 3 && r < 3; ++col) {
        int pivot = -1;
        for (int i = r; i < 3; ++i)
            if (a[std::size_t(i)][std::size_t(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[std::size_t(pivot)], a[std::size_t(r)]);
        const Felem pinv = F.inv(a[std::size_t(r)][std::size_t(col)]);
        for (int i = r + 1; i < 3; ++i) {
            const Felem factor = F.mul(a[std::size_t(i)][std::size_t(col)], pinv);
            if (factor == 0) continue;
            for (int j = col; j < 3; ++j)
                a[std::size_t(i)][std::size_t(j)] =
                    F.sub(a[std::size_t(i)][std::size_t(j)], F.mul(factor, a[std::size_t(r)][std::size_t(j)]));
        }
        ++r;
    }
    return r;
}

inline Felem trace(const FieldCtx& F, const Mat3& m) {
    return F.add(F.add(m.at(0, 0), m.at(1, 1)), m.at(2, 2));
}

// det(xI - A) = x^3 - c x^2 - b x - a, so c = tr(A), b = -(sum of principal
// 2x2 minors), a = det(A). Round-trips with companion().
inline MonicCubic char_poly(const FieldCtx& F, const Mat3& m) {
    const Felem m01 = F.sub(F.mul(m.at(0, 0), m.at(1, 1)), F.mul(m.at(0, 1), m.at(1, 0)));
    const Felem m02 = F.sub(F.mul(m.at(0, 0), m.at(2, 2)), F.mul(m.at(0, 2), m.at(2, 0)));
    const Felem m12 = F.sub(F.mul(m.at(1, 1), m.at(2, 2)), F.mul(m.at(1, 2), m.at(2, 1)));
    return MonicCubic{det(F, m), F.neg(F.add(F.add(m01, m02), m12)), trace(F, m)};
}

inline Mat3 inverse(const FieldCtx& F, const Mat3& m) {
    const Felem d = det(F, m);
    if (d == 0) throw std::invalid_argument("Mat3 inverse: matrix is singular");
    const Felem dinv = F.inv(d);
    Mat3 r;
    // Adjugate, transposed cofactors.
    const auto cof = [&](int i0, int i1, int j0, int j1) {
        return F.sub(F.mul(m.at(i0, j0), m.at(i1, j1)), F.mul(m.at(i0, j1), m.at(i1, j0)));
    };
    r.at(0, 0) = cof(1, 2, 1, 2);
    r.at(0, 1) = F.neg(cof(0, 2, 1, 2));
    r.at(0, 2) = cof(0, 1, 1, 2);
    r.at(1, 0) = F.neg(cof(1, 2, 0, 2));
    r.at(1, 1) = cof(0, 2, 0, 2);
    r.at(1, 2) = F.neg(cof(0, 1, 0, 2));
    r.at(2, 0) = cof(1, 2, 0, 1);
    r.at(2, 1) = F.neg(cof(0, 2, 0, 1));
    r.at(2, 2) = cof(0, 1, 0, 1);
    return scale(F, dinv, r);
}

// S^{-1} A S; throws on singular S.
inline Mat3 conjugate(const FieldCtx& F, const Mat3& s, const Mat3& a) {
    return mul(F, mul(F, inverse(F, s), a), s);
}

// 3x3 matrices with entries in F_{q^3}; just enough for the determinant
// factorization and structure-matrix identities.
struct XMat3 {
    std::array<Xelem, 9> e{};

    Xelem& at(int i, int j) { return e[std::size_t(i) * 3 + std::size_t(j)]; }
    Xelem at(int i, int j) const { return e[std::size_t(i) * 3 + std::size_t(j)]; }

    friend bool operator==(const XMat3&, const XMat3&) = default;
};

inline XMat3 embed(const ExtCtx& E, const Mat3& m) {
    XMat3 r;
    for (int i = 0; i < 9; ++i) r.e[std::size_t(i)] = E.embed(m.e[std::size_t(i)]);
    return r;
}

inline XMat3 add(const ExtCtx& E, const XMat3& x, const XMat3& y) {
    XMat3 r;
    for (int i = 0; i < 9; ++i) r.e[std::size_t(i)] = E.add(x.e[std::size_t(i)], y.e[std::size_t(i)]);
    return r;
}

inline XMat3 scale(const ExtCtx& E, Xelem s, const XMat3& x) {
    XMat3 r;
    for (int i = 0; i < 9; ++i) r.e[std::size_t(i)] = E.mul(s, x.e[std::size_t(i)]);
    return r;
}

inline std::array<Xelem, 3> mul_vec(const ExtCtx& E, const XMat3& m, const std::array<Xelem, 3>& v) {
    std::array<Xelem, 3> r{};
    for (int i = 0; i < 3; ++i) {
        Xelem s = E.mul(m.at(i, 0), v[0]);
        s = E.add(s, E.mul(m.at(i, 1), v[1]));
        s = E.add(s, E.mul(m.at(i, 2), v[2]));
        r[std::size_t(i)] = s;
    }
    return r;
}

inline Xelem det(const ExtCtx& E, const XMat3& m) {
    const Xelem m00 = E.sub(E.mul(m.at(1, 1), m.at(2, 2)), E.mul(m.at(1, 2), m.at(2, 1)));
    const Xelem m01 = E.sub(E.mul(m.at(1, 0), m.at(2, 2)), E.mul(m.at(1, 2), m.at(2, 0)));
    const Xelem m02 = E.sub(E.mul(m.at(1, 0), m.at(2, 1)), E.mul(m.at(1, 1), m.at(2, 0)));
    Xelem d = E.mul(m.at(0, 0), m00);
    d = E.sub(d, E.mul(m.at(0, 1), m01));
    return E.add(d, E.mul(m.at(0, 2), m02));
}

}  // namespace mrd33
