#pragma once

// Finite-field contexts: F_q for prime powers 2 <= q <= 64 and its cubic
// extension F_{q^3}.
//
// Base-field elements are integer indices 0..q-1. For prime q the index is the
// residue itself; for q = p^e it encodes a polynomial over F_p in base p
// (digit i = coefficient of x^i). Arithmetic goes through precomputed q x q
// tables, so every operation is one lookup.
//
// Extension elements are indices 0..q^3-1 encoding the coordinates (x0,x1,x2)
// with respect to the power basis (1, t, t^2), packed as x0 + x1*q + x2*q^2.
// Multiplication reduces modulo the defining cubic; Frobenius k -> k^q is
// tabulated.
//
// Monic cubics are kept in the convention f = x^3 - c*x^2 - b*x - a, which
// makes (a, b, c) the last column of the companion matrix. Defining
// polynomials are always the minimum under the integer key sum(coeff_i * q^i)
// over the non-leading coefficients (for a cubic: a + b*q + c*q^2), so the
// constructed fields are reproducible: F_8 gets x^3 + x + 1, F_16 gets
// x^4 + x + 1, and so on.
//
// Contexts are immutable after construction and safe to share across threads;
// every operation is a pure function of (context, inputs).

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrd33 {

using Felem = std::uint8_t;   // base-field element index, q <= 64
using Xelem = std::uint32_t;  // extension element index, < q^3

struct MonicCubic {
    Felem a = 0, b = 0, c = 0;  // f = x^3 - c*x^2 - b*x - a

    friend bool operator==(const MonicCubic&, const MonicCubic&) = default;
};

inline std::uint32_t cubic_key(const MonicCubic& f, int q) {
    return std::uint32_t(f.a) + std::uint32_t(f.b) * std::uint32_t(q) +
           std::uint32_t(f.c) * std::uint32_t(q) * std::uint32_t(q);
}

// Prime-power test by trial division; adequate for the supported q ranges.
inline bool is_prime_power(long long q) {
    if (q < 2) return false;
    long long p = q;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    long long m = q;
    while (m % p == 0) m /= p;
    return m == 1;
}

namespace detail {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over F_p, coefficients low-degree first.
using PolyP = std::vector<int>;

inline void poly_trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PolyP poly_mod(PolyP f, const PolyP& g, int p) {
    // g monic
    while (f.size() >= g.size() && !f.empty()) {
        poly_trim(f);
        if (f.size() < g.size()) break;
        const int lead = f.back();
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            int v = f[shift + i] - lead * g[i] % p;
            f[shift + i] = ((v % p) + p) % p;
        }
        poly_trim(f);
    }
    return f;
}

inline PolyP poly_mul_mod(const PolyP& f, const PolyP& g, const PolyP& mod, int p) {
    PolyP prod(f.size() + g.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            prod[i + j] = (prod[i + j] + f[i] * g[j]) % p;
    }
    poly_trim(prod);
    return poly_mod(std::move(prod), mod, p);
}

inline bool poly_divides(const PolyP& d, const PolyP& f, int p) {
    PolyP r = poly_mod(f, d, p);
    return r.empty();
}

// Trial division by every lower-degree monic; fine for the degrees <= 6 needed here.
inline bool poly_irreducible(const PolyP& f, int p) {
    const int deg = int(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        const long long count = [&] {
            long long c = 1;
            for (int i = 0; i < d; ++i) c *= p;
            return c;
        }();
        for (long long key = 0; key < count; ++key) {
            PolyP g(std::size_t(d) + 1, 0);
            long long k = key;
            for (int i = 0; i < d; ++i) {
                g[std::size_t(i)] = int(k % p);
                k /= p;
            }
            g[std::size_t(d)] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace detail

class FieldCtx {
public:
    int q() const { return q_; }
    int characteristic() const { return p_; }
    int extension_degree() const { return e_; }
    bool prime_field() const { return e_ == 1; }

    // Defining polynomial over F_p, non-leading coefficients low-degree first;
    // empty for prime fields.
    const std::vector<Felem>& modulus() const { return modulus_; }

    Felem add(Felem a, Felem b) const { return add_[idx(a, b)]; }
    Felem sub(Felem a, Felem b) const { return add_[idx(a, neg_[b])]; }
    Felem mul(Felem a, Felem b) const { return mul_[idx(a, b)]; }
    Felem neg(Felem a) const { return neg_[a]; }

    Felem inv(Felem a) const {
        if (a == 0) throw std::invalid_argument("FieldCtx::inv: zero has no inverse");
        return inv_[a];
    }

    Felem div(Felem a, Felem b) const { return mul(a, inv(b)); }

    Felem pow(Felem a, unsigned long long n) const {
        Felem r = 1, b = a;
        while (n) {
            if (n & 1ull) r = mul(r, b);
            b = mul(b, b);
            n >>= 1ull;
        }
        return r;
    }

    friend FieldCtx build_field(int q);

private:
    std::size_t idx(Felem a, Felem b) const { return std::size_t(a) * std::size_t(q_) + b; }

    int q_ = 0, p_ = 0, e_ = 0;
    std::vector<Felem> modulus_;
    std::vector<Felem> add_, mul_;  // q*q tables
    std::vector<Felem> neg_, inv_;  // per-element tables; inv_[0] unused
};

inline FieldCtx build_field(int q) {
    if (q < 2 || q > 64) throw std::invalid_argument("build_field: q must be in [2, 64]");
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (!detail::is_prime(p)) throw std::invalid_argument("build_field: q is not a prime power");
    int e = 0;
    {
        int m = q;
        while (m > 1) {
            if (m % p != 0) throw std::invalid_argument("build_field: q is not a prime power");
            m /= p;
            ++e;
        }
    }

    FieldCtx ctx;
    ctx.q_ = q;
    ctx.p_ = p;
    ctx.e_ = e;

    if (e > 1) {
        // Smallest irreducible monic of degree e under the integer coefficient key.
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long key = 0; key < count; ++key) {
            detail::PolyP f(std::size_t(e) + 1, 0);
            long long k = key;
            for (int i = 0; i < e; ++i) {
                f[std::size_t(i)] = int(k % p);
                k /= p;
            }
            f[std::size_t(e)] = 1;
            if (detail::poly_irreducible(f, p)) {
                ctx.modulus_.assign(f.begin(), f.end() - 1);
                break;
            }
        }
        if (ctx.modulus_.empty()) throw std::logic_error("build_field: no irreducible modulus found");
    }

    const auto digits = [&](int x) {
        std::array<int, 6> d{};
        for (int i = 0; i < e; ++i) {
            d[std::size_t(i)] = x % p;
            x /= p;
        }
        return d;
    };
    const auto pack = [&](const std::array<int, 6>& d) {
        int x = 0;
        for (int i = e - 1; i >= 0; --i) x = x * p + d[std::size_t(i)];
        return Felem(x);
    };

    ctx.add_.resize(std::size_t(q) * std::size_t(q));
    ctx.mul_.resize(std::size_t(q) * std::size_t(q));
    ctx.neg_.resize(std::size_t(q));
    ctx.inv_.resize(std::size_t(q));

    detail::PolyP mod;
    if (e > 1) {
        mod.assign(ctx.modulus_.begin(), ctx.modulus_.end());
        mod.push_back(1);
    }

    for (int a = 0; a < q; ++a) {
        const auto da = digits(a);
        {
            std::array<int, 6> dn{};
            for (int i = 0; i < e; ++i) dn[std::size_t(i)] = (p - da[std::size_t(i)]) % p;
            ctx.neg_[std::size_t(a)] = pack(dn);
        }
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b);
            std::array<int, 6> ds{};
            for (int i = 0; i < e; ++i) ds[std::size_t(i)] = (da[std::size_t(i)] + db[std::size_t(i)]) % p;
            ctx.add_[std::size_t(a) * std::size_t(q) + std::size_t(b)] = pack(ds);

            if (e == 1) {
                ctx.mul_[std::size_t(a) * std::size_t(q) + std::size_t(b)] = Felem(a * b % p);
            } else {
                detail::PolyP fa(da.begin(), da.begin() + e), fb(db.begin(), db.begin() + e);
                detail::poly_trim(fa);
                detail::poly_trim(fb);
                detail::PolyP prod = detail::poly_mul_mod(fa, fb, mod, p);
                std::array<int, 6> dp{};
                for (std::size_t i = 0; i < prod.size(); ++i) dp[i] = prod[i];
                ctx.mul_[std::size_t(a) * std::size_t(q) + std::size_t(b)] = pack(dp);
            }
        }
    }

    for (int a = 1; a < q; ++a) {
        bool found = false;
        for (int b = 1; b < q; ++b)
            if (ctx.mul_[std::size_t(a) * std::size_t(q) + std::size_t(b)] == 1) {
                ctx.inv_[std::size_t(a)] = Felem(b);
                found = true;
                break;
            }
        if (!found) throw std::logic_error("build_field: element without inverse (bad modulus)");
    }

    return ctx;
}

// f has a root in F_q iff it is reducible (degree 3).
inline bool is_irreducible_cubic(const FieldCtx& F, const MonicCubic& f) {
    for (int x = 0; x < F.q(); ++x) {
        const Felem xe = Felem(x);
        const Felem x2 = F.mul(xe, xe);
        const Felem x3 = F.mul(x2, xe);
        // x^3 - c x^2 - b x - a
        Felem v = F.sub(x3, F.mul(f.c, x2));
        v = F.sub(v, F.mul(f.b, xe));
        v = F.sub(v, f.a);
        if (v == 0) return false;
    }
    return true;
}

// All monic irreducible cubics over F_q, sorted by the canonical key; there
// are exactly (q^3 - q)/3 of them.
inline std::vector<MonicCubic> irreducible_cubics(const FieldCtx& F) {
    const int q = F.q();
    std::vector<MonicCubic> out;
    out.reserve(std::size_t((q * q * q - q) / 3));
    for (int c = 0; c < q; ++c)
        for (int b = 0; b < q; ++b)
            for (int a = 0; a < q; ++a) {
                const MonicCubic f{Felem(a), Felem(b), Felem(c)};
                if (is_irreducible_cubic(F, f)) out.push_back(f);
            }
    std::sort(out.begin(), out.end(), [&](const MonicCubic& x, const MonicCubic& y) {
        return cubic_key(x, q) < cubic_key(y, q);
    });
    return out;
}

class ExtCtx {
public:
    const FieldCtx& base() const { return base_; }
    int q() const { return base_.q(); }
    std::uint32_t size() const { return n_; }  // q^3
    const MonicCubic& defining_cubic() const { return cubic_; }

    Felem coord(Xelem x, int i) const {
        const std::uint32_t q = std::uint32_t(base_.q());
        switch (i) {
            case 0: return Felem(x % q);
            case 1: return Felem((x / q) % q);
            default: return Felem(x / (q * q));
        }
    }

    Xelem make(Felem x0, Felem x1, Felem x2) const {
        const std::uint32_t q = std::uint32_t(base_.q());
        return Xelem(x0) + Xelem(x1) * q + Xelem(x2) * q * q;
    }

    Xelem embed(Felem s) const { return Xelem(s); }
    bool in_base(Xelem x) const { return x < Xelem(base_.q()); }

    Felem to_base(Xelem x) const {
        if (!in_base(x)) throw std::invalid_argument("ExtCtx::to_base: element not in the base field");
        return Felem(x);
    }

    // The power-basis generator t = (0,1,0).
    Xelem gen() const { return make(0, 1, 0); }

    Xelem add(Xelem x, Xelem y) const {
        return make(base_.add(coord(x, 0), coord(y, 0)), base_.add(coord(x, 1), coord(y, 1)),
                    base_.add(coord(x, 2), coord(y, 2)));
    }

    Xelem sub(Xelem x, Xelem y) const {
        return make(base_.sub(coord(x, 0), coord(y, 0)), base_.sub(coord(x, 1), coord(y, 1)),
                    base_.sub(coord(x, 2), coord(y, 2)));
    }

    Xelem neg(Xelem x) const {
        return make(base_.neg(coord(x, 0)), base_.neg(coord(x, 1)), base_.neg(coord(x, 2)));
    }

    Xelem scale(Felem s, Xelem x) const {
        return make(base_.mul(s, coord(x, 0)), base_.mul(s, coord(x, 1)), base_.mul(s, coord(x, 2)));
    }

    Xelem mul(Xelem x, Xelem y) const {
        const FieldCtx& F = base_;
        const Felem x0 = coord(x, 0), x1 = coord(x, 1), x2 = coord(x, 2);
        const Felem y0 = coord(y, 0), y1 = coord(y, 1), y2 = coord(y, 2);
        // Convolution coefficients of degree 0..4.
        const Felem c0 = F.mul(x0, y0);
        const Felem c1 = F.add(F.mul(x0, y1), F.mul(x1, y0));
        const Felem c2 = F.add(F.add(F.mul(x0, y2), F.mul(x1, y1)), F.mul(x2, y0));
        const Felem c3 = F.add(F.mul(x1, y2), F.mul(x2, y1));
        const Felem c4 = F.mul(x2, y2);
        // t^3 = a + b t + c t^2, t^4 = ca + (a + cb) t + (b + c^2) t^2.
        const Felem r0 = F.add(c0, F.add(F.mul(c3, red3_[0]), F.mul(c4, red4_[0])));
        const Felem r1 = F.add(c1, F.add(F.mul(c3, red3_[1]), F.mul(c4, red4_[1])));
        const Felem r2 = F.add(c2, F.add(F.mul(c3, red3_[2]), F.mul(c4, red4_[2])));
        return make(r0, r1, r2);
    }

    Xelem pow(Xelem x, unsigned long long n) const {
        Xelem r = embed(1), b = x;
        while (n) {
            if (n & 1ull) r = mul(r, b);
            b = mul(b, b);
            n >>= 1ull;
        }
        return r;
    }

    Xelem inv(Xelem x) const {
        if (x == 0) throw std::invalid_argument("ExtCtx::inv: zero has no inverse");
        return pow(x, (unsigned long long)(n_)-2);  // x^(q^3 - 2)
    }

    Xelem frob(Xelem x, int i = 1) const {
        switch (((i % 3) + 3) % 3) {
            case 0: return x;
            case 1: return frob1_[x];
            default: return frob2_[x];
        }
    }

    // Coordinate-lex key: compares x0 first, then x1, then x2. Used for every
    // deterministic "smallest element" choice (root labels, canonical pairs).
    std::uint32_t coord_lex_key(Xelem x) const {
        const std::uint32_t q = std::uint32_t(base_.q());
        return std::uint32_t(coord(x, 0)) * q * q + std::uint32_t(coord(x, 1)) * q +
               std::uint32_t(coord(x, 2));
    }

    friend ExtCtx build_extension(const FieldCtx& base);

private:
    FieldCtx base_;
    MonicCubic cubic_;
    std::uint32_t n_ = 0;
    std::array<Felem, 3> red3_{}, red4_{};  // reduction rows for t^3, t^4
    std::vector<Xelem> frob1_, frob2_;
};

inline ExtCtx build_extension(const FieldCtx& base) {
    ExtCtx E;
    E.base_ = base;
    const int q = base.q();
    E.n_ = std::uint32_t(q) * std::uint32_t(q) * std::uint32_t(q);

    const auto cubics = irreducible_cubics(base);
    if (cubics.empty()) throw std::logic_error("build_extension: no irreducible cubic");
    E.cubic_ = cubics.front();

    E.red3_ = {E.cubic_.a, E.cubic_.b, E.cubic_.c};
    const FieldCtx& F = base;
    const Felem a = E.cubic_.a, b = E.cubic_.b, c = E.cubic_.c;
    E.red4_ = {F.mul(c, a), F.add(a, F.mul(c, b)), F.add(b, F.mul(c, c))};

    E.frob1_.resize(E.n_);
    for (Xelem x = 0; x < E.n_; ++x) E.frob1_[x] = E.pow(x, (unsigned long long)(q));
    E.frob2_.resize(E.n_);
    for (Xelem x = 0; x < E.n_; ++x) E.frob2_[x] = E.frob1_[E.frob1_[x]];
    for (Xelem x = 0; x < E.n_; ++x)
        if (E.frob1_[E.frob2_[x]] != x)
            throw std::logic_error("build_extension: Frobenius is not of order 3");

    return E;
}

inline Xelem frobenius(const ExtCtx& E, Xelem k, int i) { return E.frob(k, i); }

// Elementary symmetric functions of the conjugate triple (k, k^q, k^{q^2});
// sigma_1 is the trace, sigma_3 the norm. The value always lands in the
// embedded base field; anything else means the tables are corrupted.
inline Felem sigma(const ExtCtx& E, int j, Xelem k) {
    const Xelem k0 = k, k1 = E.frob(k, 1), k2 = E.frob(k, 2);
    Xelem v;
    switch (j) {
        case 1: v = E.add(E.add(k0, k1), k2); break;
        case 2: v = E.add(E.add(E.mul(k0, k1), E.mul(k0, k2)), E.mul(k1, k2)); break;
        case 3: v = E.mul(E.mul(k0, k1), k2); break;
        default: throw std::invalid_argument("sigma: j must be 1, 2 or 3");
    }
    if (!E.in_base(v)) throw std::logic_error("sigma: value not Frobenius-fixed (table corruption)");
    return Felem(v);
}

// phi(k, kh) = (k + kh)(sigma_1(kh) - kh) - sigma_2(kh).
inline Xelem phi(const ExtCtx& E, Xelem k, Xelem kh) {
    const Xelem s1 = E.embed(sigma(E, 1, kh));
    const Xelem s2 = E.embed(sigma(E, 2, kh));
    return E.sub(E.mul(E.add(k, kh), E.sub(s1, kh)), s2);
}

struct MinPoly {
    int degree = 0;     // 1 or 3
    Felem root = 0;     // degree 1: min poly is x - root
    MonicCubic cubic;   // degree 3: x^3 - c x^2 - b x - a

    friend bool operator==(const MinPoly&, const MinPoly&) = default;
};

inline MinPoly min_poly(const ExtCtx& E, Xelem k) {
    if (E.in_base(k)) return MinPoly{1, Felem(k), {}};
    return MinPoly{3, 0,
                   MonicCubic{sigma(E, 3, k), E.base().neg(sigma(E, 2, k)), sigma(E, 1, k)}};
}

inline Xelem eval_cubic(const ExtCtx& E, const MonicCubic& f, Xelem x) {
    const Xelem x2 = E.mul(x, x);
    const Xelem x3 = E.mul(x2, x);
    Xelem v = E.sub(x3, E.scale(f.c, x2));
    v = E.sub(v, E.scale(f.b, x));
    return E.sub(v, E.embed(f.a));
}

// The conjugate root triple (r, r^q, r^{q^2}) of an irreducible cubic, with r
// the coordinate-lex smallest root.
inline std::array<Xelem, 3> cubic_roots(const ExtCtx& E, const MonicCubic& f) {
    if (!is_irreducible_cubic(E.base(), f))
        throw std::invalid_argument("cubic_roots: polynomial is reducible over F_q");
    Xelem best = 0;
    bool found = false;
    for (Xelem x = 0; x < E.size(); ++x) {
        if (eval_cubic(E, f, x) != 0) continue;
        if (!found || E.coord_lex_key(x) < E.coord_lex_key(best)) {
            best = x;
            found = true;
        }
    }
    if (!found) throw std::logic_error("cubic_roots: irreducible cubic without roots in F_{q^3}");
    return {best, E.frob(best, 1), E.frob(best, 2)};
}

}  // namespace mrd33
