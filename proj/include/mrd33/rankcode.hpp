#pragma once

// Rank-metric predicates for matrix triples (span dimension, rank distance,
// the MRD test) and the exact counting formulas: Gaussian binomials, the
// reduction factor tying |S| to the MRD proportion, and its closed form.

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "gf.hpp"
#include "mat3.hpp"

namespace mrd33 {

// Ordered basis candidate (A1, A2, A3). The lazy flags are computed-once
// values; instances are meant to be owned by one worker at a time (contexts
// are the shared immutable state), and recomputation is idempotent.
struct MrdTriple {
    Mat3 a1, a2, a3;

    mutable std::optional<int> cached_span_dim;
    mutable std::optional<int> cached_rank_distance;

    friend bool operator==(const MrdTriple& x, const MrdTriple& y) {
        return x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3;
    }
};

inline MrdTriple make_triple(const Mat3& a1, const Mat3& a2, const Mat3& a3) {
    return MrdTriple{a1, a2, a3, std::nullopt, std::nullopt};
}

// Projective representatives (1,*,*), (0,1,*), (0,0,1): one point per
// 1-dimensional coefficient subspace, q^2 + q + 1 in total. fn returns false
// to stop; the walk reports whether it ran to completion.
template <class Fn>
bool for_each_projective(int q, Fn&& fn) {
    for (int x2 = 0; x2 < q; ++x2)
        for (int x3 = 0; x3 < q; ++x3)
            if (!fn(Felem(1), Felem(x2), Felem(x3))) return false;
    for (int x3 = 0; x3 < q; ++x3)
        if (!fn(Felem(0), Felem(1), Felem(x3))) return false;
    return fn(Felem(0), Felem(0), Felem(1));
}

inline Mat3 combine(const FieldCtx& F, const Mat3& a1, const Mat3& a2, const Mat3& a3, Felem x1,
                    Felem x2, Felem x3) {
    Mat3 m;
    for (int i = 0; i < 9; ++i) {
        Felem s = F.mul(x1, a1.e[std::size_t(i)]);
        s = F.add(s, F.mul(x2, a2.e[std::size_t(i)]));
        s = F.add(s, F.mul(x3, a3.e[std::size_t(i)]));
        m.e[std::size_t(i)] = s;
    }
    return m;
}

inline Mat3 combine(const FieldCtx& F, const MrdTriple& t, Felem x1, Felem x2, Felem x3) {
    return combine(F, t.a1, t.a2, t.a3, x1, x2, x3);
}

// Dimension of the F_q-span of the three matrices viewed as vectors in F_q^9.
inline int span_dim(const FieldCtx& F, const MrdTriple& t) {
    if (t.cached_span_dim) return *t.cached_span_dim;
    std::array<std::array<Felem, 9>, 3> rows{t.a1.e, t.a2.e, t.a3.e};
    int r = 0;
    for (int col = 0; col < 9 && r < 3; ++col) {
        int pivot = -1;
        for (int i = r; i < 3; ++i)
            if (rows[std::size_t(i)][std::size_t(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[std::size_t(pivot)], rows[std::size_t(r)]);
        const Felem pinv = F.inv(rows[std::size_t(r)][std::size_t(col)]);
        for (int i = r + 1; i < 3; ++i) {
            const Felem factor = F.mul(rows[std::size_t(i)][std::size_t(col)], pinv);
            if (factor == 0) continue;
            for (int j = col; j < 9; ++j)
                rows[std::size_t(i)][std::size_t(j)] = F.sub(
                    rows[std::size_t(i)][std::size_t(j)], F.mul(factor, rows[std::size_t(r)][std::size_t(j)]));
        }
        ++r;
    }
    t.cached_span_dim = r;
    return r;
}

// Minimum rank over the q^2+q+1 projective representatives; rank is invariant
// under nonzero scaling, so this is the rank distance of the spanned code.
inline int rank_distance(const FieldCtx& F, const MrdTriple& t) {
    if (t.cached_rank_distance) return *t.cached_rank_distance;
    if (span_dim(F, t) != 3)
        throw std::invalid_argument("rank_distance: span is degenerate (dimension < 3)");
    int best = 3;
    for_each_projective(F.q(), [&](Felem x1, Felem x2, Felem x3) {
        const int r = rank(F, combine(F, t, x1, x2, x3));
        if (r < best) best = r;
        return best > 1;  // rank 0 impossible once the span has dimension 3
    });
    t.cached_rank_distance = best;
    return best;
}

// True iff every nonzero combination is invertible. A dependent triple always
// produces the zero matrix at some projective representative, so the
// determinant scan decides the span condition as well.
inline bool is_mrd(const FieldCtx& F, const MrdTriple& t) {
    return for_each_projective(F.q(), [&](Felem x1, Felem x2, Felem x3) {
        return det(F, combine(F, t, x1, x2, x3)) != 0;
    });
}

// Number of k-dimensional subspaces of F_q^n.
inline ExactCount gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    ExactCount num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= pow_int(q, unsigned(n - i)) - 1;
        den *= pow_int(q, unsigned(k - i)) - 1;
    }
    return div_exact(num, den, "gaussian_binomial");
}

// |T_hat_q| / |T_q| = |S| * (q-1)(q^3-1)(q^3-q)^2(q^3-q^2)^2
//                         / ((q^7-1)(q^9-1)(q^9-q)).
inline ExactRatio proportion_of_mrd(long long q, const ExactCount& s_count) {
    if (s_count < 0) throw std::invalid_argument("proportion_of_mrd: negative |S|");
    const ExactCount q3 = pow_int(q, 3), q7 = pow_int(q, 7), q9 = pow_int(q, 9);
    ExactCount num = s_count * (q - 1) * (q3 - 1);
    num *= (q3 - q) * (q3 - q);
    num *= (q3 - q * q) * (q3 - q * q);
    const ExactCount den = (q7 - 1) * (q9 - 1) * (q9 - q);
    ExactRatio ratio(num, den);
    // |T_hat_q| itself must come out integral.
    const ExactRatio t_hat = ratio * ExactRatio(gaussian_binomial(9, 3, q));
    if (boost::multiprecision::denominator(t_hat) != 1)
        throw std::invalid_argument("proportion_of_mrd: s_count yields a non-integer |T_hat_q|");
    return ratio;
}

// |S| = (q^3-q)/3 * (q^3-q^2-q-1).
inline ExactCount count_S_formula(long long q) {
    const ExactCount q3 = pow_int(q, 3);
    return div_exact(q3 - q, 3, "count_S_formula") * (q3 - q * q - q - 1);
}

// (q-1)(q^3-1)(q^3-q)^3(q^3-q^2)^2(q^3-q^2-q-1) / (3(q^7-1)(q^9-1)(q^9-q)).
inline ExactRatio closed_form_proportion(long long q) {
    const ExactCount q3 = pow_int(q, 3), q7 = pow_int(q, 7), q9 = pow_int(q, 9);
    ExactCount num = (q - 1) * (q3 - 1);
    num *= (q3 - q) * (q3 - q) * (q3 - q);
    num *= (q3 - q * q) * (q3 - q * q);
    num *= q3 - q * q - q - 1;
    const ExactCount den = 3 * (q7 - 1) * (q9 - 1) * (q9 - q);
    const ExactRatio ratio(num, den);
    if (ratio != proportion_of_mrd(q, count_S_formula(q)))
        throw std::logic_error("closed_form_proportion: disagrees with the reduction formula");
    return ratio;
}

inline ExactCount t_hat_count(long long q) {
    const ExactRatio t = closed_form_proportion(q) * ExactRatio(gaussian_binomial(9, 3, q));
    return boost::multiprecision::numerator(t);  // integrality checked above
}

// Small dynamic matrix for the exploratory m x n MRD tester.
struct MatMN {
    int rows = 0, cols = 0;
    std::vector<Felem> e;

    MatMN() = default;
    MatMN(int r, int c) : rows(r), cols(c), e(std::size_t(r) * std::size_t(c), 0) {}

    Felem& at(int i, int j) { return e[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
    Felem at(int i, int j) const { return e[std::size_t(i) * std::size_t(cols) + std::size_t(j)]; }
};

inline int rank(const FieldCtx& F, MatMN m) {
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Felem pinv = F.inv(m.at(r, col));
        for (int i = r + 1; i < m.rows; ++i) {
            const Felem factor = F.mul(m.at(i, col), pinv);
            if (factor == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

// Outlook-level tester: true iff every nonzero combination of the given
// matrices has rank >= delta. Exhaustive over (q^k - 1)/(q - 1) projective
// combinations, so only practical for tiny parameters.
inline bool generic_is_mrd(const FieldCtx& F, const std::vector<MatMN>& mats, int delta) {
    if (mats.empty()) throw std::invalid_argument("generic_is_mrd: no matrices");
    const int m = mats.front().rows, n = mats.front().cols;
    for (const auto& a : mats)
        if (a.rows != m || a.cols != n) throw std::invalid_argument("generic_is_mrd: shape mismatch");
    if (delta < 1 || delta > std::min(m, n))
        throw std::invalid_argument("generic_is_mrd: delta out of range");
    if (static_cast<long long>(mats.size()) !=
        static_cast<long long>(std::max(m, n)) * (std::min(m, n) - delta + 1))
        throw std::invalid_argument("generic_is_mrd: dimension does not match m(n - delta + 1)");

    const int k = int(mats.size());
    const int q = F.q();
    std::vector<Felem> x(std::size_t(k), 0);
    // First nonzero coefficient pinned to 1: one representative per line.
    for (int lead = 0; lead < k; ++lead) {
        std::fill(x.begin(), x.end(), Felem(0));
        x[std::size_t(lead)] = 1;
        const int free = k - lead - 1;
        long long total = 1;
        for (int i = 0; i < free; ++i) total *= q;
        for (long long idx = 0; idx < total; ++idx) {
            long long v = idx;
            for (int i = 0; i < free; ++i) {
                x[std::size_t(lead + 1 + i)] = Felem(v % q);
                v /= q;
            }
            MatMN combo(m, n);
            for (int t = 0; t < k; ++t) {
                if (x[std::size_t(t)] == 0) continue;
                for (std::size_t p = 0; p < combo.e.size(); ++p)
                    combo.e[p] = F.add(combo.e[p], F.mul(x[std::size_t(t)], mats[std::size_t(t)].e[p]));
            }
            if (rank(F, combo) < delta) return false;
        }
    }
    return true;
}

}  // namespace mrd33
