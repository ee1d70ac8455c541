#pragma once

// The (k, k_hat) parametrization of the normalized MRD triples
//
//   S = { (I, Sigma_1(k,kh), Sigma_2(k,kh)) : 1, k, phi(k,kh) linearly
//         independent over F_q },
//
// with admissibility, the parameter equivalence classes, parametric
// enumeration of S, and the closed-form counts |S|, |S'|, |S''|.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "gf.hpp"
#include "mat3.hpp"
#include "rankcode.hpp"

namespace mrd33 {

enum class ParamKind { field, commutative, proper, inadmissible };

inline const char* to_string(ParamKind k) {
    switch (k) {
        case ParamKind::field: return "field";
        case ParamKind::commutative: return "commutative";
        case ParamKind::proper: return "proper";
        default: return "inadmissible";
    }
}

struct ParamPair {
    Xelem k = 0, kh = 0;
    bool admissible = false;
    ParamKind kind = ParamKind::inadmissible;

    friend bool operator==(const ParamPair& x, const ParamPair& y) {
        return x.k == y.k && x.kh == y.kh;
    }
};

// 1, k, phi(k, kh) linearly independent over F_q, i.e. the matrix of their
// power-basis coordinates is invertible.
inline bool is_admissible(const ExtCtx& E, Xelem k, Xelem kh) {
    const Xelem ph = phi(E, k, kh);
    Mat3 m;
    m.at(0, 0) = 1;  // coordinates of 1
    for (int i = 0; i < 3; ++i) {
        m.at(i, 1) = E.coord(k, i);
        m.at(i, 2) = E.coord(ph, i);
    }
    return det(E.base(), m) != 0;
}

inline ParamPair make_param(const ExtCtx& E, Xelem k, Xelem kh) {
    ParamPair p;
    p.k = k;
    p.kh = kh;
    p.admissible = is_admissible(E, k, kh);
    if (!p.admissible)
        p.kind = ParamKind::inadmissible;
    else if (kh == E.frob(k, 1) || kh == E.frob(k, 2))
        p.kind = ParamKind::field;
    else if (kh == k)
        p.kind = ParamKind::commutative;
    else
        p.kind = ParamKind::proper;
    return p;
}

// Sigma_1 is the companion matrix of the minimal polynomial of k; Sigma_2 is
// the explicit matrix whose entries are symmetric-function expressions in k
// and kh. Every entry lies in F_q because sigma() does.
inline std::pair<Mat3, Mat3> sigma_matrices(const ExtCtx& E, Xelem k, Xelem kh) {
    const FieldCtx& F = E.base();
    const Felem s1k = sigma(E, 1, k), s2k = sigma(E, 2, k), s3k = sigma(E, 3, k);
    const Felem s1h = sigma(E, 1, kh), s2h = sigma(E, 2, kh), s3h = sigma(E, 3, kh);
    const Xelem prod = E.mul(k, kh);
    const Felem s1p = sigma(E, 1, prod), s2p = sigma(E, 2, prod);
    const Felem s3sum = sigma(E, 3, E.add(k, kh));

    const Mat3 s1 = companion(MonicCubic{s3k, F.neg(s2k), s1k});

    Mat3 s2;
    s2.at(0, 1) = s3h;
    s2.at(0, 2) = F.sub(F.add(F.mul(s1k, s3h), F.mul(s1h, s3k)), s2p);
    s2.at(1, 1) = F.neg(s2h);
    s2.at(1, 2) = F.neg(s3sum);
    s2.at(2, 0) = 1;
    s2.at(2, 1) = s1h;
    s2.at(2, 2) = F.sub(F.mul(s1k, s1h), s1p);
    return {s1, s2};
}

inline std::pair<Mat3, Mat3> sigma_matrices(const ExtCtx& E, const ParamPair& p) {
    return sigma_matrices(E, p.k, p.kh);
}

// All parameter pairs producing the same (Sigma_1, Sigma_2): the Frobenius
// shifts (k<r>, kh<r>), plus the swapped shifts when kh is a proper conjugate
// of k. Sorted by coordinate-lex order, duplicates removed.
inline std::vector<std::pair<Xelem, Xelem>> param_class_members(const ExtCtx& E, Xelem k, Xelem kh) {
    std::vector<std::pair<Xelem, Xelem>> members;
    const bool conjugate_pair = (kh == E.frob(k, 1) || kh == E.frob(k, 2));
    for (int r = 0; r < 3; ++r) {
        members.emplace_back(E.frob(k, r), E.frob(kh, r));
        if (conjugate_pair) members.emplace_back(E.frob(kh, r), E.frob(k, r));
    }
    const auto key = [&](const std::pair<Xelem, Xelem>& p) {
        return (std::uint64_t(E.coord_lex_key(p.first)) << 32) | E.coord_lex_key(p.second);
    };
    std::sort(members.begin(), members.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

inline ParamPair canonical_param(const ExtCtx& E, const ParamPair& p) {
    const auto members = param_class_members(E, p.k, p.kh);
    return make_param(E, members.front().first, members.front().second);
}

namespace detail {

inline void check_normalized(const MrdTriple& t) {
    const bool ok = t.a1 == mat3_identity() && t.a2.at(0, 0) == 0 && t.a2.at(1, 0) == 1 &&
                    t.a2.at(2, 0) == 0 && t.a2.at(0, 1) == 0 && t.a2.at(1, 1) == 0 &&
                    t.a2.at(2, 1) == 1 && t.a3.at(0, 0) == 0 && t.a3.at(1, 0) == 0 &&
                    t.a3.at(2, 0) == 1;
    if (!ok) throw std::logic_error("parametric triple is not in normalized (I, C_f, Z) form");
}

inline void sort_triples(std::vector<MrdTriple>& v) {
    std::sort(v.begin(), v.end(), [](const MrdTriple& x, const MrdTriple& y) {
        const std::uint64_t xa = encode(x.a2), ya = encode(y.a2);
        return xa != ya ? xa < ya : encode(x.a3) < encode(y.a3);
    });
}

}  // namespace detail

// Walks all (k, kh) in F_{q^3}^2, keeps the admissible pairs, deduplicates by
// canonical class representative and emits (I, Sigma_1, Sigma_2). Each
// emitted triple is checked to be normalized and MRD. The result is sorted by
// matrix encoding and verified duplicate-free (parameter-injectivity defense),
// so it is identical for any worker count.
inline std::vector<MrdTriple> enumerate_S_parametric(const ExtCtx& E, int workers = 1) {
    if (workers < 1) throw std::invalid_argument("enumerate_S_parametric: workers must be >= 1");
    const Xelem n = E.size();

    const auto scan = [&](Xelem k_begin, Xelem k_end, std::vector<MrdTriple>& out) {
        for (Xelem k = k_begin; k < k_end; ++k) {
            if (E.in_base(k)) continue;  // 1 and k already dependent
            for (Xelem kh = 0; kh < n; ++kh) {
                if (!is_admissible(E, k, kh)) continue;
                const auto members = param_class_members(E, k, kh);
                if (members.front() != std::make_pair(k, kh)) continue;
                const auto [m1, m2] = sigma_matrices(E, k, kh);
                MrdTriple t = make_triple(mat3_identity(), m1, m2);
                detail::check_normalized(t);
                if (!is_mrd(E.base(), t))
                    throw std::logic_error("admissible parameters produced a non-MRD triple");
                out.push_back(std::move(t));
            }
        }
    };

    std::vector<MrdTriple> all;
    if (workers == 1) {
        scan(0, n, all);
    } else {
        std::vector<std::vector<MrdTriple>> parts(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        threads.reserve(std::size_t(workers));
        for (int w = 0; w < workers; ++w) {
            const Xelem lo = Xelem((std::uint64_t(n) * std::uint64_t(w)) / std::uint64_t(workers));
            const Xelem hi = Xelem((std::uint64_t(n) * std::uint64_t(w + 1)) / std::uint64_t(workers));
            threads.emplace_back([&, lo, hi, w] { scan(lo, hi, parts[std::size_t(w)]); });
        }
        for (auto& t : threads) t.join();
        for (auto& part : parts)
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }

    detail::sort_triples(all);
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1])
            throw std::logic_error("distinct canonical parameters produced equal matrix pairs");
    return all;
}

struct SCounts {
    ExactCount s, s_prime, s_dblprime;
};

// |S'| = (q^3-q)(q^3-q^2-q-2), |S''| = 2(q^3-q), and the recombination
// |S| = (|S'| + |S''|/2) / 3 must reproduce (q^3-q)/3 (q^3-q^2-q-1).
inline SCounts count_formulas(long long q) {
    const ExactCount q3 = pow_int(q, 3);
    SCounts r;
    r.s_prime = (q3 - q) * (q3 - q * q - q - 2);
    r.s_dblprime = 2 * (q3 - q);
    r.s = count_S_formula(q);
    const ExactCount recombined =
        div_exact(r.s_prime + div_exact(r.s_dblprime, 2, "count_formulas"), 3, "count_formulas");
    if (recombined != r.s) throw std::logic_error("count_formulas: recombination identity failed");
    return r;
}

}  // namespace mrd33
