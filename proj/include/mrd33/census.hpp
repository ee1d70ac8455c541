#pragma once

// Brute-force enumerators and verification of the counting statements: the
// normalized set S, the reduction chain (Y_hat, X_hat, V_hat, T_hat),
// stabilizers and centralizers under the GL_3 conjugation action, orbit
// sizes, parameter-equivalence classes, and assembly of the per-q report.
//
// Everything here is deliberately independent of the parametrization where it
// serves as an oracle: the S/V_hat sweeps test raw matrix triples, and the
// q = 2 subspace census never touches the reduction chain at all.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "gf.hpp"
#include "mat3.hpp"
#include "menichetti.hpp"
#include "rankcode.hpp"
#include "semifield.hpp"

namespace mrd33 {

struct CheckResult {
    std::string name;
    bool pass = false;
    double millis = 0.0;
    std::string note;  // diagnostic only; not part of the serialized schema
};

namespace detail {

template <class Fn>
void run_check(std::vector<CheckResult>& out, const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.pass = fn();
    } catch (const std::exception& e) {
        r.pass = false;
        r.note = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
}

inline Mat3 decode_mat(const FieldCtx& F, std::uint64_t index) {
    Mat3 m;
    const int q = F.q();
    for (int i = 0; i < 9; ++i) {
        m.e[std::size_t(i)] = Felem(index % std::uint64_t(q));
        index /= std::uint64_t(q);
    }
    return m;
}

// Base-q odometer over the entries of a matrix; returns false on wrap-around.
inline bool next_mat(const FieldCtx& F, Mat3& m) {
    const Felem top = Felem(F.q() - 1);
    for (int i = 0; i < 9; ++i) {
        if (m.e[std::size_t(i)] < top) {
            ++m.e[std::size_t(i)];
            return true;
        }
        m.e[std::size_t(i)] = 0;
    }
    return false;
}

// Projective representatives reordered so the combinations most likely to be
// singular come first (A2 alone, A3 alone, then the mixed ones). Same set as
// for_each_projective, used by the hot census loops.
inline std::vector<std::array<Felem, 3>> fail_fast_reps(int q) {
    std::vector<std::array<Felem, 3>> reps;
    reps.reserve(std::size_t(q) * std::size_t(q) + std::size_t(q) + 1);
    reps.push_back({0, 1, 0});
    reps.push_back({0, 0, 1});
    for (int x3 = 1; x3 < q; ++x3) reps.push_back({0, 1, Felem(x3)});
    for (int x2 = 0; x2 < q; ++x2)
        for (int x3 = 0; x3 < q; ++x3) reps.push_back({1, Felem(x2), Felem(x3)});
    return reps;
}

inline bool commutes(const FieldCtx& F, const Mat3& a, const Mat3& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Felem lhs = F.mul(a.at(i, 0), b.at(0, j));
            lhs = F.add(lhs, F.mul(a.at(i, 1), b.at(1, j)));
            lhs = F.add(lhs, F.mul(a.at(i, 2), b.at(2, j)));
            Felem rhs = F.mul(b.at(i, 0), a.at(0, j));
            rhs = F.add(rhs, F.mul(b.at(i, 1), a.at(1, j)));
            rhs = F.add(rhs, F.mul(b.at(i, 2), a.at(2, j)));
            if (lhs != rhs) return false;
        }
    return true;
}

inline std::vector<Mat3> gl3_elements(const FieldCtx& F) {
    if (F.q() > 3) throw std::invalid_argument("gl3_elements: full GL_3 sweep only for q <= 3");
    std::vector<Mat3> gl;
    Mat3 m;  // all-zero start
    do {
        if (det(F, m) != 0) gl.push_back(m);
    } while (next_mat(F, m));
    return gl;
}

// Stab(C_f) = {(s | C_f s | C_f^2 s) : s != 0}.
inline Mat3 stabilizer_element(const FieldCtx& F, const Mat3& cf, const Mat3& cf2,
                               const std::array<Felem, 3>& s) {
    const auto c2 = mul_vec(F, cf, s);
    const auto c3 = mul_vec(F, cf2, s);
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        m.at(i, 0) = s[std::size_t(i)];
        m.at(i, 1) = c2[std::size_t(i)];
        m.at(i, 2) = c3[std::size_t(i)];
    }
    return m;
}

inline std::vector<Mat3> stabilizer_parametrized(const FieldCtx& F, const MonicCubic& f) {
    const Mat3 cf = companion(f);
    const Mat3 cf2 = mul(F, cf, cf);
    std::vector<Mat3> out;
    const int q = F.q();
    for (int s0 = 0; s0 < q; ++s0)
        for (int s1 = 0; s1 < q; ++s1)
            for (int s2 = 0; s2 < q; ++s2) {
                if (s0 == 0 && s1 == 0 && s2 == 0) continue;
                out.push_back(stabilizer_element(F, cf, cf2, {Felem(s0), Felem(s1), Felem(s2)}));
            }
    return out;
}

// Sorted encodings of <I, C_f, C_f^2>, the field span.
inline std::vector<std::uint64_t> span_field_encodes(const FieldCtx& F, const MonicCubic& f) {
    const Mat3 cf = companion(f);
    const Mat3 cf2 = mul(F, cf, cf);
    std::vector<std::uint64_t> enc;
    const int q = F.q();
    for (int x1 = 0; x1 < q; ++x1)
        for (int x2 = 0; x2 < q; ++x2)
            for (int x3 = 0; x3 < q; ++x3)
                enc.push_back(
                    encode(combine(F, mat3_identity(), cf, cf2, Felem(x1), Felem(x2), Felem(x3))));
    std::sort(enc.begin(), enc.end());
    enc.erase(std::unique(enc.begin(), enc.end()), enc.end());
    return enc;
}

template <class Fn>
void parallel_ranges(std::uint64_t total, int workers, Fn&& body) {
    if (workers <= 1 || total < 2) {
        body(0, std::uint64_t(0), total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = total * std::uint64_t(w) / std::uint64_t(workers);
        const std::uint64_t hi = total * std::uint64_t(w + 1) / std::uint64_t(workers);
        threads.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Brute-force enumeration of S (and the Y_hat count alongside it)
// ---------------------------------------------------------------------------

struct BruteSResult {
    std::vector<MrdTriple> triples;  // normalized, sorted, duplicate-free
    ExactCount y_hat;                // MRD triples with free z31; equals (q-1)|S|
};

// Iterates f over the irreducible cubics and Z over the q^7 entries of the
// Y_q shape (z11 = z21 = 0, z31 free). Combinations with x3 = 0 are skipped
// after checking once per cubic that x1 I + x2 C_f is invertible, which holds
// exactly because f has no roots in F_q; MRD survivors always have z31 != 0
// and are normalized by scaling it to 1.
inline BruteSResult brute_force_S(const FieldCtx& F, int workers = 1) {
    const int q = F.q();
    if (q > 9) throw std::invalid_argument("brute_force_S: q must be <= 9");
    if (workers < 1) throw std::invalid_argument("brute_force_S: workers must be >= 1");

    const auto cubics = irreducible_cubics(F);
    std::uint64_t q7 = 1;
    for (int i = 0; i < 7; ++i) q7 *= std::uint64_t(q);
    const std::uint64_t total = q7 * cubics.size();

    for (const auto& f : cubics) {
        const Mat3 cf = companion(f);
        for (int x2 = 0; x2 < q; ++x2)
            if (det(F, combine(F, mat3_identity(), cf, Mat3{}, 1, Felem(x2), 0)) == 0)
                throw std::logic_error("brute_force_S: I + x2 C_f singular for irreducible f");
        if (det(F, cf) == 0) throw std::logic_error("brute_force_S: singular companion matrix");
    }

    const int nw = std::max(workers, 1);
    std::vector<std::vector<MrdTriple>> found(static_cast<std::size_t>(nw));
    std::vector<std::uint64_t> y_counts(std::size_t(nw), 0);

    detail::parallel_ranges(total, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        std::size_t fi = std::size_t(lo / q7);
        // Free entries of Z, low digit first: z31, then column 2, then column 3.
        std::array<Felem, 7> d{};
        {
            std::uint64_t v = lo % q7;
            for (int i = 0; i < 7; ++i) {
                d[std::size_t(i)] = Felem(v % std::uint64_t(q));
                v /= std::uint64_t(q);
            }
        }
        std::array<Mat3, 81> bases{};  // x1 I + x2 C_f, indexed x1*q + x2
        const auto load_bases = [&](const MonicCubic& f) {
            const Mat3 cf = companion(f);
            for (int x1 = 0; x1 < q; ++x1)
                for (int x2 = 0; x2 < q; ++x2)
                    bases[std::size_t(x1 * q + x2)] =
                        combine(F, mat3_identity(), cf, Mat3{}, Felem(x1), Felem(x2), 0);
        };
        if (fi < cubics.size()) load_bases(cubics[fi]);

        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            Mat3 z;
            z.at(2, 0) = d[0];
            z.at(0, 1) = d[1];
            z.at(1, 1) = d[2];
            z.at(2, 1) = d[3];
            z.at(0, 2) = d[4];
            z.at(1, 2) = d[5];
            z.at(2, 2) = d[6];

            bool mrd = true;
            for (int base = 0; base < q * q && mrd; ++base)
                mrd = det(F, add(F, bases[std::size_t(base)], z)) != 0;

            if (mrd) {
                ++y_counts[std::size_t(w)];
                const Felem z31 = z.at(2, 0);
                if (z31 == 0) throw std::logic_error("brute_force_S: MRD triple with z31 = 0");
                found[std::size_t(w)].push_back(make_triple(
                    mat3_identity(), companion(cubics[fi]), scale(F, F.inv(z31), z)));
            }

            if (idx + 1 < hi) {
                int pos = 0;
                while (pos < 7) {
                    if (d[std::size_t(pos)] < Felem(q - 1)) {
                        ++d[std::size_t(pos)];
                        break;
                    }
                    d[std::size_t(pos)] = 0;
                    ++pos;
                }
                if (pos == 7) {  // rolled over into the next cubic
                    ++fi;
                    if (fi < cubics.size()) load_bases(cubics[fi]);
                }
            }
        }
    });

    BruteSResult r;
    r.y_hat = 0;
    for (int w = 0; w < nw; ++w) {
        r.y_hat += y_counts[std::size_t(w)];
        auto& part = found[std::size_t(w)];
        r.triples.insert(r.triples.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
    }
    detail::sort_triples(r.triples);
    r.triples.erase(std::unique(r.triples.begin(), r.triples.end()), r.triples.end());
    return r;
}

// ---------------------------------------------------------------------------
// V_hat: pairs (A2, A3) with (I, A2, A3) MRD
// ---------------------------------------------------------------------------

inline ExactCount brute_force_Vhat(const FieldCtx& F, int workers = 1) {
    const int q = F.q();
    if (q > 3) throw std::invalid_argument("brute_force_Vhat: q must be 2 or 3");
    std::uint64_t q9 = 1;
    for (int i = 0; i < 9; ++i) q9 *= std::uint64_t(q);
    const auto reps = detail::fail_fast_reps(q);
    const Mat3 id = mat3_identity();

    const int nw = std::max(workers, 1);
    std::vector<std::uint64_t> counts(std::size_t(nw), 0);
    detail::parallel_ranges(q9, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        Mat3 a2 = detail::decode_mat(F, lo);
        for (std::uint64_t i2 = lo; i2 < hi; ++i2) {
            Mat3 a3;
            std::uint64_t remaining = q9;
            while (true) {
                bool ok = true;
                for (const auto& r : reps) {
                    if (det(F, combine(F, id, a2, a3, r[0], r[1], r[2])) == 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) ++counts[std::size_t(w)];
                if (--remaining == 0) break;
                detail::next_mat(F, a3);
            }
            detail::next_mat(F, a2);
        }
    });

    ExactCount total = 0;
    for (auto c : counts) total += c;
    return total;
}

// Full d_R partition of all (A2, A3) pairs at q = 2: how many have a
// deficient span and how many span-3 pairs sit at each rank distance.
struct VhatPartition {
    ExactCount pairs_total = 0;
    ExactCount span_deficient = 0;
    std::array<ExactCount, 4> by_distance{};  // index = rank distance, 1..3
};

inline VhatPartition brute_force_Vhat_partition(const FieldCtx& F) {
    if (F.q() != 2) throw std::invalid_argument("brute_force_Vhat_partition: q must be 2");
    VhatPartition p;
    const Mat3 id = mat3_identity();
    Mat3 a2;
    do {
        Mat3 a3;
        do {
            const MrdTriple t = make_triple(id, a2, a3);
            p.pairs_total += 1;
            if (span_dim(F, t) < 3)
                p.span_deficient += 1;
            else
                p.by_distance[std::size_t(rank_distance(F, t))] += 1;
        } while (detail::next_mat(F, a3));
    } while (detail::next_mat(F, a2));
    return p;
}

// ---------------------------------------------------------------------------
// X_hat: triples (I, C_f, Z) with unrestricted Z
// ---------------------------------------------------------------------------

inline ExactCount direct_Xhat_count(const FieldCtx& F) {
    const int q = F.q();
    if (q > 3) throw std::invalid_argument("direct_Xhat_count: q must be 2 or 3");
    std::uint64_t q9 = 1;
    for (int i = 0; i < 9; ++i) q9 *= std::uint64_t(q);
    const auto reps = detail::fail_fast_reps(q);
    const Mat3 id = mat3_identity();

    ExactCount total = 0;
    for (const auto& f : irreducible_cubics(F)) {
        const Mat3 cf = companion(f);
        Mat3 z;
        std::uint64_t remaining = q9;
        while (true) {
            bool ok = true;
            for (const auto& r : reps) {
                if (det(F, combine(F, id, cf, z, r[0], r[1], r[2])) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) total += 1;
            if (--remaining == 0) break;
            detail::next_mat(F, z);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Direct T_hat oracle: all 3-dimensional subspaces of F_q^{3x3}
// ---------------------------------------------------------------------------

// Enumerates every 3-dimensional subspace of F_q^9 through its unique reduced
// row echelon basis and counts those whose q^2+q+1 projective elements all
// have rank 3. Completely independent of the reduction chain.
inline ExactCount count_That_subspaces(const FieldCtx& F, int workers = 1) {
    const int q = F.q();
    if (q > 3) throw std::invalid_argument("count_That_subspaces: q must be 2 or 3");
    const auto reps = detail::fail_fast_reps(q);

    ExactCount mrd_total = 0, subspace_total = 0;

    for (int p0 = 0; p0 < 9; ++p0)
        for (int p1 = p0 + 1; p1 < 9; ++p1)
            for (int p2 = p1 + 1; p2 < 9; ++p2) {
                const std::array<int, 3> piv{p0, p1, p2};
                // Free cells: right of each pivot, excluding pivot columns.
                std::vector<std::pair<int, int>> free_cells;
                for (int r = 0; r < 3; ++r)
                    for (int col = piv[std::size_t(r)] + 1; col < 9; ++col) {
                        if (col == p0 || col == p1 || col == p2) continue;
                        free_cells.emplace_back(r, col);
                    }
                std::uint64_t fills = 1;
                for (std::size_t i = 0; i < free_cells.size(); ++i) fills *= std::uint64_t(q);
                subspace_total += fills;

                const int nw = std::max(workers, 1);
                std::vector<std::uint64_t> counts(std::size_t(nw), 0);
                detail::parallel_ranges(fills, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
                    std::array<std::array<Felem, 9>, 3> rows;
                    for (std::uint64_t fill = lo; fill < hi; ++fill) {
                        for (auto& row : rows) row.fill(0);
                        for (int r = 0; r < 3; ++r)
                            rows[std::size_t(r)][std::size_t(piv[std::size_t(r)])] = 1;
                        std::uint64_t v = fill;
                        for (const auto& [r, col] : free_cells) {
                            rows[std::size_t(r)][std::size_t(col)] = Felem(v % std::uint64_t(q));
                            v /= std::uint64_t(q);
                        }
                        bool all_rank3 = true;
                        for (const auto& cmb : reps) {
                            Mat3 m;
                            for (int j = 0; j < 9; ++j) {
                                Felem s = F.mul(cmb[0], rows[0][std::size_t(j)]);
                                s = F.add(s, F.mul(cmb[1], rows[1][std::size_t(j)]));
                                s = F.add(s, F.mul(cmb[2], rows[2][std::size_t(j)]));
                                m.e[std::size_t(j)] = s;
                            }
                            if (det(F, m) == 0) {
                                all_rank3 = false;
                                break;
                            }
                        }
                        if (all_rank3) ++counts[std::size_t(w)];
                    }
                });
                for (auto c : counts) mrd_total += c;
            }

    if (subspace_total != gaussian_binomial(9, 3, q))
        throw std::logic_error("count_That_subspaces: echelon enumeration missed subspaces");
    return mrd_total;
}

// ---------------------------------------------------------------------------
// Group-theory verifications (exhaustive GL_3 sweeps, q <= 3)
// ---------------------------------------------------------------------------

inline bool verify_stabilizer(const FieldCtx& F, const MonicCubic& f) {
    if (F.q() > 3) throw std::invalid_argument("verify_stabilizer: q must be 2 or 3");
    if (!is_irreducible_cubic(F, f))
        throw std::invalid_argument("verify_stabilizer: f must be irreducible");

    const Mat3 cf = companion(f);
    std::vector<std::uint64_t> brute;
    for (const auto& s : detail::gl3_elements(F))
        if (detail::commutes(F, s, cf)) brute.push_back(encode(s));
    std::sort(brute.begin(), brute.end());

    std::vector<std::uint64_t> predicted;
    for (const auto& s : detail::stabilizer_parametrized(F, f)) {
        if (det(F, s) == 0) return false;  // (s | C_f s | C_f^2 s) must be invertible
        predicted.push_back(encode(s));
    }
    std::sort(predicted.begin(), predicted.end());
    predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());

    const std::uint64_t expected = std::uint64_t(F.q()) * F.q() * F.q() - 1;
    return brute == predicted && brute.size() == expected;
}

inline bool verify_centralizer(const FieldCtx& F) {
    const int q = F.q();
    if (q > 3) throw std::invalid_argument("verify_centralizer: q must be 2 or 3");

    std::vector<std::uint64_t> scalar_encodes;
    for (int s = 1; s < q; ++s) scalar_encodes.push_back(encode(scale(F, Felem(s), mat3_identity())));
    std::sort(scalar_encodes.begin(), scalar_encodes.end());
    const auto is_scalar = [&](const Mat3& m) {
        return std::binary_search(scalar_encodes.begin(), scalar_encodes.end(), encode(m));
    };

    for (const auto& f : irreducible_cubics(F)) {
        const auto span = detail::span_field_encodes(F, f);
        const auto stab = detail::stabilizer_parametrized(F, f);
        Mat3 x;
        do {
            const bool in_span = std::binary_search(span.begin(), span.end(), encode(x));
            for (const auto& s : stab) {
                const bool comm = detail::commutes(F, s, x);
                if (in_span) {
                    if (!comm) return false;  // the span is a field, everything commutes
                } else if (comm && !is_scalar(s)) {
                    return false;
                }
            }
        } while (detail::next_mat(F, x));
    }
    return true;
}

// Explicit orbit computation under conjugation at q = 2: orbit sizes
// |GL_3|/(q^3-1) inside the field span and |GL_3|/(q-1) outside it, the
// disjoint-union count over X_hat^(1), and the direct counts behind |X_q|,
// |X_hat^(1)_q| and |Y_q|.
inline bool verify_orbit_sizes(const FieldCtx& F) {
    if (F.q() != 2) throw std::invalid_argument("verify_orbit_sizes: q must be 2");
    const auto gl = detail::gl3_elements(F);
    if (gl.size() != 168) return false;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> union_in_span;
    ExactCount x_count = 0, xhat1_count = 0, y_count = 0;

    for (const auto& f : irreducible_cubics(F)) {
        const Mat3 cf = companion(f);
        const auto span = detail::span_field_encodes(F, f);
        std::vector<std::uint64_t> span_icf{encode(Mat3{}), encode(mat3_identity()), encode(cf),
                                            encode(add(F, mat3_identity(), cf))};
        std::sort(span_icf.begin(), span_icf.end());

        const auto orbit_of = [&](const Mat3& z) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> orbit;
            for (const auto& s : gl) {
                const Mat3 si = inverse(F, s);
                orbit.emplace_back(encode(mul(F, mul(F, si, cf), s)),
                                   encode(mul(F, mul(F, si, z), s)));
            }
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            return orbit;
        };

        Mat3 z;
        do {
            const std::uint64_t ze = encode(z);
            const bool in_field_span = std::binary_search(span.begin(), span.end(), ze);
            const bool in_icf = std::binary_search(span_icf.begin(), span_icf.end(), ze);
            const MrdTriple t = make_triple(mat3_identity(), cf, z);

            if (!in_icf) x_count += 1;  // dim <I, C_f, Z> = 3

            if (in_field_span && !in_icf) {
                if (!is_mrd(F, t)) return false;  // the field span minus <I,C_f> is all MRD
                xhat1_count += 1;
                const auto orbit = orbit_of(z);
                if (orbit.size() != 168 / 7) return false;
                union_in_span.insert(union_in_span.end(), orbit.begin(), orbit.end());
            } else if (!in_field_span) {
                if (is_mrd(F, t)) return false;  // X_hat^(2) is empty at q = 2
                if (orbit_of(z).size() != 168 / 1) return false;
            }

            if (z.at(0, 0) == 0 && z.at(1, 0) == 0 && span_dim(F, t) == 3) y_count += 1;
        } while (detail::next_mat(F, z));
    }

    // Disjoint union over X_hat^(1) covers V_hat: 8 orbits x 24 = 192 pairs.
    std::sort(union_in_span.begin(), union_in_span.end());
    const auto distinct =
        std::unique(union_in_span.begin(), union_in_span.end()) - union_in_span.begin();
    if (union_in_span.size() != std::size_t(8 * 24) || std::size_t(distinct) != union_in_span.size())
        return false;

    const ExactCount n_cubics = 2;  // (q^3 - q)/3 at q = 2
    return x_count == n_cubics * (pow_int(2, 9) - 4) && xhat1_count == n_cubics * (8 - 4) &&
           y_count == n_cubics * (pow_int(2, 7) - 1);
}

// Groups all admissible parameter pairs by their (Sigma_1, Sigma_2) matrices
// and checks the groups are exactly the predicted equivalence classes (size 6
// when kh is a proper conjugate of k, size 3 otherwise).
inline bool verify_param_equivalence(const ExtCtx& E) {
    const Xelem n = E.size();
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::pair<Xelem, Xelem>>> groups;
    for (Xelem k = 0; k < n; ++k) {
        if (E.in_base(k)) continue;
        for (Xelem kh = 0; kh < n; ++kh) {
            if (!is_admissible(E, k, kh)) continue;
            const auto [m1, m2] = sigma_matrices(E, k, kh);
            groups[{encode(m1), encode(m2)}].emplace_back(k, kh);
        }
    }

    std::size_t classes6 = 0, classes3 = 0;
    for (auto& [key, members] : groups) {
        auto predicted = param_class_members(E, members.front().first, members.front().second);
        std::sort(members.begin(), members.end());
        std::sort(predicted.begin(), predicted.end());
        if (members != predicted) return false;
        if (members.size() == 6)
            ++classes6;
        else if (members.size() == 3)
            ++classes3;
        else
            return false;
    }

    const auto counts = count_formulas(E.q());
    return ExactCount(groups.size()) == counts.s &&
           ExactCount(classes6) == div_exact(counts.s_dblprime, 6, "verify_param_equivalence") &&
           ExactCount(classes3) == div_exact(counts.s_prime, 3, "verify_param_equivalence");
}

// Raw admissibility sweep over all of F_{q^3}^2, counted without any formula.
struct AdmissibilitySweep {
    ExactCount s_prime = 0;     // admissible, kh not a proper conjugate of k
    ExactCount s_dblprime = 0;  // pairs (k, k^(q^n)), k outside F_q, n = 1,2
    ExactCount admissible = 0;
};

inline AdmissibilitySweep admissibility_sweep(const ExtCtx& E) {
    AdmissibilitySweep sweep;
    const Xelem n = E.size();
    for (Xelem k = 0; k < n; ++k)
        for (Xelem kh = 0; kh < n; ++kh) {
            const bool conj = !E.in_base(k) && (kh == E.frob(k, 1) || kh == E.frob(k, 2));
            if (conj) {
                sweep.s_dblprime += 1;
                if (!is_admissible(E, k, kh))
                    throw std::logic_error("admissibility_sweep: conjugate pair not admissible");
                sweep.admissible += 1;
            } else if (is_admissible(E, k, kh)) {
                sweep.s_prime += 1;
                sweep.admissible += 1;
            }
        }
    return sweep;
}

// ---------------------------------------------------------------------------
// Census report
// ---------------------------------------------------------------------------

struct CensusOptions {
    std::optional<bool> brute;       // default: on for q <= 5
    std::optional<bool> parametric;  // default: on for q <= 9
    bool long_run = false;           // adds the heavy direct oracles
    int workers = 1;
};

struct CensusReport {
    long long q = 0;
    ExactCount s_formula, s_prime_formula, s_dblprime_formula;
    std::optional<ExactCount> s_brute, s_parametric, y_hat_brute;
    std::optional<ExactCount> x_hat_direct, v_hat_direct, t_hat_subspace;
    ExactCount t_total, t_hat;
    ExactRatio proportion;
    std::map<std::string, ExactCount> class_counts;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline std::map<std::string, ExactCount> class_counts_formula(long long q) {
    const ExactCount fields = div_exact(pow_int(q, 3) - q, 3, "class_counts_formula");
    const ExactCount comm = (q % 2 == 0) ? ExactCount(0) : fields;
    const ExactCount total = count_S_formula(q);
    return {{"field", fields},
            {"commutative_nonassociative", comm},
            {"proper_noncommutative", total - fields - comm}};
}

inline std::map<std::string, ExactCount> classify_counts(const FieldCtx& F,
                                                         const std::vector<MrdTriple>& triples) {
    std::map<std::string, ExactCount> counts{{"field", 0},
                                             {"commutative_nonassociative", 0},
                                             {"proper_noncommutative", 0}};
    for (const auto& t : triples) counts[to_string(classify(F, make_view(t)))] += 1;
    return counts;
}

// Assembles the per-q report: closed-form counts always; parametric and
// brute-force enumeration, the admissibility sweep and the reduction-chain
// oracles as permitted by q and the options. Discrepancies become failing
// check records instead of aborting the census.
inline CensusReport census_report(long long q, const CensusOptions& opt = {}) {
    if (q < 2 || q > 1'000'000'000 || !is_prime_power(q))
        throw std::invalid_argument("census_report: q must be a prime power in [2, 10^9]");

    CensusReport rep;
    rep.q = q;

    const auto formulas = count_formulas(q);
    rep.s_formula = formulas.s;
    rep.s_prime_formula = formulas.s_prime;
    rep.s_dblprime_formula = formulas.s_dblprime;
    rep.t_total = gaussian_binomial(9, 3, q);
    rep.proportion = closed_form_proportion(q);
    rep.t_hat = t_hat_count(q);
    rep.class_counts = class_counts_formula(q);

    const bool want_parametric = opt.parametric.value_or(q <= 9);
    const bool want_brute = opt.brute.value_or(q <= 5);
    if (want_parametric && q > 16)
        throw std::invalid_argument("census_report: parametric enumeration needs q <= 16");
    if (want_brute && q > 9) throw std::invalid_argument("census_report: brute force needs q <= 9");

    detail::run_check(rep.checks, "proportion_times_gaussian_integral", [&] {
        const ExactRatio t = rep.proportion * ExactRatio(rep.t_total);
        return boost::multiprecision::denominator(t) == 1 &&
               boost::multiprecision::numerator(t) == rep.t_hat;
    });
    detail::run_check(rep.checks, "recombination_identity", [&] {
        return formulas.s ==
               div_exact(formulas.s_prime + div_exact(formulas.s_dblprime, 2, "census"), 3, "census");
    });

    std::optional<FieldCtx> F;
    std::optional<ExtCtx> E;
    if (q <= 64) {
        F = build_field(int(q));
        if (want_parametric || q <= 9) E = build_extension(*F);
    }

    std::vector<MrdTriple> parametric_set;
    if (want_parametric && E) {
        detail::run_check(rep.checks, "parametric_count_matches_formula", [&] {
            parametric_set = enumerate_S_parametric(*E, opt.workers);
            rep.s_parametric = ExactCount(parametric_set.size());
            return *rep.s_parametric == rep.s_formula;
        });
    }

    std::vector<MrdTriple> brute_set;
    if (want_brute && F) {
        detail::run_check(rep.checks, "brute_count_matches_formula", [&] {
            auto r = brute_force_S(*F, opt.workers);
            brute_set = std::move(r.triples);
            rep.s_brute = ExactCount(brute_set.size());
            rep.y_hat_brute = r.y_hat;
            return *rep.s_brute == rep.s_formula;
        });
        detail::run_check(rep.checks, "y_hat_equals_qminus1_times_S", [&] {
            return rep.y_hat_brute && *rep.y_hat_brute == ExactCount(q - 1) * ExactCount(brute_set.size());
        });
        if (rep.s_parametric)
            detail::run_check(rep.checks, "brute_and_parametric_sets_equal",
                              [&] { return brute_set == parametric_set; });
    }

    if (F && (!parametric_set.empty() || !brute_set.empty())) {
        detail::run_check(rep.checks, "class_counts_match_formula", [&] {
            rep.class_counts =
                classify_counts(*F, parametric_set.empty() ? brute_set : parametric_set);
            return rep.class_counts == class_counts_formula(q);
        });
    }

    if (E && q <= 9) {
        detail::run_check(rep.checks, "admissibility_sweep_matches_formulas", [&] {
            const auto sweep = admissibility_sweep(*E);
            return sweep.s_prime == rep.s_prime_formula &&
                   sweep.s_dblprime == rep.s_dblprime_formula;
        });
    }

    if (F && q <= 3) {
        detail::run_check(rep.checks, "x_hat_direct_equals_chain", [&] {
            rep.x_hat_direct = direct_Xhat_count(*F);
            return *rep.x_hat_direct == ExactCount(q) * q * (q - 1) * rep.s_formula;
        });
        if (q == 2 || opt.long_run) {
            detail::run_check(rep.checks, "v_hat_direct_equals_chain_and_t_hat", [&] {
                rep.v_hat_direct = brute_force_Vhat(*F, opt.workers);
                const ExactCount q3 = pow_int(q, 3);
                return rep.x_hat_direct &&
                       *rep.v_hat_direct == *rep.x_hat_direct * (q3 - q) * (q3 - q * q) &&
                       *rep.v_hat_direct == rep.t_hat;
            });
        }
        if (opt.long_run) {
            detail::run_check(rep.checks, "t_hat_subspace_oracle", [&] {
                rep.t_hat_subspace = count_That_subspaces(*F, opt.workers);
                return *rep.t_hat_subspace == rep.t_hat;
            });
        }
    }

    return rep;
}

}  // namespace mrd33
