#include <catch2/catch_amalgamated.hpp>

#include <mrd33/census.hpp>
#include <mrd33/semifield.hpp>

#include <random>

using namespace mrd33;

namespace {

SemifieldView field_view(const FieldCtx& F, const MonicCubic& f) {
    const Mat3 cf = companion(f);
    return make_view(make_triple(mat3_identity(), cf, mul(F, cf, cf)));
}

std::vector<SemifieldView> views_of_S(int q) {
    const ExtCtx E = build_extension(build_field(q));
    std::vector<SemifieldView> views;
    for (const auto& t : enumerate_S_parametric(E)) views.push_back(make_view(t));
    return views;
}

}  // namespace

TEST_CASE("make_view validates the normalized shape") {
    const FieldCtx F = build_field(2);
    const Mat3 cf = companion(MonicCubic{1, 1, 0});
    const Mat3 cf2 = mul(F, cf, cf);
    CHECK_NOTHROW(make_view(make_triple(mat3_identity(), cf, cf2)));
    CHECK_THROWS_AS(make_view(make_triple(cf, cf, cf2)), std::invalid_argument);
    CHECK_THROWS_AS(make_view(make_triple(mat3_identity(), cf2, cf2)), std::invalid_argument);
    Mat3 bad = cf2;
    bad.at(2, 0) = 0;
    CHECK_THROWS_AS(make_view(make_triple(mat3_identity(), cf, bad)), std::invalid_argument);
}

TEST_CASE("multiplication satisfies the defining basis products") {
    for (const int q : {2, 3}) {
        const FieldCtx F = build_field(q);
        const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
        for (const auto& v : views_of_S(q)) {
            const int n = q * q * q;
            for (int i = 0; i < n; ++i) {
                const Vec3 x{Felem(i % q), Felem((i / q) % q), Felem(i / (q * q))};
                CHECK(multiply(F, v, x, e1) == x);
                CHECK(multiply(F, v, e1, x) == x);
            }
            CHECK(multiply(F, v, e2, e2) == e3);
            CHECK(multiply(F, v, e2, e3) == Vec3{v.f.a, v.f.b, v.f.c});
            CHECK(multiply(F, v, e3, e2) == v.z);
            CHECK(multiply(F, v, e3, e3) == v.zp);
        }
    }
}

TEST_CASE("multiplication is F_q-bilinear (exhaustive at q = 2)") {
    const FieldCtx F = build_field(2);
    for (const auto& v : views_of_S(2)) {
        for (int xi = 0; xi < 8; ++xi)
            for (int yi = 0; yi < 8; ++yi)
                for (int wi = 0; wi < 8; ++wi) {
                    const auto vec = [](int i) {
                        return Vec3{Felem(i & 1), Felem((i >> 1) & 1), Felem((i >> 2) & 1)};
                    };
                    const Vec3 x = vec(xi), y = vec(yi), w = vec(wi);
                    const auto addv = [&](const Vec3& p, const Vec3& r) {
                        return Vec3{F.add(p[0], r[0]), F.add(p[1], r[1]), F.add(p[2], r[2])};
                    };
                    CHECK(multiply(F, v, addv(x, y), w) ==
                          addv(multiply(F, v, x, w), multiply(F, v, y, w)));
                    CHECK(multiply(F, v, x, addv(y, w)) ==
                          addv(multiply(F, v, x, y), multiply(F, v, x, w)));
                }
    }
}

TEST_CASE("zero divisors exist exactly for non-MRD triples") {
    const FieldCtx F = build_field(2);

    for (const auto& f : irreducible_cubics(F)) CHECK_FALSE(has_zero_divisors(F, field_view(F, f)));

    // det(C_f + Z) = 0 produces an explicit zero divisor.
    Mat3 z;
    z.at(2, 0) = 1;
    z.at(0, 2) = 1;
    const Mat3 cf = companion(MonicCubic{1, 1, 0});
    REQUIRE(det(F, add(F, cf, z)) == 0);
    const SemifieldView v = make_view(make_triple(mat3_identity(), cf, z));
    CHECK(has_zero_divisors(F, v));

    // All of S at q = 3 is zero-divisor free.
    const FieldCtx F3 = build_field(3);
    for (const auto& v3 : views_of_S(3)) CHECK_FALSE(has_zero_divisors(F3, v3));
}

TEST_CASE("product scan agrees with the MRD test on random pairs at q = 2") {
    const FieldCtx F = build_field(2);
    const Mat3 id = mat3_identity();
    std::mt19937_64 rng(29);
    for (int i = 0; i < 4000; ++i) {
        Mat3 a2, a3;
        for (auto& e : a2.e) e = Felem(rng() & 1);
        for (auto& e : a3.e) e = Felem(rng() & 1);
        CHECK(product_zero_scan(F, id, a2, a3) != is_mrd(F, make_triple(id, a2, a3)));
    }
}

TEST_CASE("commutativity criterion with witnesses") {
    for (const int q : {2, 3}) {
        const FieldCtx F = build_field(q);
        const Vec3 e2{0, 1, 0}, e3{0, 0, 1};
        for (const auto& v : views_of_S(q)) {
            const bool comm = is_commutative(F, v);  // cross-checked internally for q <= 3
            CHECK(comm == (v.f.a == v.z[0] && v.f.b == v.z[1] && v.f.c == v.z[2]));
            if (!comm) CHECK(multiply(F, v, e2, e3) != multiply(F, v, e3, e2));
        }
    }

    // The field triple is commutative; Sigma_2(k,k) in odd characteristic is
    // commutative but not associative.
    const ExtCtx E3 = build_extension(build_field(3));
    const FieldCtx& F3 = E3.base();
    for (Xelem k = 0; k < E3.size(); ++k) {
        if (E3.in_base(k)) continue;
        const auto [s1, s2] = sigma_matrices(E3, k, k);
        const SemifieldView v = make_view(make_triple(mat3_identity(), s1, s2));
        CHECK(is_commutative(F3, v));
        CHECK_FALSE(is_associative(F3, v));
        CHECK(classify(F3, v) == SemifieldClass::commutative_nonassociative);
    }
}

TEST_CASE("associativity criterion and the power-associativity failure witness") {
    for (const int q : {2, 3}) {
        const FieldCtx F = build_field(q);
        const Vec3 e2{0, 1, 0};
        for (const auto& v : views_of_S(q)) {
            const bool assoc = is_associative(F, v);
            const Mat3 cf = companion(v.f);
            CHECK(assoc == (z_matrix(v) == mul(F, cf, cf)));
            const Vec3 left = multiply(F, v, multiply(F, v, e2, e2), e2);   // (e2 e2) e2
            const Vec3 right = multiply(F, v, e2, multiply(F, v, e2, e2));  // e2 (e2 e2)
            CHECK(left == v.z);
            CHECK(right == Vec3{v.f.a, v.f.b, v.f.c});
            if (!assoc && !is_commutative(F, v)) CHECK(left != right);
        }
    }
}

TEST_CASE("dual triple: self-duality of fields, involution, right multiplication") {
    for (const int q : {2, 3}) {
        const FieldCtx F = build_field(q);

        for (const auto& f : irreducible_cubics(F)) {
            const SemifieldView v = field_view(F, f);
            const SemifieldView d = dual_triple(F, v);
            CHECK(d.f == v.f);
            CHECK(d.z == v.z);
            CHECK(d.zp == v.zp);
        }

        for (const auto& v : views_of_S(q)) {
            const SemifieldView d = dual_triple(F, v);  // involution asserted inside
            CHECK(is_irreducible_cubic(F, d.f));
            CHECK(is_mrd(F, view_triple(d)));
            const SemifieldView dd = dual_triple(F, d);
            CHECK((dd.f == v.f && dd.z == v.z && dd.zp == v.zp));

            // y * e2 = C_g y and y * e3 = Z_hat y for every y.
            const Mat3 cg = companion(d.f);
            const Mat3 zhat = z_matrix(d);
            for (int i = 0; i < q * q * q; ++i) {
                const Vec3 y{Felem(i % q), Felem((i / q) % q), Felem(i / (q * q))};
                CHECK(multiply(F, v, y, Vec3{0, 1, 0}) == mul_vec(F, cg, y));
                CHECK(multiply(F, v, y, Vec3{0, 0, 1}) == mul_vec(F, zhat, y));
            }
        }
    }

    // Non-MRD input is rejected.
    const FieldCtx F = build_field(2);
    Mat3 z;
    z.at(2, 0) = 1;
    z.at(0, 2) = 1;
    const SemifieldView bad =
        make_view(make_triple(mat3_identity(), companion(MonicCubic{1, 1, 0}), z));
    CHECK_THROWS_AS(dual_triple(F, bad), std::invalid_argument);
}

TEST_CASE("structure matrix identity over the extension field") {
    // Exhaustive over all 512 vectors at q = 2.
    const ExtCtx E2 = build_extension(build_field(2));
    for (const auto& v : views_of_S(2))
        for (Xelem x1 = 0; x1 < 8; ++x1)
            for (Xelem x2 = 0; x2 < 8; ++x2)
                for (Xelem x3 = 0; x3 < 8; ++x3)
                    CHECK(structure_identity_check(E2, v, {x1, x2, x3}));

    // Sampled at q = 3, every triple in S.
    const ExtCtx E3 = build_extension(build_field(3));
    std::mt19937_64 rng(31);
    for (const auto& v : views_of_S(3))
        for (int i = 0; i < 60; ++i)
            CHECK(structure_identity_check(
                E3, v, {Xelem(rng() % 27), Xelem(rng() % 27), Xelem(rng() % 27)}));
}

TEST_CASE("classification counts") {
    const FieldCtx F2 = build_field(2);
    const auto v2 = views_of_S(2);
    REQUIRE(v2.size() == 2);
    for (const auto& v : v2) CHECK(classify(F2, v) == SemifieldClass::field);

    const FieldCtx F3 = build_field(3);
    int fields = 0, comm = 0, proper = 0;
    for (const auto& v : views_of_S(3)) {
        switch (classify(F3, v)) {
            case SemifieldClass::field: ++fields; break;
            case SemifieldClass::commutative_nonassociative: ++comm; break;
            case SemifieldClass::proper_noncommutative: ++proper; break;
        }
    }
    CHECK(fields == 8);
    CHECK(comm == 8);
    CHECK(proper == 96);

    // classify rejects non-MRD input.
    Mat3 z;
    z.at(2, 0) = 1;
    z.at(0, 2) = 1;
    const SemifieldView bad =
        make_view(make_triple(mat3_identity(), companion(MonicCubic{1, 1, 0}), z));
    CHECK_THROWS_AS(classify(F2, bad), std::invalid_argument);
}
