#include <catch2/catch_amalgamated.hpp>

#include <mrd33/census.hpp>
#include <mrd33/mat3.hpp>

#include <random>

using namespace mrd33;

TEST_CASE("companion matrix layout") {
    // f = x^3: nilpotent companion with ones on the subdiagonal.
    const Mat3 n = companion(MonicCubic{0, 0, 0});
    CHECK(n.at(1, 0) == 1);
    CHECK(n.at(2, 1) == 1);
    CHECK(n.at(0, 2) == 0);
    const FieldCtx F = build_field(2);
    CHECK(rank(F, n) == 2);
    CHECK(mul(F, mul(F, n, n), n) == Mat3{});

    // f = x^3 + x + 1 over F_2: rows (0,0,1), (1,0,1), (0,1,0).
    const Mat3 c = companion(MonicCubic{1, 1, 0});
    CHECK(c == Mat3{{0, 0, 1, 1, 0, 1, 0, 1, 0}});
    CHECK(det(F, c) == 1);
    CHECK(rank(F, c) == 3);
}

TEST_CASE("char_poly round-trips through companion") {
    for (const int q : {2, 3}) {
        const FieldCtx F = build_field(q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    const MonicCubic f{Felem(a), Felem(b), Felem(c)};
                    CHECK(char_poly(F, companion(f)) == f);
                }
    }
}

TEST_CASE("char_poly of the zero matrix and the identity") {
    const FieldCtx F = build_field(3);
    CHECK(char_poly(F, Mat3{}) == MonicCubic{0, 0, 0});
    // det(xI - I) = (x-1)^3 = x^3 - 3x^2 + 3x - 1 = x^3 + 2 over F_3.
    CHECK(char_poly(F, mat3_identity()) == MonicCubic{1, 0, 0});
}

TEST_CASE("determinant is multiplicative and detects rank 3, exhaustive at q = 2") {
    const FieldCtx F = build_field(2);
    std::vector<Mat3> all;
    Mat3 m;
    do {
        all.push_back(m);
    } while (detail::next_mat(F, m));
    REQUIRE(all.size() == 512);

    for (const auto& a : all) CHECK((rank(F, a) == 3) == (det(F, a) != 0));
    for (const auto& a : all)
        for (const auto& b : all) CHECK(det(F, mul(F, a, b)) == F.mul(det(F, a), det(F, b)));
}

TEST_CASE("rank examples") {
    const FieldCtx F = build_field(2);
    CHECK(rank(F, mat3_identity()) == 3);
    CHECK(rank(F, Mat3{}) == 0);
    Mat3 single;
    single.at(1, 2) = 1;
    CHECK(rank(F, single) == 1);
}

TEST_CASE("conjugation identities") {
    const FieldCtx F = build_field(3);
    const Mat3 a = companion(MonicCubic{1, 2, 0});
    CHECK(conjugate(F, mat3_identity(), a) == a);

    std::mt19937_64 rng(7);
    int tried = 0;
    while (tried < 25) {
        Mat3 s;
        for (auto& e : s.e) e = Felem(rng() % 3);
        if (det(F, s) == 0) continue;
        ++tried;
        const Mat3 conj = conjugate(F, s, a);
        CHECK(char_poly(F, conj) == char_poly(F, a));
        CHECK(rank(F, conj) == rank(F, a));
        CHECK(conjugate(F, inverse(F, s), conj) == a);
    }

    CHECK_THROWS_AS(conjugate(F, Mat3{}, a), std::invalid_argument);
}

TEST_CASE("similarity invariance of char_poly over all of GL_3(2)") {
    const FieldCtx F = build_field(2);
    const Mat3 a = companion(MonicCubic{1, 1, 0});
    const Mat3 b = companion(MonicCubic{0, 1, 1});
    for (const auto& s : detail::gl3_elements(F)) {
        CHECK(char_poly(F, conjugate(F, s, a)) == char_poly(F, a));
        CHECK(char_poly(F, conjugate(F, s, b)) == char_poly(F, b));
    }
}

TEST_CASE("inverse agrees with identity product across small fields") {
    for (const int q : {2, 3, 4, 5}) {
        const FieldCtx F = build_field(q);
        std::mt19937_64 rng(11);
        int tried = 0;
        while (tried < 40) {
            Mat3 s;
            for (auto& e : s.e) e = Felem(rng() % std::uint64_t(q));
            if (det(F, s) == 0) continue;
            ++tried;
            CHECK(mul(F, s, inverse(F, s)) == mat3_identity());
            CHECK(mul(F, inverse(F, s), s) == mat3_identity());
        }
    }
}

TEST_CASE("extension-entry matrices: embedding and determinant agree") {
    const ExtCtx E = build_extension(build_field(3));
    const FieldCtx& F = E.base();
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        Mat3 m;
        for (auto& e : m.e) e = Felem(rng() % 3);
        CHECK(det(E, embed(E, m)) == E.embed(det(F, m)));
    }
}
