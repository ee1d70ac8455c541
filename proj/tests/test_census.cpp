#include <catch2/catch_amalgamated.hpp>

#include <mrd33/census.hpp>

using namespace mrd33;

TEST_CASE("brute_force_S counts and Y_hat relation") {
    const FieldCtx F2 = build_field(2);
    const auto r2 = brute_force_S(F2);
    CHECK(r2.triples.size() == 2);
    CHECK(r2.y_hat == 2);  // (q-1)|S| = 1 * 2

    const FieldCtx F3 = build_field(3);
    const auto r3 = brute_force_S(F3);
    CHECK(r3.triples.size() == 112);
    CHECK(r3.y_hat == 224);

    for (const auto& t : r3.triples) {
        CHECK(t.a3.at(0, 0) == 0);
        CHECK(t.a3.at(1, 0) == 0);
        CHECK(t.a3.at(2, 0) == 1);
        CHECK(is_mrd(F3, t));
    }
}

TEST_CASE("brute_force_S is independent of the worker count") {
    const FieldCtx F = build_field(3);
    const auto one = brute_force_S(F, 1);
    const auto four = brute_force_S(F, 4);
    CHECK(one.triples == four.triples);
    CHECK(one.y_hat == four.y_hat);
}

TEST_CASE("V_hat at q = 2: 192 MRD pairs, partition accounts for everything") {
    const FieldCtx F = build_field(2);
    CHECK(brute_force_Vhat(F) == 192);
    CHECK(brute_force_Vhat(F, 3) == 192);

    const auto p = brute_force_Vhat_partition(F);
    CHECK(p.pairs_total == 262144);  // 512^2
    CHECK(p.by_distance[3] == 192);
    // dim < 3 happens for 512^2 - 510*508 pairs.
    CHECK(p.span_deficient == ExactCount(262144) - ExactCount(510) * 508);
    CHECK(p.span_deficient + p.by_distance[1] + p.by_distance[2] + p.by_distance[3] ==
          p.pairs_total);
}

TEST_CASE("reduction chain at q = 2 and q = 3") {
    const FieldCtx F2 = build_field(2);
    const ExactCount x2 = direct_Xhat_count(F2);
    CHECK(x2 == 8);                       // q^2 (q-1) |S| = 4 * 1 * 2
    CHECK(x2 * 6 * 4 == 192);             // |V_hat| = |X_hat| (q^3-q)(q^3-q^2)
    CHECK(brute_force_Vhat(F2) == 192);   // matches T_hat as well
    CHECK(t_hat_count(2) == 192);

    const FieldCtx F3 = build_field(3);
    const ExactCount x3 = direct_Xhat_count(F3);
    CHECK(x3 == ExactCount(9) * 2 * 112);  // 2016
    CHECK(x3 * 24 * 18 == 870912);         // chain value equals |T_hat_3|
    CHECK(t_hat_count(3) == 870912);
}

TEST_CASE("direct subspace oracle at q = 2 finds exactly 192 MRD codes") {
    const FieldCtx F = build_field(2);
    CHECK(count_That_subspaces(F) == 192);
    CHECK(count_That_subspaces(F, 3) == 192);
}

TEST_CASE("stabilizer of companion matrices") {
    const FieldCtx F2 = build_field(2);
    for (const auto& f : irreducible_cubics(F2)) CHECK(verify_stabilizer(F2, f));

    const FieldCtx F3 = build_field(3);
    const auto cubics = irreducible_cubics(F3);
    REQUIRE(cubics.size() == 8);
    for (const auto& f : cubics) CHECK(verify_stabilizer(F3, f));

    CHECK_THROWS_AS(verify_stabilizer(F2, MonicCubic{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("stabilizer size is q^3 - 1 via the brute GL sweep") {
    const FieldCtx F = build_field(2);
    const MonicCubic f{1, 1, 0};
    const Mat3 cf = companion(f);
    int size = 0;
    for (const auto& s : detail::gl3_elements(F))
        if (detail::commutes(F, s, cf)) ++size;
    CHECK(size == 7);
}

TEST_CASE("centralizer triviality outside the field span") {
    CHECK(verify_centralizer(build_field(2)));
    CHECK(verify_centralizer(build_field(3)));
}

TEST_CASE("orbit sizes and set cardinalities at q = 2") {
    CHECK(verify_orbit_sizes(build_field(2)));
    CHECK_THROWS_AS(verify_orbit_sizes(build_field(3)), std::invalid_argument);
}

TEST_CASE("admissibility sweep matches the closed forms") {
    for (const int q : {2, 3, 4, 5}) {
        const ExtCtx E = build_extension(build_field(q));
        const auto sweep = admissibility_sweep(E);
        const auto formulas = count_formulas(q);
        CHECK(sweep.s_prime == formulas.s_prime);
        CHECK(sweep.s_dblprime == formulas.s_dblprime);
        CHECK(sweep.admissible == formulas.s_prime + formulas.s_dblprime);
        CHECK((sweep.s_prime == 0) == (q == 2));
    }
}

TEST_CASE("census report q = 2 contains the exact values") {
    const CensusReport r = census_report(2);
    CHECK(r.t_hat == 192);
    CHECK(r.t_total == 788035);
    CHECK(r.proportion == ExactRatio(192, 788035));
    CHECK(r.s_formula == 2);
    REQUIRE(r.s_brute.has_value());
    REQUIRE(r.s_parametric.has_value());
    CHECK(*r.s_brute == 2);
    CHECK(*r.s_parametric == 2);
    REQUIRE(r.v_hat_direct.has_value());
    CHECK(*r.v_hat_direct == 192);
    CHECK(r.class_counts.at("field") == 2);
    CHECK(r.class_counts.at("commutative_nonassociative") == 0);
    CHECK(r.all_pass());
}

TEST_CASE("census report q = 3") {
    const CensusReport r = census_report(3);
    CHECK(r.t_hat == 870912);
    CHECK(r.s_formula == 112);
    CHECK(r.class_counts.at("field") == 8);
    CHECK(r.class_counts.at("commutative_nonassociative") == 8);
    CHECK(r.class_counts.at("proper_noncommutative") == 96);
    CHECK(r.all_pass());
}

TEST_CASE("census report q = 2 in long mode runs the subspace oracle") {
    // The same oracles at q = 3 (~4*10^8 pairs, ~7*10^8 subspaces) are
    // exercised by `census --q 3 --long` and the long acceptance run.
    CensusOptions opt;
    opt.long_run = true;
    opt.workers = 2;
    const CensusReport r = census_report(2, opt);
    REQUIRE(r.t_hat_subspace.has_value());
    CHECK(*r.t_hat_subspace == 192);
    CHECK(r.all_pass());
}

TEST_CASE("census report in formula-only mode works for large q") {
    CensusOptions opt;
    opt.brute = false;
    opt.parametric = false;
    const CensusReport r = census_report(128, opt);
    CHECK(r.all_pass());
    CHECK(r.s_formula == count_S_formula(128));

    const CensusReport big = census_report(1021, opt);  // prime near 2^10
    CHECK(big.all_pass());
}

TEST_CASE("census report rejects invalid q and oversized modes") {
    CHECK_THROWS_AS(census_report(6), std::invalid_argument);
    CHECK_THROWS_AS(census_report(1), std::invalid_argument);
    CensusOptions brute_big;
    brute_big.brute = true;
    CHECK_THROWS_AS(census_report(11, brute_big), std::invalid_argument);
}

TEST_CASE("t_hat equals the V_hat chain algebraically for many q") {
    for (const long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const ExactCount q3 = pow_int(q, 3);
        CHECK(t_hat_count(q) ==
              ExactCount(q) * q * (q - 1) * (q3 - q) * (q3 - q * q) * count_S_formula(q));
    }
}
