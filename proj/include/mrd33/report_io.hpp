#pragma once

// JSON / CSV / table serialization for census reports, verification suites,
// triple exports and the inspect command. Big integers are serialized as
// decimal strings (the q = 5 counts already exceed 2^32). Measured times are
// emitted only when requested, so default JSON/CSV output is byte-identical
// across runs and worker counts.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "gf.hpp"
#include "semifield.hpp"

namespace mrd33 {

using Json = nlohmann::ordered_json;

inline std::string poly_string(const FieldCtx& F, const MonicCubic& f) {
    // Standard form x^3 + u2 x^2 + u1 x + u0 with u_i = -coefficient.
    const Felem u2 = F.neg(f.c), u1 = F.neg(f.b), u0 = F.neg(f.a);
    std::string s = "x^3";
    const auto term = [&](Felem coeff, const char* power) {
        if (coeff == 0) return;
        s += " + ";
        if (coeff != 1 || power[0] == '\0') s += std::to_string(int(coeff));
        s += power;
    };
    term(u2, "x^2");
    term(u1, "x");
    term(u0, "");
    return s;
}

inline std::string ratio_string(const ExactRatio& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline Json checks_json(const std::vector<CheckResult>& checks, bool with_timings) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"pass", c.pass}};
        if (with_timings) j["millis"] = c.millis;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline Json report_json(const CensusReport& r, bool with_timings = false) {
    Json counts;
    counts["S"] = r.s_formula.str();
    counts["S_prime"] = r.s_prime_formula.str();
    counts["S_dblprime"] = r.s_dblprime_formula.str();
    if (r.s_brute) counts["S_brute"] = r.s_brute->str();
    if (r.s_parametric) counts["S_parametric"] = r.s_parametric->str();
    if (r.y_hat_brute) counts["Y_hat"] = r.y_hat_brute->str();
    if (r.x_hat_direct) counts["X_hat"] = r.x_hat_direct->str();
    if (r.v_hat_direct) counts["V_hat"] = r.v_hat_direct->str();
    if (r.t_hat_subspace) counts["T_hat_subspace"] = r.t_hat_subspace->str();
    counts["T_total"] = r.t_total.str();
    counts["T_hat"] = r.t_hat.str();

    Json classes;
    for (const auto& [name, count] : r.class_counts) classes[name] = count.str();

    return Json{{"q", r.q},
                {"counts", std::move(counts)},
                {"proportion",
                 Json{{"num", boost::multiprecision::numerator(r.proportion).str()},
                      {"den", boost::multiprecision::denominator(r.proportion).str()}}},
                {"classes", std::move(classes)},
                {"checks", checks_json(r.checks, with_timings)}};
}

inline std::string report_csv_header() {
    return "q,S,S_prime,S_dblprime,T_total,T_hat,proportion_num,proportion_den,"
           "class_field,class_commutative_nonassociative,class_proper_noncommutative,"
           "checks_passed,checks_total";
}

inline std::string report_csv_row(const CensusReport& r) {
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
    std::ostringstream os;
    os << r.q << ',' << r.s_formula.str() << ',' << r.s_prime_formula.str() << ','
       << r.s_dblprime_formula.str() << ',' << r.t_total.str() << ',' << r.t_hat.str() << ','
       << boost::multiprecision::numerator(r.proportion).str() << ','
       << boost::multiprecision::denominator(r.proportion).str() << ','
       << r.class_counts.at("field").str() << ','
       << r.class_counts.at("commutative_nonassociative").str() << ','
       << r.class_counts.at("proper_noncommutative").str() << ',' << passed << ','
       << r.checks.size();
    return os.str();
}

inline std::string checks_table(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << "  (" << std::fixed
           << std::setprecision(1) << c.millis << " ms)";
        if (!c.note.empty()) os << "  -- " << c.note;
        os << '\n';
    }
    return os.str();
}

inline std::string report_table(const CensusReport& r) {
    std::ostringstream os;
    os << "census q = " << r.q << '\n';
    os << "  |S|  (formula)              = " << r.s_formula.str() << '\n';
    if (r.s_brute) os << "  |S|  (brute force)          = " << r.s_brute->str() << '\n';
    if (r.s_parametric) os << "  |S|  (parametric)           = " << r.s_parametric->str() << '\n';
    os << "  |S'| / |S''|                = " << r.s_prime_formula.str() << " / "
       << r.s_dblprime_formula.str() << '\n';
    if (r.y_hat_brute) os << "  |Y_hat|                     = " << r.y_hat_brute->str() << '\n';
    if (r.x_hat_direct) os << "  |X_hat| (direct)            = " << r.x_hat_direct->str() << '\n';
    if (r.v_hat_direct) os << "  |V_hat| (direct)            = " << r.v_hat_direct->str() << '\n';
    if (r.t_hat_subspace)
        os << "  |T_hat| (subspace oracle)   = " << r.t_hat_subspace->str() << '\n';
    os << "  |T|   = " << r.t_total.str() << '\n';
    os << "  |T_hat| = " << r.t_hat.str() << '\n';
    os << "  proportion = " << ratio_string(r.proportion) << '\n';
    os << "  classes: field = " << r.class_counts.at("field").str()
       << ", commutative non-associative = "
       << r.class_counts.at("commutative_nonassociative").str()
       << ", proper non-commutative = " << r.class_counts.at("proper_noncommutative").str() << '\n';
    os << checks_table(r.checks);
    return os.str();
}

// --- triple export (enumerate) ---------------------------------------------

struct TripleRow {
    MonicCubic f;
    Vec3 z{}, zp{};
    SemifieldClass cls{};
};

inline std::vector<TripleRow> triple_rows(const FieldCtx& F, const std::vector<MrdTriple>& triples) {
    std::vector<TripleRow> rows;
    rows.reserve(triples.size());
    for (const auto& t : triples) {
        const SemifieldView v = make_view(t);
        rows.push_back(TripleRow{v.f, v.z, v.zp, classify(F, v)});
    }
    return rows;
}

inline std::string field_header_comment(const FieldCtx& F) {
    std::ostringstream os;
    os << "# q=" << F.q() << " (elements are integer indices";
    if (!F.prime_field()) {
        os << "; base-p digits encode F_" << F.characteristic() << "[x] modulo coefficients";
        for (std::size_t i = 0; i < F.modulus().size(); ++i)
            os << (i ? "," : " ") << int(F.modulus()[i]);
    }
    os << ")";
    return os.str();
}

// One row per triple: f coefficients a,b,c, then the free entries of Z row by
// row (z12,z13,z22,z23,z32,z33; the first column is always (0,0,1)^T), then
// the classification.
inline std::string triples_csv(const FieldCtx& F, const std::vector<TripleRow>& rows) {
    std::ostringstream os;
    os << field_header_comment(F) << '\n';
    os << "a,b,c,z12,z13,z22,z23,z32,z33,class\n";
    for (const auto& r : rows) {
        os << int(r.f.a) << ',' << int(r.f.b) << ',' << int(r.f.c);
        for (int i = 0; i < 3; ++i)
            os << ',' << int(r.z[std::size_t(i)]) << ',' << int(r.zp[std::size_t(i)]);
        os << ',' << to_string(r.cls) << '\n';
    }
    return os.str();
}

inline Json triples_json(const FieldCtx& F, const std::vector<TripleRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        arr.push_back(Json{{"f", Json{{"a", int(r.f.a)}, {"b", int(r.f.b)}, {"c", int(r.f.c)}}},
                           {"f_poly", poly_string(F, r.f)},
                           {"z_col", Json::array({int(r.z[0]), int(r.z[1]), int(r.z[2])})},
                           {"z_prime_col", Json::array({int(r.zp[0]), int(r.zp[1]), int(r.zp[2])})},
                           {"class", to_string(r.cls)}});
    }
    return Json{{"q", F.q()}, {"count", rows.size()}, {"triples", std::move(arr)}};
}

inline std::string triples_table(const FieldCtx& F, const std::vector<TripleRow>& rows) {
    std::ostringstream os;
    os << "|S| = " << rows.size() << " normalized MRD triples over F_" << F.q() << '\n';
    for (const auto& r : rows) {
        os << "  f = " << std::left << std::setw(24) << poly_string(F, r.f) << " Z cols ("
           << int(r.z[0]) << ',' << int(r.z[1]) << ',' << int(r.z[2]) << ")  (" << int(r.zp[0])
           << ',' << int(r.zp[1]) << ',' << int(r.zp[2]) << ")  " << to_string(r.cls) << '\n';
    }
    return os.str();
}

// --- irreducibles -----------------------------------------------------------

inline Json irreducibles_json(const FieldCtx& F, const std::vector<MonicCubic>& cubics) {
    Json arr = Json::array();
    for (const auto& f : cubics)
        arr.push_back(Json{{"a", int(f.a)}, {"b", int(f.b)}, {"c", int(f.c)},
                           {"poly", poly_string(F, f)}});
    return Json{{"q", F.q()}, {"count", cubics.size()}, {"cubics", std::move(arr)}};
}

inline std::string irreducibles_csv(const FieldCtx& F, const std::vector<MonicCubic>& cubics) {
    std::ostringstream os;
    os << field_header_comment(F) << '\n';
    os << "a,b,c,poly\n";
    for (const auto& f : cubics)
        os << int(f.a) << ',' << int(f.b) << ',' << int(f.c) << ',' << poly_string(F, f) << '\n';
    return os.str();
}

inline std::string irreducibles_table(const FieldCtx& F, const std::vector<MonicCubic>& cubics) {
    std::ostringstream os;
    os << cubics.size() << " monic irreducible cubics over F_" << F.q() << '\n';
    for (const auto& f : cubics)
        os << "  " << poly_string(F, f) << "   (a,b,c) = (" << int(f.a) << ',' << int(f.b) << ','
           << int(f.c) << ")\n";
    return os.str();
}

// --- inspect ----------------------------------------------------------------

struct InspectResult {
    long long q = 0;
    MonicCubic f;
    Mat3 z;
    int span = 0;
    bool mrd = false;
    int rank_dist = 0;  // meaningful when span == 3
    bool classified = false;
    SemifieldClass cls{};
    bool self_dual = false;
    MonicCubic dual_f;
    Vec3 dual_z{}, dual_zp{};
};

inline InspectResult inspect_triple(const FieldCtx& F, const MonicCubic& f, const Mat3& z) {
    InspectResult r;
    r.q = F.q();
    r.f = f;
    r.z = z;
    const MrdTriple t = make_triple(mat3_identity(), companion(f), z);
    r.span = span_dim(F, t);
    if (r.span == 3) r.rank_dist = rank_distance(F, t);
    r.mrd = is_mrd(F, t);
    if (r.mrd) {
        const SemifieldView v = make_view(t);
        r.cls = classify(F, v);
        r.classified = true;
        const SemifieldView d = dual_triple(F, v);
        r.self_dual = (d.f == v.f && d.z == v.z && d.zp == v.zp);
        r.dual_f = d.f;
        r.dual_z = d.z;
        r.dual_zp = d.zp;
    }
    return r;
}

inline Json inspect_json(const FieldCtx& F, const InspectResult& r) {
    Json j{{"q", r.q},
           {"f", Json{{"a", int(r.f.a)}, {"b", int(r.f.b)}, {"c", int(r.f.c)}}},
           {"f_poly", poly_string(F, r.f)},
           {"span_dim", r.span},
           {"mrd", r.mrd}};
    if (r.span == 3) j["rank_distance"] = r.rank_dist;
    if (r.classified) {
        j["class"] = to_string(r.cls);
        j["self_dual"] = r.self_dual;
        j["dual"] = Json{
            {"g", Json{{"a", int(r.dual_f.a)}, {"b", int(r.dual_f.b)}, {"c", int(r.dual_f.c)}}},
            {"g_poly", poly_string(F, r.dual_f)},
            {"z_col", Json::array({int(r.dual_z[0]), int(r.dual_z[1]), int(r.dual_z[2])})},
            {"z_prime_col",
             Json::array({int(r.dual_zp[0]), int(r.dual_zp[1]), int(r.dual_zp[2])})}};
    }
    return j;
}

inline std::string inspect_table(const FieldCtx& F, const InspectResult& r) {
    std::ostringstream os;
    os << "q: " << r.q << '\n';
    os << "f: " << poly_string(F, r.f) << "   (a,b,c) = (" << int(r.f.a) << ',' << int(r.f.b)
       << ',' << int(r.f.c) << ")\n";
    os << "span dimension: " << r.span << '\n';
    if (r.span == 3) os << "rank distance: " << r.rank_dist << '\n';
    os << "MRD: " << (r.mrd ? "yes" : "no") << '\n';
    if (r.classified) {
        os << "class: " << to_string(r.cls) << '\n';
        if (r.self_dual)
            os << "dual: self-dual\n";
        else
            os << "dual: g = " << poly_string(F, r.dual_f) << ", Z_hat cols (" << int(r.dual_z[0])
               << ',' << int(r.dual_z[1]) << ',' << int(r.dual_z[2]) << ") (" << int(r.dual_zp[0])
               << ',' << int(r.dual_zp[1]) << ',' << int(r.dual_zp[2]) << ")\n";
    }
    return os.str();
}

// --- formula ----------------------------------------------------------------

inline Json formula_json(long long q) {
    const auto counts = count_formulas(q);
    const ExactRatio prop = closed_form_proportion(q);
    return Json{{"q", q},
                {"counts", Json{{"S", counts.s.str()},
                                {"S_prime", counts.s_prime.str()},
                                {"S_dblprime", counts.s_dblprime.str()},
                                {"T_total", gaussian_binomial(9, 3, q).str()},
                                {"T_hat", t_hat_count(q).str()}}},
                {"proportion", Json{{"num", boost::multiprecision::numerator(prop).str()},
                                    {"den", boost::multiprecision::denominator(prop).str()}}}};
}

inline std::string formula_table(long long q) {
    const auto counts = count_formulas(q);
    std::ostringstream os;
    os << "q = " << q << '\n';
    os << "  |S|        = " << counts.s.str() << '\n';
    os << "  |S'|       = " << counts.s_prime.str() << '\n';
    os << "  |S''|      = " << counts.s_dblprime.str() << '\n';
    os << "  |T|        = " << gaussian_binomial(9, 3, q).str() << '\n';
    os << "  |T_hat|    = " << t_hat_count(q).str() << '\n';
    os << "  proportion = " << ratio_string(closed_form_proportion(q)) << '\n';
    return os.str();
}

inline std::string formula_csv_header() {
    return "q,S,S_prime,S_dblprime,T_total,T_hat,proportion_num,proportion_den";
}

inline std::string formula_csv_row(long long q) {
    const auto counts = count_formulas(q);
    const ExactRatio prop = closed_form_proportion(q);
    std::ostringstream os;
    os << q << ',' << counts.s.str() << ',' << counts.s_prime.str() << ','
       << counts.s_dblprime.str() << ',' << gaussian_binomial(9, 3, q).str() << ','
       << t_hat_count(q).str() << ',' << boost::multiprecision::numerator(prop).str() << ','
       << boost::multiprecision::denominator(prop).str();
    return os.str();
}

}  // namespace mrd33
