// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Default mode runs everything required; --long adds the q = 4, 5 brute-force
// confirmations of |S|. All enumeration runs single-threaded so the reported
// times are comparable with the stated budgets.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <mrd33/mrd33.hpp>

using namespace mrd33;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double millis,
            const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what << " ("
              << int(millis) << " ms)";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

template <class Fn>
void criterion(int number, const std::string& what, Fn&& fn) {
    const auto t0 = Clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(number, what, pass, ms, detail);
}

}  // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) long_run = true;

    // 1. Absolute counts with runtime budgets (exact arithmetic, zero tolerance).
    criterion(1, "absolute counts |T_hat| = 192 / 870912 / 4512000000 within budget",
              [&](std::string& detail) {
                  const auto timed_census = [&](long long q, const ExactCount& expect,
                                                double budget_ms, std::string& d) {
                      const auto t0 = Clock::now();
                      const CensusReport r = census_report(q);
                      const double ms =
                          std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                      d += "q=" + std::to_string(q) + " " + std::to_string(int(ms)) + "ms ";
                      return r.t_hat == expect && r.all_pass() && ms < budget_ms;
                  };
                  bool ok = timed_census(2, 192, 1000.0, detail);
                  ok = timed_census(3, 870912, 10000.0, detail) && ok;
                  ok = timed_census(5, ExactCount("4512000000"), 300000.0, detail) && ok;
                  return ok;
              });

    // 2. |S| three-way agreement as sets and counts.
    criterion(2,
              long_run ? "|S| three-way agreement, q = 2, 3, 4, 5 (long mode)"
                       : "|S| three-way agreement, q = 2, 3",
              [&](std::string& detail) {
                  std::vector<std::pair<long long, long long>> cases{{2, 2}, {3, 112}};
                  if (long_run) {
                      cases.emplace_back(4, 860);
                      cases.emplace_back(5, 3760);
                  }
                  bool ok = true;
                  for (const auto& [q, expect] : cases) {
                      const FieldCtx F = build_field(int(q));
                      const ExtCtx E = build_extension(F);
                      const auto brute = brute_force_S(F);
                      const auto parametric = enumerate_S_parametric(E);
                      const bool match = brute.triples == parametric &&
                                         ExactCount(brute.triples.size()) == count_S_formula(q) &&
                                         ExactCount(brute.triples.size()) == expect;
                      detail += "q=" + std::to_string(q) + ":" +
                                std::to_string(brute.triples.size()) + " ";
                      ok = ok && match;
                  }
                  return ok;
              });

    // 3. Direct subspace oracle at q = 2, independent of the reduction chain.
    criterion(3, "direct enumeration of all 788035 subspaces finds 192 MRD codes",
              [&](std::string& detail) {
                  const auto t0 = Clock::now();
                  const ExactCount found = count_That_subspaces(build_field(2));
                  const double ms =
                      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                  detail = found.str() + " in " + std::to_string(int(ms)) + "ms";
                  return found == 192 && ms < 120000.0;
              });

    // 4. Raw admissibility sweeps reproduce |S'| and |S''|.
    criterion(4, "admissibility sweeps: (|S'|,|S''|) = (0,12) and (312,48); S' empty iff q = 2",
              [&](std::string&) {
                  const auto sweep2 = admissibility_sweep(build_extension(build_field(2)));
                  const auto sweep3 = admissibility_sweep(build_extension(build_field(3)));
                  bool ok = sweep2.s_prime == 0 && sweep2.s_dblprime == 12;
                  ok = ok && sweep3.s_prime == 312 && sweep3.s_dblprime == 48;
                  for (const int q : {2, 3, 4, 5}) {
                      const auto sweep = admissibility_sweep(build_extension(build_field(q)));
                      ok = ok && (sweep.s_prime == 0) == (q == 2) &&
                           sweep.s_prime == count_formulas(q).s_prime;
                  }
                  return ok;
              });

    // 5. Group-theory suite: stabilizers, centralizers, orbit and set sizes.
    criterion(5, "stabilizer/centralizer sweeps (q = 2, 3) and orbit sizes (q = 2)",
              [&](std::string&) {
                  bool ok = true;
                  for (const int q : {2, 3}) {
                      const FieldCtx F = build_field(q);
                      for (const auto& f : irreducible_cubics(F))
                          ok = ok && verify_stabilizer(F, f);
                      ok = ok && verify_centralizer(F);
                  }
                  return ok && verify_orbit_sizes(build_field(2));
              });

    // 6. Parametrization identities.
    criterion(6, "determinant factorization, phi(k, k^(q^n)) = k^2, char poly transfer",
              [&](std::string&) {
                  bool ok = true;
                  for (const int q : {2, 3}) {
                      const ExtCtx E = build_extension(build_field(q));
                      const FieldCtx& F = E.base();

                      for (Xelem k = 0; k < E.size(); ++k) {
                          const Xelem k2 = E.mul(k, k);
                          ok = ok && phi(E, k, frobenius(E, k, 1)) == k2 &&
                               phi(E, k, frobenius(E, k, 2)) == k2;
                      }

                      std::vector<std::pair<Xelem, Xelem>> pairs;
                      for (Xelem k = 0; k < E.size(); ++k) {
                          if (E.in_base(k)) continue;
                          for (Xelem kh = 0; kh < E.size(); ++kh)
                              if (is_admissible(E, k, kh)) pairs.emplace_back(k, kh);
                      }
                      for (const auto& [k, kh] : pairs) {
                          const auto [s1, s2] = sigma_matrices(E, k, kh);
                          ok = ok && char_poly(F, s1) == min_poly(E, k).cubic &&
                               char_poly(F, s2) == min_poly(E, phi(E, k, kh)).cubic;
                      }

                      const auto check_point = [&](Xelem k, Xelem kh,
                                                   const std::array<Xelem, 3>& x) {
                          const auto [s1, s2] = sigma_matrices(E, k, kh);
                          XMat3 m = scale(E, x[0], embed(E, mat3_identity()));
                          m = add(E, m, scale(E, x[1], embed(E, s1)));
                          m = add(E, m, scale(E, x[2], embed(E, s2)));
                          const Xelem ph = phi(E, k, kh);
                          Xelem prod = E.embed(1);
                          for (int i = 0; i < 3; ++i) {
                              Xelem term = E.add(x[0], E.mul(frobenius(E, k, i), x[1]));
                              term = E.add(term, E.mul(frobenius(E, ph, i), x[2]));
                              prod = E.mul(prod, term);
                          }
                          return det(E, m) == prod;
                      };
                      if (q == 2) {
                          for (const auto& [k, kh] : pairs)
                              for (Xelem x1 = 0; x1 < 8; ++x1)
                                  for (Xelem x2 = 0; x2 < 8; ++x2)
                                      for (Xelem x3 = 0; x3 < 8; ++x3)
                                          ok = ok && check_point(k, kh, {x1, x2, x3});
                      } else {
                          std::mt19937_64 rng(1);
                          for (int i = 0; i < 10500; ++i) {
                              const auto& [k, kh] = pairs[rng() % pairs.size()];
                              ok = ok && check_point(k, kh,
                                                     {Xelem(rng() % E.size()),
                                                      Xelem(rng() % E.size()),
                                                      Xelem(rng() % E.size())});
                          }
                      }
                  }
                  return ok;
              });

    // 7. Semifield suite.
    criterion(7, "zero divisors iff not MRD, criteria vs operations, duals, classification",
              [&](std::string&) {
                  bool ok = true;

                  // Exhaustive pair sweep at q = 2.
                  {
                      const FieldCtx F = build_field(2);
                      const Mat3 id = mat3_identity();
                      Mat3 a2;
                      do {
                          Mat3 a3;
                          do {
                              if (product_zero_scan(F, id, a2, a3) ==
                                  is_mrd(F, make_triple(id, a2, a3))) {
                                  ok = false;
                                  break;
                              }
                          } while (detail::next_mat(F, a3));
                      } while (ok && detail::next_mat(F, a2));
                  }

                  for (const int q : {2, 3}) {
                      const FieldCtx F = build_field(q);
                      const ExtCtx E = build_extension(F);
                      const auto triples = enumerate_S_parametric(E);
                      ExactCount fields = 0, comm = 0;
                      for (const auto& t : triples) {
                          const SemifieldView v = make_view(t);
                          // has_zero_divisors / is_commutative / is_associative run
                          // their criterion-vs-operational cross-checks internally.
                          ok = ok && !has_zero_divisors(F, v);
                          const bool c = is_commutative(F, v);
                          const bool a = is_associative(F, v);
                          if (a) fields += 1;
                          if (c && !a) comm += 1;

                          const SemifieldView d = dual_triple(F, v);  // MRD + involution asserted
                          ok = ok && is_irreducible_cubic(F, d.f);
                          if (q == 2) {
                              for (Xelem x1 = 0; x1 < 8 && ok; ++x1)
                                  for (Xelem x2 = 0; x2 < 8 && ok; ++x2)
                                      for (Xelem x3 = 0; x3 < 8; ++x3)
                                          if (!structure_identity_check(E, v, {x1, x2, x3})) {
                                              ok = false;
                                              break;
                                          }
                          }
                      }
                      const ExactCount expected_fields =
                          div_exact(pow_int(q, 3) - q, 3, "acceptance");
                      ok = ok && fields == expected_fields;
                      ok = ok && comm == ((q % 2 == 1) ? expected_fields : ExactCount(0));
                  }
                  return ok;
              });

    // 8. Sparseness trend as stated: strict decrease over q = 2,3,4,5,7,8,9.
    // The q -> infinity limit itself is documented, not machine-checkable.
    criterion(8, "closed-form proportion strictly decreases over q = 2, 3, 4, 5, 7, 8, 9",
              [&](std::string& detail) {
                  const std::vector<long long> qs{2, 3, 4, 5, 7, 8, 9};
                  bool ok = true;
                  long long first_bad = 0;
                  for (std::size_t i = 1; i < qs.size(); ++i)
                      if (!(closed_form_proportion(qs[i]) < closed_form_proportion(qs[i - 1]))) {
                          ok = false;
                          if (first_bad == 0) first_bad = qs[i];
                      }
                  if (!ok && first_bad == 3) {
                      // Exact arithmetic shows the claim is false at the first
                      // step: proportion(2) = 192/788035 < proportion(3) =
                      // 217728/169617205, because S' is empty at q = 2 (there
                      // is no proper semifield of order 8). The proportion is
                      // strictly decreasing from q = 3 onward.
                      detail = "false at q=2->3: " + ratio_string(closed_form_proportion(2)) +
                               " < " + ratio_string(closed_form_proportion(3)) +
                               "; strict decrease does hold from q = 3 onward";
                  }
                  return ok;
              });

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criterion(s) FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
