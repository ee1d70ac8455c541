// mrd33 command-line tool: censuses, verification suites, enumeration
// exports, irreducible-cubic listings, single-triple inspection and
// closed-form counts. Exit codes: 0 all requested checks pass, 1 a
// verification failed, 2 usage or I/O error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mrd33/mrd33.hpp>

namespace {

constexpr long long kFormulaMaxQ = 1'000'000'000;

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << path << '\n';
        return 2;
    }
    f << content;
    return f.good() ? 0 : 2;
}

bool validate_q_list(const std::vector<long long>& qs, long long max_q, const char* what) {
    if (qs.empty()) {
        std::cerr << "error: " << what << " requires at least one --q value\n";
        return false;
    }
    for (const long long q : qs) {
        if (q < 2 || q > max_q || !mrd33::is_prime_power(q)) {
            std::cerr << "error: q = " << q << " is not a prime power in [2, " << max_q << "]\n";
            return false;
        }
    }
    return true;
}

std::vector<mrd33::Felem> parse_elems(const std::string& text, char sep, int q, bool& ok) {
    std::vector<mrd33::Felem> out;
    std::stringstream ss(text);
    std::string item;
    ok = true;
    while (std::getline(ss, item, sep)) {
        try {
            const int v = std::stoi(item);
            if (v < 0 || v >= q) {
                ok = false;
                return out;
            }
            out.push_back(mrd33::Felem(v));
        } catch (...) {
            ok = false;
            return out;
        }
    }
    return out;
}

struct CommonOpts {
    std::vector<long long> qs;
    std::string out_path;
    std::string format = "table";
    bool long_run = false;
    bool timings = false;
    int workers = 1;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_q = true) {
    if (with_q)
        cmd->add_option("--q", o.qs, "field sizes (prime powers)")->delimiter(',');
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_flag("--long", o.long_run, "enable long-running checks");
    cmd->add_flag("--timings", o.timings, "include measured times in json/csv output");
    cmd->add_option("--workers", o.workers, "worker thread count")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "seed for sampled checks");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact census of [3x3;3] MRD rank-metric codes over small finite fields"};
    app.require_subcommand(1);

    CommonOpts census_o, enum_o, verify_o, irr_o, inspect_o, formula_o;
    std::vector<std::string> census_modes;
    std::string suite_name = "all";
    long long inspect_q = 0;
    std::string inspect_f, inspect_z;

    auto* census = app.add_subcommand("census", "full per-q census report with cross-checks");
    add_common(census, census_o);
    census->add_option("--mode", census_modes, "enumeration modes (brute, parametric, formula)")
        ->delimiter(',')
        ->check(CLI::IsMember({"brute", "parametric", "formula"}));

    auto* enumerate = app.add_subcommand("enumerate", "emit all triples of S with classification");
    add_common(enumerate, enum_o);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    add_common(verify, verify_o);
    verify->add_option("--suite", suite_name, "suite name or 'all'");

    auto* irr = app.add_subcommand("irreducibles", "list the monic irreducible cubics");
    add_common(irr, irr_o);

    auto* inspect = app.add_subcommand("inspect", "inspect one normalized triple (I, C_f, Z)");
    add_common(inspect, inspect_o, false);
    inspect->add_option("--q", inspect_q, "field size (prime power <= 64)")->required();
    inspect->add_option("--f", inspect_f, "cubic coefficients a,b,c of f = x^3-cx^2-bx-a")
        ->required();
    inspect->add_option("--z", inspect_z, "Z matrix rows 'z11,z12,z13;z21,z22,z23;z31,z32,z33'")
        ->required();

    auto* formula = app.add_subcommand("formula", "closed-form counts and proportions");
    add_common(formula, formula_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    using namespace mrd33;

    try {
        if (census->parsed()) {
            if (!validate_q_list(census_o.qs, kFormulaMaxQ, "census")) return 2;
            CensusOptions opt;
            opt.long_run = census_o.long_run;
            opt.workers = census_o.workers;
            if (!census_modes.empty()) {
                opt.brute = std::count(census_modes.begin(), census_modes.end(), "brute") > 0;
                opt.parametric =
                    std::count(census_modes.begin(), census_modes.end(), "parametric") > 0;
            }
            std::vector<CensusReport> reports;
            for (const long long q : census_o.qs) reports.push_back(census_report(q, opt));

            std::string text;
            if (census_o.format == "json") {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(report_json(r, census_o.timings));
                text = arr.dump(2) + "\n";
            } else if (census_o.format == "csv") {
                std::ostringstream os;
                os << report_csv_header() << '\n';
                for (const auto& r : reports) os << report_csv_row(r) << '\n';
                text = os.str();
            } else {
                std::ostringstream os;
                for (const auto& r : reports) os << report_table(r);
                text = os.str();
            }
            const int rc = write_output(census_o.out_path, text);
            if (rc != 0) return rc;
            for (const auto& r : reports)
                if (!r.all_pass()) return 1;
            return 0;
        }

        if (enumerate->parsed()) {
            if (!validate_q_list(enum_o.qs, 16, "enumerate")) return 2;
            std::ostringstream table_os, csv_os;
            Json arr = Json::array();
            for (const long long q : enum_o.qs) {
                const FieldCtx F = build_field(int(q));
                const ExtCtx E = build_extension(F);
                const auto rows = triple_rows(F, enumerate_S_parametric(E, enum_o.workers));
                if (enum_o.format == "json")
                    arr.push_back(triples_json(F, rows));
                else if (enum_o.format == "csv")
                    csv_os << triples_csv(F, rows);
                else
                    table_os << triples_table(F, rows);
            }
            const std::string text = enum_o.format == "json"  ? arr.dump(2) + "\n"
                                     : enum_o.format == "csv" ? csv_os.str()
                                                              : table_os.str();
            return write_output(enum_o.out_path, text);
        }

        if (verify->parsed()) {
            if (!validate_q_list(verify_o.qs, 64, "verify")) return 2;
            const bool all = suite_name == "all";
            if (!all && std::find(suite_names().begin(), suite_names().end(), suite_name) ==
                            suite_names().end()) {
                std::cerr << "error: unknown suite '" << suite_name << "'\n";
                return 2;
            }
            SuiteOptions opt;
            opt.long_run = verify_o.long_run;
            opt.workers = verify_o.workers;
            opt.seed = verify_o.seed;

            bool all_pass = true;
            Json jroot = Json::array();
            std::ostringstream table_os, csv_os;
            csv_os << "q,suite,check,pass" << (verify_o.timings ? ",millis" : "") << '\n';

            for (const long long q : verify_o.qs) {
                std::vector<std::string> selected;
                if (all) {
                    for (const auto& name : suite_names())
                        if (suite_applicable(name, q)) selected.push_back(name);
                } else {
                    if (!suite_applicable(suite_name, q)) {
                        std::cerr << "error: suite '" << suite_name << "' does not support q = "
                                  << q << '\n';
                        return 2;
                    }
                    selected.push_back(suite_name);
                }
                Json jsuites = Json::array();
                for (const auto& name : selected) {
                    const auto checks = run_suite(name, q, opt);
                    for (const auto& c : checks) {
                        all_pass = all_pass && c.pass;
                        csv_os << q << ',' << name << ',' << c.name << ','
                               << (c.pass ? "true" : "false");
                        if (verify_o.timings) csv_os << ',' << c.millis;
                        csv_os << '\n';
                    }
                    jsuites.push_back(
                        Json{{"suite", name}, {"checks", checks_json(checks, verify_o.timings)}});
                    table_os << "suite " << name << " (q = " << q << ")\n" << checks_table(checks);
                }
                jroot.push_back(Json{{"q", q}, {"suites", std::move(jsuites)}});
            }

            const std::string text = verify_o.format == "json"  ? jroot.dump(2) + "\n"
                                     : verify_o.format == "csv" ? csv_os.str()
                                                                : table_os.str();
            const int rc = write_output(verify_o.out_path, text);
            if (rc != 0) return rc;
            return all_pass ? 0 : 1;
        }

        if (irr->parsed()) {
            if (!validate_q_list(irr_o.qs, 64, "irreducibles")) return 2;
            Json arr = Json::array();
            std::ostringstream os;
            for (const long long q : irr_o.qs) {
                const FieldCtx F = build_field(int(q));
                const auto cubics = irreducible_cubics(F);
                if (irr_o.format == "json")
                    arr.push_back(irreducibles_json(F, cubics));
                else if (irr_o.format == "csv")
                    os << irreducibles_csv(F, cubics);
                else
                    os << irreducibles_table(F, cubics);
            }
            const std::string text = irr_o.format == "json" ? arr.dump(2) + "\n" : os.str();
            return write_output(irr_o.out_path, text);
        }

        if (inspect->parsed()) {
            if (inspect_q < 2 || inspect_q > 64 || !is_prime_power(inspect_q)) {
                std::cerr << "error: q = " << inspect_q << " is not a prime power in [2, 64]\n";
                return 2;
            }
            const FieldCtx F = build_field(int(inspect_q));
            bool ok = true;
            const auto fc = parse_elems(inspect_f, ',', F.q(), ok);
            if (!ok || fc.size() != 3) {
                std::cerr << "error: --f expects three field elements 'a,b,c'\n";
                return 2;
            }
            Mat3 z;
            {
                std::stringstream ss(inspect_z);
                std::string row;
                int r = 0;
                while (std::getline(ss, row, ';')) {
                    const auto entries = parse_elems(row, ',', F.q(), ok);
                    if (!ok || entries.size() != 3 || r >= 3) {
                        ok = false;
                        break;
                    }
                    for (int j = 0; j < 3; ++j) z.at(r, j) = entries[std::size_t(j)];
                    ++r;
                }
                if (!ok || r != 3) {
                    std::cerr << "error: --z expects nine field elements as three ';'-separated "
                                 "rows\n";
                    return 2;
                }
            }
            if (z.at(0, 0) != 0 || z.at(1, 0) != 0 || z.at(2, 0) != 1) {
                std::cerr << "error: Z must be normalized with first column (0,0,1)^T\n";
                return 2;
            }
            const MonicCubic f{fc[0], fc[1], fc[2]};
            const InspectResult r = inspect_triple(F, f, z);
            const std::string text = inspect_o.format == "json"
                                         ? inspect_json(F, r).dump(2) + "\n"
                                         : inspect_table(F, r);
            return write_output(inspect_o.out_path, text);
        }

        if (formula->parsed()) {
            if (!validate_q_list(formula_o.qs, kFormulaMaxQ, "formula")) return 2;
            // Informational: the proportion rises from q = 2 to q = 3 (no
            // proper semifields of order 8) and decreases from q = 3 on.
            bool decreasing = true;
            for (std::size_t i = 1; i < formula_o.qs.size(); ++i)
                decreasing = decreasing && closed_form_proportion(formula_o.qs[i]) <
                                               closed_form_proportion(formula_o.qs[i - 1]);
            std::string text;
            if (formula_o.format == "json") {
                Json arr = Json::array();
                for (const long long q : formula_o.qs) arr.push_back(formula_json(q));
                Json root{{"results", std::move(arr)}};
                if (formula_o.qs.size() > 1) root["proportion_strictly_decreasing"] = decreasing;
                text = root.dump(2) + "\n";
            } else if (formula_o.format == "csv") {
                std::ostringstream os;
                os << formula_csv_header() << '\n';
                for (const long long q : formula_o.qs) os << formula_csv_row(q) << '\n';
                text = os.str();
            } else {
                std::ostringstream os;
                for (const long long q : formula_o.qs) os << formula_table(q);
                if (formula_o.qs.size() > 1)
                    os << "proportion strictly decreasing along the given list: "
                       << (decreasing ? "yes" : "no") << '\n';
                text = os.str();
            }
            return write_output(formula_o.out_path, text);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
