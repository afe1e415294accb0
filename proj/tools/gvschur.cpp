#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gvs/demazure.hpp"
#include "gvs/equivalence.hpp"
#include "gvs/gv.hpp"
#include "gvs/json_io.hpp"
#include "gvs/paths.hpp"
#include "gvs/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitResource = 3;

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ';') {
            if (cur.empty()) throw gvs::domain_error(std::string(what) + ": empty entry");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur.push_back(ch);
        } else if (ch != ' ') {
            throw gvs::domain_error(std::string(what) + ": unexpected character");
        }
    }
    if (cur.empty()) throw gvs::domain_error(std::string(what) + ": empty entry");
    out.push_back(std::stoi(cur));
    return out;
}

gvs::Shape parse_shape(const std::string& s) {
    std::vector<int> parts = parse_int_list(s, "shape");
    const int n = static_cast<int>(parts.size());
    return gvs::make_shape(n, std::move(parts));
}

int brute_cap() {
    if (const char* env = std::getenv("GV_MAX_N")) return std::atoi(env);
    return 6;
}

struct Invariant_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flagged Schur polynomials two ways: row-bound tableau sums and "
                 "Gessel-Viennot determinants, with nonpermutability analysis"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string shape_arg, tuple_arg, perm_arg, method_arg = "auto";
    bool strict = false;
    int max_n = 4, max_part = 3;

    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--shape", shape_arg, "partition, e.g. 2,1,0")->required();
    };
    auto add_tuple = [&](CLI::App* cmd) {
        cmd->add_option("--tuple", tuple_arg, "row bound tuple, e.g. \"3,2;3\"")->required();
    };

    CLI::App* cmd_classify = app.add_subcommand("classify", "class flags and critical list");
    add_shape(cmd_classify);
    add_tuple(cmd_classify);

    CLI::App* cmd_core = app.add_subcommand("core", "R-core of the tuple");
    add_shape(cmd_core);
    add_tuple(cmd_core);

    CLI::App* cmd_platform = app.add_subcommand("platform", "R-platform of the tuple");
    add_shape(cmd_platform);
    add_tuple(cmd_platform);

    CLI::App* cmd_schur = app.add_subcommand("schur", "row bound sum / flagged Schur polynomial");
    add_shape(cmd_schur);
    add_tuple(cmd_schur);
    cmd_schur->add_option("--method", method_arg, "tableau|det|auto (default auto)");
    cmd_schur->add_flag("--strict", strict, "refuse the core fallback for det");

    CLI::App* cmd_nonperm = app.add_subcommand("nonpermutable", "is the terminal pair nonpermutable");
    add_shape(cmd_nonperm);
    add_tuple(cmd_nonperm);
    cmd_nonperm->add_option("--method", method_arg, "predicate|brute|both (default both)");

    CLI::App* cmd_witness = app.add_subcommand("witness", "disjoint permuted n-path violating nonpermutability");
    add_shape(cmd_witness);
    add_tuple(cmd_witness);

    CLI::App* cmd_catalan = app.add_subcommand("catalan", "parabolic Catalan number");
    add_shape(cmd_catalan);

    CLI::App* cmd_classes = app.add_subcommand("classes", "equivalence classes of valid inputs");
    add_shape(cmd_classes);

    CLI::App* cmd_demazure = app.add_subcommand("demazure", "Demazure character of a lambda-permutation");
    add_shape(cmd_demazure);
    cmd_demazure->add_option("--perm", perm_arg, "one-line permutation, e.g. 2,1,3")->required();

    CLI::App* cmd_match = app.add_subcommand("demazure-match",
                                             "match gapless determinants against Demazure characters");
    add_shape(cmd_match);

    CLI::App* cmd_selftest = app.add_subcommand("selftest", "exhaustive invariant sweeps");
    cmd_selftest->add_option("--max-n", max_n, "tuple length cap (default 4)");
    cmd_selftest->add_option("--max-part", max_part, "largest part cap (default 3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_classify->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            gvs::RTuple beta = gvs::RTuple::parse(shape.ctx, tuple_arg);
            gvs::ClassFlags flags = gvs::classify(beta);
            if (as_json) {
                gvs::json out = gvs::to_json(flags);
                out["critical_list"] =
                    beta.is_upper() ? gvs::to_json(gvs::critical_list(beta)) : gvs::json();
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "R_lambda: {";
                for (size_t t = 0; t < shape.r_lambda.size(); ++t)
                    std::cout << (t ? "," : "") << shape.r_lambda[t];
                std::cout << "}\n";
                auto show = [](const char* name, bool v) {
                    std::cout << name << ": " << (v ? "yes" : "no") << "\n";
                };
                show("upper", flags.is_upper);
                show("flag", flags.is_flag);
                show("increasing", flags.is_r_increasing);
                show("gapless", flags.is_gapless);
                show("gapless core", flags.is_gapless_core);
                show("bounded by platform", flags.is_bounded_by_platform);
                show("ceiling flag", flags.is_ceiling_flag);
                show("flag critical list", flags.has_flag_critical_list);
                if (flags.is_upper)
                    std::cout << "critical list: " << gvs::critical_list(beta).text() << "\n";
            }
        } else if (cmd_core->parsed() || cmd_platform->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            gvs::RTuple beta = gvs::RTuple::parse(shape.ctx, tuple_arg);
            gvs::RTuple result = cmd_core->parsed() ? gvs::core(beta) : gvs::platform(beta);
            if (as_json)
                std::cout << gvs::to_json(result).dump() << "\n";
            else
                std::cout << result.text() << "\n";
        } else if (cmd_schur->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            gvs::RTuple beta = gvs::RTuple::parse(shape.ctx, tuple_arg);
            gvs::MultiPoly poly(shape.n);
            std::string method;
            std::uint64_t term_count = 0;
            if (method_arg == "tableau") {
                poly = gvs::row_bound_sum(shape, beta);
                method = "tableau";
            } else if (method_arg == "det") {
                gvs::SchurResult r = gvs::schur_via_det(shape, beta, strict);
                poly = r.poly;
                method = gvs::method_name(r.method);
                term_count = r.matrix_term_count;
            } else if (method_arg == "auto") {
                gvs::MultiPoly by_tableau = gvs::row_bound_sum(shape, beta);
                if (beta.is_upper() && gvs::classify(beta).is_gapless_core) {
                    gvs::SchurResult r = gvs::schur_via_det(shape, beta, strict);
                    if (r.poly != by_tableau)
                        throw Invariant_failure("determinant and tableau routes disagree");
                    poly = r.poly;
                    method = gvs::method_name(r.method);
                    term_count = r.matrix_term_count;
                } else {
                    poly = by_tableau;
                    method = "tableau";
                }
            } else {
                throw gvs::domain_error("schur: unknown method " + method_arg);
            }
            if (as_json) {
                gvs::json out{{"polynomial", gvs::to_json(poly)},
                              {"method", method},
                              {"matrix_term_count", term_count}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << poly.str() << "  (method " << method << ")\n";
            }
        } else if (cmd_nonperm->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            gvs::RTuple beta = gvs::RTuple::parse(shape.ctx, tuple_arg);
            if (method_arg == "auto") method_arg = "both";
            gvs::json out;
            if (method_arg == "predicate" || method_arg == "both") {
                gvs::ClassFlags flags = gvs::classify(beta);
                out["predicate"] = flags.is_gapless_core && flags.is_bounded_by_platform;
            }
            if (method_arg == "brute" || method_arg == "both")
                out["brute"] = gvs::is_nonpermutable_brute(shape, beta, brute_cap());
            if (out.empty()) throw gvs::domain_error("nonpermutable: unknown method " + method_arg);
            if (method_arg == "both" && out["predicate"] != out["brute"])
                throw Invariant_failure("predicate and brute force disagree on " + beta.text());
            if (as_json) {
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& [key, value] : out.items())
                    std::cout << key << ": " << (value.get<bool>() ? "true" : "false") << "\n";
            }
        } else if (cmd_witness->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            gvs::RTuple beta = gvs::RTuple::parse(shape.ctx, tuple_arg);
            gvs::NPath witness = gvs::construct_violation_witness(shape, beta);
            if (as_json) {
                std::cout << gvs::to_json(witness).dump() << "\n";
            } else {
                for (size_t m = 0; m < witness.components.size(); ++m) {
                    const gvs::Path& p = witness.components[m];
                    std::cout << "component " << m + 1 << ": east depths [";
                    for (size_t t = 0; t < p.east_depths.size(); ++t)
                        std::cout << (t ? "," : "") << p.east_depths[t];
                    std::cout << "] sink terminal " << witness.sink_assignment[m] << "\n";
                }
            }
        } else if (cmd_catalan->parsed()) {
            std::cout << gvs::parabolic_catalan(parse_shape(shape_arg)) << "\n";
        } else if (cmd_classes->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            for (const gvs::RTuple& gamma : gvs::gapless_tuples(shape)) {
                gvs::EquivClass cls = gvs::class_of(shape, gamma);
                if (as_json) {
                    std::cout << gvs::to_json(cls, shape).dump() << "\n";
                } else {
                    std::cout << "[" << cls.gamma.text() << ", " << cls.xi.text()
                              << "] size " << cls.interval_size() << " efficiency "
                              << gvs::efficiency_count(shape, cls.gamma) << "\n";
                }
            }
        } else if (cmd_demazure->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            gvs::Permutation pi(parse_int_list(perm_arg, "perm"));
            gvs::MultiPoly poly = gvs::demazure_char(shape, pi);
            if (as_json)
                std::cout << gvs::to_json(poly).dump() << "\n";
            else
                std::cout << poly.str() << "\n";
        } else if (cmd_match->parsed()) {
            gvs::Shape shape = parse_shape(shape_arg);
            gvs::MatchReport report = gvs::match_demazure_characters(shape);
            if (as_json) {
                std::cout << gvs::to_json(report).dump() << "\n";
            } else {
                for (const auto& entry : report.matched) {
                    std::cout << "gamma " << entry.gamma.text() << " -> ";
                    for (size_t t = 0; t < entry.matching_pis.size(); ++t)
                        std::cout << (t ? " " : "") << entry.matching_pis[t].text();
                    std::cout << "\n";
                }
                for (const auto& gamma : report.unmatched_gammas)
                    std::cout << "gamma " << gamma.text() << " UNMATCHED\n";
                std::cout << "matched " << report.matched.size() << " of " << report.catalan
                          << "\n";
            }
            if (!report.all_matched() || report.matched.size() != report.catalan)
                throw Invariant_failure("demazure-match: inclusion failed");
        } else if (cmd_selftest->parsed()) {
            bool all_pass = true;
            for (const gvs::SuiteResult& r : gvs::run_selftest(max_n, max_part)) {
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.pass) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                all_pass = all_pass && r.pass;
            }
            if (!all_pass) return kExitInvariant;
        }
    } catch (const gvs::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const gvs::consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const Invariant_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
