// mdz: exact verification toolkit for depth-graded motivic multiple zeta
// values relative to mu_2.
//
// Subcommands:
//   verify <target>   run a verification suite and report per-weight results
//   scan              scan the higher-depth invertibility conjecture
//   export <object>   write a matrix or basis in exact rational text form
//
// Exit codes: 0 all checks passed (scan findings are not failures),
// 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <mdz/verify.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace mdz;

struct Range {
    long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("--weights expects A..B or a single weight");
    }
}

nlohmann::json matrix_json(const RatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for depth-graded motivic multiple zeta values"
                 " relative to mu_2"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool json_out = false;
    int jobs = default_jobs();
    unsigned long seed = 0;
    app.add_flag("--json", json_out, "emit the full JSON report instead of the table");
    app.add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
    app.add_option("--seed", seed,
                   "seed for randomized property suites; the fixed suites ignore it");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string target;
    verify->add_option("target", target, "suite to run")
        ->required()
        ->check(CLI::IsMember({"lemmas-4x", "exact-sequence", "depth2-basis", "span",
                               "transfer", "depth3"}));
    std::string weights_s;
    long max_weight = -1;
    verify->add_option("--weights", weights_s, "weight range A..B");
    verify->add_option("--max-weight", max_weight, "upper weight bound");

    auto* scan = app.add_subcommand("scan", "scan the invertibility conjecture");
    int scan_depth = 3;
    long scan_max = 17;
    long order_cap = 200;
    if (const char* cap = std::getenv("MDZ_ORDER_CAP")) order_cap = std::atol(cap);
    scan->add_option("--depth", scan_depth, "depth r >= 3")->required();
    scan->add_option("--max-weight", scan_max, "largest weight to scan")->required();
    scan->add_option("--order-cap", order_cap,
                     "skip instances with matrix order above this cap");

    auto* exp = app.add_subcommand("export", "write a matrix or basis");
    std::string object;
    exp->add_option("object", object, "what to export")
        ->required()
        ->check(CLI::IsMember(
            {"matrix-E", "matrix-F", "matrix-Mtilde", "period-basis", "D-matrix"}));
    long exp_weight = 0;
    int exp_depth = 2;
    std::string format = "csv";
    std::string output;
    exp->add_option("--weight", exp_weight, "weight")->required();
    exp->add_option("--depth", exp_depth, "depth (matrix-E only)");
    exp->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("--output", output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            Range r;
            if (!weights_s.empty()) {
                r = parse_range(weights_s);
            } else if (max_weight > 0) {
                if (target == "lemmas-4x") r = {2, max_weight};
                else if (target == "exact-sequence") r = {8, max_weight};
                else if (target == "depth2-basis") r = {4, max_weight};
                else if (target == "span") r = {6, max_weight};
                else if (target == "transfer") r = {6, max_weight};
                else r = {5, max_weight};
            } else {
                if (target == "lemmas-4x") r = {2, 30};
                else if (target == "exact-sequence") r = {8, 40};
                else if (target == "depth2-basis") r = {4, 40};
                else if (target == "span") r = {6, 30};
                else if (target == "transfer") r = {6, 30};
                else r = {5, 21};
            }

            auto t0 = std::chrono::steady_clock::now();
            VerifyResult res;
            if (target == "lemmas-4x") res = verify_lemmas4x(r.hi, jobs);
            else if (target == "exact-sequence") res = verify_exact_sequence(r.lo, r.hi, jobs);
            else if (target == "depth2-basis") res = verify_depth2_basis(r.lo, r.hi, jobs);
            else if (target == "span") res = verify_span(r.lo, r.hi, jobs);
            else if (target == "transfer") res = verify_transfer(r.lo, r.hi, jobs);
            else res = verify_depth3_range(r.lo, r.hi, jobs);
            auto t1 = std::chrono::steady_clock::now();

            if (json_out) {
                nlohmann::json j = verify_to_json(res);
                j["millis"] =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << verify_table(res);
            }
            return res.all_pass() ? 0 : 1;
        }

        if (*scan) {
            auto t0 = std::chrono::steady_clock::now();
            ScanReport rep = scan_conjecture(scan_depth, scan_max,
                                             static_cast<std::size_t>(order_cap), jobs);
            auto t1 = std::chrono::steady_clock::now();
            if (json_out) {
                nlohmann::json findings = nlohmann::json::array();
                for (const auto& f : rep.findings) {
                    nlohmann::json jf = {{"r", f.r},         {"N", f.N},
                                         {"order", f.order}, {"rank", f.rank},
                                         {"invertible", f.invertible}, {"millis", f.millis}};
                    if (!f.singular_dump.empty()) jf["singular_dump"] = f.singular_dump;
                    findings.push_back(std::move(jf));
                }
                nlohmann::json j = {{"command", "scan"},
                                    {"params",
                                     {{"depth", rep.r},
                                      {"max_weight", rep.n_max},
                                      {"order_cap", rep.order_cap}}},
                                    {"findings", findings}};
                if (rep.stopped_at) j["stopped_at"] = *rep.stopped_at;
                j["millis"] =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& f : rep.findings) {
                    nlohmann::json jf = {{"r", f.r},         {"N", f.N},
                                         {"order", f.order}, {"rank", f.rank},
                                         {"invertible", f.invertible}, {"millis", f.millis}};
                    if (!f.singular_dump.empty()) jf["singular_dump"] = f.singular_dump;
                    std::cout << jf.dump() << "\n";
                    if (!f.invertible)
                        std::cerr << "finding: singular instance at r=" << f.r << " N=" << f.N
                                  << "\n";
                }
                if (rep.stopped_at)
                    std::cerr << "stopped at weight " << *rep.stopped_at
                              << " (order cap " << rep.order_cap << ")\n";
            }
            return 0;
        }

        // export
        {
            GrBasis cache;
            RatMatrix m;
            bool is_period_basis = false;
            PeriodSpace ps;
            if (object == "matrix-E") {
                if (exp_depth == 2) m = depth2_E(exp_weight, cache);
                else m = build_E(exp_weight, exp_depth).matrix;
            } else if (object == "matrix-F") {
                m = depth2_F(exp_weight, cache);
            } else if (object == "matrix-Mtilde") {
                m = depth2_Mtilde(exp_weight, cache);
            } else if (object == "D-matrix") {
                ps = wk_plus0(exp_weight);
                m = D_matrix(exp_weight, ps);
            } else {
                is_period_basis = true;
                ps = wk_plus0(exp_weight);
            }

            if (is_period_basis) {
                if (format == "json") {
                    nlohmann::json basis = nlohmann::json::array();
                    for (const auto& p : ps.basis) {
                        nlohmann::json coeffs = nlohmann::json::array();
                        for (const auto& c : p.a) coeffs.push_back(rat_str(c));
                        basis.push_back(std::move(coeffs));
                    }
                    nlohmann::json j = {{"object", "period-basis"},
                                        {"weight", exp_weight},
                                        {"dim", ps.basis.size()},
                                        {"coeffs_low_to_high_x", basis}};
                    write_output(output, j.dump(2) + "\n");
                } else {
                    std::string text;
                    for (const auto& p : ps.basis) {
                        for (std::size_t i = 0; i < p.a.size(); ++i) {
                            if (i) text += ',';
                            text += rat_str(p.a[i]);
                        }
                        text += '\n';
                    }
                    write_output(output, text);
                }
            } else if (format == "json") {
                nlohmann::json j = {{"object", object},
                                    {"weight", exp_weight},
                                    {"rows", m.rows()},
                                    {"cols", m.cols()},
                                    {"entries", matrix_json(m)}};
                if (object == "matrix-E") j["depth"] = exp_depth;
                write_output(output, j.dump(2) + "\n");
            } else {
                write_output(output, m.to_csv());
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
