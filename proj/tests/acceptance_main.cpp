// Acceptance suite: runs every acceptance criterion at its pinned range and
// tolerance (all checks are exact equality or rank identities; there are no
// numeric tolerances anywhere) and prints one pass/fail line per criterion.
//
// Usage: acceptance [path-to-mdz-cli]
// The CLI path is needed for the scan and determinism criteria; those are
// exercised end to end through the binary.

#include <mdz/verify.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace mdz;

namespace {

struct Criterion {
    int id = 0;
    std::string label;
    bool pass = false;
    long millis = 0;
    std::string detail;
};

long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int run_capture(const std::string& cmd, std::string& out) {
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return -1;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    return pclose(p);
}

std::string failing_items(const VerifyResult& r) {
    std::string s;
    for (const auto& it : r.items)
        if (!it.pass) s += (s.empty() ? "" : ", ") + it.name;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const int jobs = default_jobs();
    std::vector<Criterion> cs;

    {  // 1: closed forms of the dual derivation in depth two, N <= 30
        Criterion c{1, "depth-2 closed forms: dual derivation agrees on all sign pairs, "
                       "parities and degrees, N <= 30, < 60 s"};
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = verify_lemmas4x(30, jobs);
        c.millis = ms_since(t0);
        c.pass = r.all_pass() && c.millis < 60000;
        if (!r.all_pass()) c.detail = "failed: " + failing_items(r);
        cs.push_back(c);
    }

    {  // 2: exact sequence at even weights 8..40
        Criterion c{2, "exact sequence: composite zero, rank additivity, dimension oracle, "
                       "N = 8..40, < 120 s"};
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = verify_exact_sequence(8, 40, jobs);
        c.millis = ms_since(t0);
        c.pass = r.all_pass() && c.millis < 120000;
        if (!r.all_pass()) c.detail = "failed: " + failing_items(r);
        cs.push_back(c);
    }

    {  // 3: depth-two basis matrices at even weights 4..40
        Criterion c{3, "depth-2 basis: derivation matrix invertible, interior block matches "
                       "the entry formula and is column dominant, N = 4..40"};
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = verify_depth2_basis(4, 40, jobs);
        c.millis = ms_since(t0);
        c.pass = r.all_pass();
        if (!c.pass) c.detail = "failed: " + failing_items(r);
        cs.push_back(c);
    }

    {  // 4: spanning by odd tuples at even weights 6..30
        Criterion c{4, "span: last column of F E^{-1} is exactly zero, N = 6..30"};
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = verify_span(6, 30, jobs);
        c.millis = ms_since(t0);
        c.pass = r.all_pass();
        if (!c.pass) c.detail = "failed: " + failing_items(r);
        cs.push_back(c);
    }

    {  // 5: transfer maps at even weights 6..30
        Criterion c{5, "transfer: diagram commutes on every source monomial and the binomial "
                       "identity holds, N <= 30"};
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = verify_transfer(6, 30, jobs);
        c.millis = ms_since(t0);
        c.pass = r.all_pass();
        if (!c.pass) c.detail = "failed: " + failing_items(r);
        cs.push_back(c);
    }

    {  // 6: closed form equals brute force in depths 3 and 4
        Criterion c{6, "closed-form E equals the word-level derivation matrix, depth 3 "
                       "N = 5..21 and depth 4 N = 8..14, < 10 min"};
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r3 = verify_dualpath(3, 5, 21, jobs);
        VerifyResult r4 = verify_dualpath(4, 8, 14, jobs);
        c.millis = ms_since(t0);
        c.pass = r3.all_pass() && r4.all_pass() && c.millis < 600000;
        if (!(r3.all_pass() && r4.all_pass()))
            c.detail = "failed: " + failing_items(r3) + failing_items(r4);
        cs.push_back(c);
    }

    {  // 7: depth-three basis checks at odd weights 5..21
        Criterion c{7, "depth-3: E invertible, columns dominant, structural zero of the "
                       "mixed rows, N = 5..21"};
        auto t0 = std::chrono::steady_clock::now();
        VerifyResult r = verify_depth3_range(5, 21, jobs);
        c.millis = ms_since(t0);
        c.pass = r.all_pass();
        if (!c.pass) c.detail = "failed: " + failing_items(r);
        cs.push_back(c);
    }

    {  // 8: conjecture scans through the CLI
        Criterion c{8, "conjecture scan: depth 3 invertible through N = 25; depths 4 and 5 "
                       "complete within the order cap with well-formed findings"};
        auto t0 = std::chrono::steady_clock::now();
        bool ok = !cli.empty();
        if (!ok) {
            c.detail = "no CLI path given";
        } else {
            struct Spec {
                int r;
                long nmax;
                bool need_all_invertible;
            };
            for (const Spec s : {Spec{3, 25, true}, Spec{4, 18, false}, Spec{5, 13, false}}) {
                std::string out;
                int rc = run_capture(cli + " scan --depth " + std::to_string(s.r) +
                                         " --max-weight " + std::to_string(s.nmax) + " --json",
                                     out);
                if (rc != 0) {
                    ok = false;
                    c.detail = "scan exited nonzero";
                    break;
                }
                auto j = nlohmann::json::parse(out, nullptr, false);
                if (j.is_discarded() || !j.contains("findings")) {
                    ok = false;
                    c.detail = "scan emitted malformed JSON";
                    break;
                }
                long expect = 0;
                for (long N = s.r + 2; N <= s.nmax; N += 2) ++expect;
                if (static_cast<long>(j["findings"].size()) != expect) {
                    ok = false;
                    c.detail = "scan finding count mismatch";
                    break;
                }
                for (const auto& f : j["findings"]) {
                    bool well_formed = f.contains("r") && f.contains("N") &&
                                       f.contains("order") && f.contains("rank") &&
                                       f.contains("invertible") && f.contains("millis");
                    if (!well_formed) {
                        ok = false;
                        c.detail = "finding missing fields";
                        break;
                    }
                    if (s.need_all_invertible && !f["invertible"].get<bool>()) {
                        ok = false;
                        c.detail = "singular instance at depth 3, N=" +
                                   std::to_string(f["N"].get<long>());
                        break;
                    }
                    if (!f["invertible"].get<bool>() && !f.contains("singular_dump")) {
                        ok = false;
                        c.detail = "singular finding without a full dump";
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        c.millis = ms_since(t0);
        c.pass = ok;
        cs.push_back(c);
    }

    {  // 9: byte-identical verify reports across runs
        Criterion c{9, "determinism: identical JSON result bodies across repeated runs"};
        auto t0 = std::chrono::steady_clock::now();
        bool ok = !cli.empty();
        if (!ok) {
            c.detail = "no CLI path given";
        } else {
            for (const std::string args :
                 {std::string("verify span --weights 6..14 --json"),
                  std::string("verify depth2-basis --weights 4..12 --json --jobs 2")}) {
                std::string out1, out2;
                int rc1 = run_capture(cli + " " + args, out1);
                int rc2 = run_capture(cli + " " + args, out2);
                if (rc1 != 0 || rc2 != 0) {
                    ok = false;
                    c.detail = "verify exited nonzero";
                    break;
                }
                auto j1 = nlohmann::json::parse(out1, nullptr, false);
                auto j2 = nlohmann::json::parse(out2, nullptr, false);
                if (j1.is_discarded() || j2.is_discarded()) {
                    ok = false;
                    c.detail = "malformed JSON";
                    break;
                }
                j1.erase("millis");
                j2.erase("millis");
                if (j1.dump() != j2.dump()) {
                    ok = false;
                    c.detail = "result bodies differ for: " + args;
                    break;
                }
            }
        }
        c.millis = ms_since(t0);
        c.pass = ok;
        cs.push_back(c);
    }

    bool all = true;
    for (const auto& c : cs) {
        all = all && c.pass;
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label
                  << " (" << c.millis << " ms)";
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed"
                      : "ACCEPTANCE: some criteria failed")
              << "\n";
    return all ? 0 : 1;
}
