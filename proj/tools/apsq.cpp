#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "apsq/expbound.hpp"
#include "apsq/harness.hpp"
#include "apsq/oracle.hpp"
#include "apsq/solver_d2.hpp"
#include "apsq/solver_d6.hpp"

namespace {

using namespace apsq;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 64;

void print_solutions(std::ostream& os, const std::vector<Solution>& sols) {
    for (const auto& s : sols) os << "  (" << s.x << ", " << s.y << ", " << s.n << ")\n";
}

int cmd_solve(int d, long long r, const std::string& nsel_text, const std::string& emit,
              const Options& opts) {
    ExponentSelector sel = ExponentSelector::parse(nsel_text);
    Verdict cls = classify(d, sel.mode == ExponentSelector::Mode::Single ? std::max(sel.n, 2) : 2);
    auto print_verdict_json = [&](const Verdict& v) {
        nlohmann::json o{{"d", d}, {"r", r}, {"verdict", verdict_kind_name(v.kind)},
                         {"reason", v.reason}};
        if (!v.detail.empty()) o["detail"] = v.detail;
        std::cout << nlohmann::json::array({o}).dump(2) << "\n";
    };
    if (cls.kind == VerdictKind::Unsupported || cls.kind == VerdictKind::Deferred) {
        if (emit == "json")
            print_verdict_json(cls);
        else
            std::cout << verdict_kind_name(cls.kind) << ": " << cls.detail << "\n";
        return kExitUnsupported;
    }
    if (d != 2 && d != 6) {
        if (emit == "json")
            print_verdict_json(cls);
        else
            std::cout << "Eliminated by " << cls.reason << " (" << cls.detail << ")\n";
        return kExitOk;
    }

    if (emit == "json") {
        SweepResult res = sweep(d, r, r, sel, opts);
        nlohmann::json arr = nlohmann::json::array();
        auto push_verdict = [&](const Verdict& v) {
            nlohmann::json o{{"d", d}, {"r", r}, {"verdict", verdict_kind_name(v.kind)},
                             {"reason", v.reason}};
            if (!v.detail.empty()) o["detail"] = v.detail;
            arr.push_back(o);
        };
        if (d == 2 && sel.mode != ExponentSelector::Mode::Primes) push_verdict(solve_n2(r));
        if (d == 6 && std::gcd(r, 6LL) != 1)
            push_verdict(Verdict{VerdictKind::NoSolutions, "imprimitive",
                                 "gcd(r,6) > 1 forces a common factor", {}, nullptr});
        for (auto& row : nlohmann::json::parse(emit_json(res))) arr.push_back(row);
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }

    using M = ExponentSelector::Mode;
    if (d == 2) {
        if (sel.mode == M::Single && sel.n == 2) {
            Verdict v = solve_n2(r);
            if (v.kind == VerdictKind::NoSolutions) {
                std::cout << "NoSolutions [" << v.reason << "]: " << v.detail << "\n";
            } else {
                std::cout << "Family: " << v.family->description << "\n";
                std::cout << "members for |k| <= " << opts.family_k << ":\n";
                print_solutions(std::cout, family_members(*v.family, -opts.family_k, opts.family_k));
            }
            return kExitOk;
        }
        if (sel.mode == M::Single) {
            std::vector<Solution> sols =
                sel.n == 4 ? solve_n4(r, opts.thue_bound)
                : (sel.n % 2 == 1 && is_prime(BigInt(sel.n)))
                    ? solve_odd_prime(r, sel.n)
                    : composite_exponent_solutions(2, r, sel.n, opts);
            std::cout << sols.size() << " solution(s) for d=2, r=" << r << ", n=" << sel.n << ":\n";
            print_solutions(std::cout, sols);
            return kExitOk;
        }
        if (sel.mode == M::Primes) {
            SweepResult res = sweep(2, r, r, sel, opts);
            ExponentSet es = exponent_set_d2(r);
            std::cout << "candidate exponents:";
            for (long long p : es.primes) std::cout << " " << p;
            std::cout << "\n" << res.rows.size() << " solution(s):\n";
            print_solutions(std::cout, res.rows);
            return kExitOk;
        }
        D2Bundle b = solve_all_d2(r, D2Options{opts.thue_bound, opts.family_k});
        if (b.n2.kind == VerdictKind::NoSolutions) {
            std::cout << "n=2: NoSolutions [" << b.n2.reason << "]: " << b.n2.detail << "\n";
        } else {
            std::cout << "n=2: Family: " << b.n2.family->description << "\n";
            std::cout << "n=2 members for |k| <= " << opts.family_k << ":\n";
            print_solutions(std::cout, b.n2_members);
        }
        std::cout << "n=4 (Thue bound " << opts.thue_bound << "): " << b.n4.size()
                  << " solution(s)\n";
        print_solutions(std::cout, b.n4);
        std::cout << "candidate odd prime exponents:";
        for (long long p : b.exponents.primes) std::cout << " " << p;
        std::cout << "\n";
        for (const auto& [n, sols] : b.odd_prime) {
            std::cout << "n=" << n << ": " << sols.size() << " solution(s)\n";
            print_solutions(std::cout, sols);
        }
        if (!b.lifts.empty()) {
            std::cout << "perfect-power lifts:\n";
            print_solutions(std::cout, b.lifts);
        }
        return kExitOk;
    }

    // d == 6
    if (std::gcd(r, 6LL) != 1) {
        std::cout << "NoSolutions [imprimitive]: gcd(r,6) > 1 forces a common factor\n";
        return kExitOk;
    }
    if (sel.mode == M::Single) {
        if (sel.n % 2 == 0) {
            Verdict v = classify(6, sel.n);
            std::cout << "NoSolutions [" << v.reason << "]: " << v.detail << "\n";
            return kExitOk;
        }
        std::vector<Solution> sols = is_prime(BigInt(sel.n))
                                         ? solve_odd_prime_d6(r, sel.n)
                                         : composite_exponent_solutions(6, r, sel.n, opts);
        std::cout << sols.size() << " solution(s) for d=6, r=" << r << ", n=" << sel.n << ":\n";
        print_solutions(std::cout, sols);
        return kExitOk;
    }
    D6Bundle b = solve_all_d6(r);
    std::cout << "candidate odd prime exponents:";
    for (long long p : b.exponents.primes) std::cout << " " << p;
    std::cout << "\n";
    for (const auto& [n, sols] : b.odd_prime) {
        if (sols.empty()) continue;
        std::cout << "n=" << n << ": " << sols.size() << " solution(s)\n";
        print_solutions(std::cout, sols);
    }
    if (b.verdict.solutions.empty()) std::cout << "no solutions in the candidate exponent set\n";
    if (sel.mode == M::All && !b.lifts.empty()) {
        std::cout << "perfect-power lifts:\n";
        print_solutions(std::cout, b.lifts);
    }
    return kExitOk;
}

int cmd_sweep(int d, long long r_min, long long r_max, const std::string& nsel_text,
              const std::string& emit, const std::string& out_path, const Options& opts) {
    if (d < 2 || d > 10) {
        std::cerr << "error: only 2 <= d <= 10 is supported\n";
        return kExitUnsupported;
    }
    ExponentSelector sel = ExponentSelector::parse(nsel_text);
    SweepResult res = sweep(d, r_min, r_max, sel, opts);
    std::string text;
    if (emit == "csv")
        text = emit_csv(res);
    else if (emit == "json")
        text = emit_json(res);
    else if (emit == "latex")
        text = emit_latex(res);
    else
        throw CLI::ValidationError("--emit must be csv, json, or latex");
    for (const auto& note : res.notes) std::cerr << "note: " << note << "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitMismatch;
        }
        out << text;
    }
    return kExitOk;
}

int cmd_verify(int d, const std::string& ref_path, const std::string& nsel_text, long long r_max,
               const Options& opts) {
    if (d < 2 || d > 10) {
        std::cerr << "error: only 2 <= d <= 10 is supported\n";
        return kExitUnsupported;
    }
    ReferenceTable ref = load_reference(ref_path, /*strict=*/false);
    for (const auto& w : ref.warnings) std::cerr << "warning: " << w << "\n";
    std::string nsel = nsel_text;
    if (nsel.empty()) nsel = (d == 2) ? "4" : "primes";
    ExponentSelector sel = ExponentSelector::parse(nsel);
    SweepResult res = sweep(d, 1, r_max, sel, opts);
    DiffReport rep = verify_diff(res.rows, ref.rows);
    std::cout << "matched: " << rep.matched.size() << "\n";
    std::cout << "missing from solver output: " << rep.missing.size() << "\n";
    print_solutions(std::cout, rep.missing);
    std::cout << "extra in solver output: " << rep.extra.size() << "\n";
    print_solutions(std::cout, rep.extra);
    std::cout << (rep.clean() ? "VERIFIED" : "MISMATCH") << "\n";
    return rep.clean() ? kExitOk : kExitMismatch;
}

int cmd_oracle(int d, long long r, int n_max, long long y_max) {
    if (d < 2 || d > 10) {
        std::cerr << "error: only 2 <= d <= 10 is supported\n";
        return kExitUnsupported;
    }
    std::vector<int> ns;
    for (int n = 2; n <= n_max; ++n) ns.push_back(n);
    std::vector<Solution> sols = oracle_enumerate(d, r, ns, y_max);
    std::cout << sols.size() << " solution(s) for d=" << d << ", r=" << r << ", n<=" << n_max
              << ", y<=" << y_max << ":\n";
    print_solutions(std::cout, sols);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for perfect powers that are sums of squares of an arithmetic progression"};
    app.require_subcommand(1);

    Options opts = options_from_env();

    int d = 2;
    long long r = 1, r_min = 1, r_max = 10000, y_max = opts.oracle_y_max;
    int n_max = 13;
    std::string nsel = "all", emit = "text", out_path, ref_path;

    auto add_tuning = [&opts](CLI::App* cmd) {
        cmd->add_option("--thue-bound", opts.thue_bound, "quartic search bound")
            ->envname("APSQ_THUE_BOUND");
        cmd->add_option("--family-k", opts.family_k, "unit exponent range for n=2 families")
            ->envname("APSQ_FAMILY_K");
        cmd->add_option("--jobs", opts.jobs, "worker threads (0 = all cores)")
            ->envname("APSQ_JOBS");
    };

    CLI::App* solve = app.add_subcommand("solve", "classify and solve one (d, r)");
    solve->add_option("--d", d, "progression length")->required();
    solve->add_option("--r", r, "common difference")->required();
    solve->add_option("--n", nsel, "exponent: all | primes | number")->capture_default_str();
    solve->add_option("--emit", emit, "text | json")->capture_default_str();
    add_tuning(solve);

    CLI::App* sweepc = app.add_subcommand("sweep", "solve a range of r, emit a table");
    sweepc->add_option("--d", d, "progression length")->required();
    sweepc->add_option("--r-min", r_min, "first r")->capture_default_str();
    sweepc->add_option("--r-max", r_max, "last r")->capture_default_str();
    std::string sweep_nsel = "primes";
    sweepc->add_option("--n", sweep_nsel, "exponent: all | primes | number")->capture_default_str();
    std::string sweep_emit = "csv";
    sweepc->add_option("--emit", sweep_emit, "csv | json | latex")->capture_default_str();
    sweepc->add_option("--out", out_path, "output file (default stdout)");
    add_tuning(sweepc);

    CLI::App* verify = app.add_subcommand("verify", "diff a sweep against a reference table");
    verify->add_option("--d", d, "progression length")->required();
    verify->add_option("--ref", ref_path, "reference CSV path")->required();
    std::string verify_nsel;
    verify->add_option("--n", verify_nsel, "exponent selector (default: 4 for d=2, primes for d=6)");
    verify->add_option("--r-max", r_max, "sweep range upper end")->capture_default_str();
    add_tuning(verify);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force enumeration for small windows");
    oracle->add_option("--d", d, "progression length")->required();
    oracle->add_option("--r", r, "common difference")->required();
    oracle->add_option("--n-max", n_max, "largest exponent")->capture_default_str();
    oracle->add_option("--y-max", y_max, "largest y")->envname("APSQ_ORACLE_YMAX")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(d, r, nsel, emit, opts);
        if (sweepc->parsed()) return cmd_sweep(d, r_min, r_max, sweep_nsel, sweep_emit, out_path, opts);
        if (verify->parsed()) return cmd_verify(d, ref_path, verify_nsel, r_max, opts);
        if (oracle->parsed()) return cmd_oracle(d, r, n_max, y_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
