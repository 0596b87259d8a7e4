#include "apsq/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "apsq/expbound.hpp"
#include "apsq/solver_d2.hpp"
#include "apsq/solver_d6.hpp"

namespace apsq {

namespace {

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("invalid integer in environment variable ") + name);
    }
}

int effective_jobs(const Options& opts) {
    if (opts.jobs > 0) return opts.jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

Options options_from_env() {
    Options o;
    o.thue_bound = env_ll("APSQ_THUE_BOUND", o.thue_bound);
    o.family_k = env_ll("APSQ_FAMILY_K", o.family_k);
    o.oracle_y_max = env_ll("APSQ_ORACLE_YMAX", o.oracle_y_max);
    o.jobs = static_cast<int>(env_ll("APSQ_JOBS", o.jobs));
    return o;
}

ExponentSelector ExponentSelector::parse(const std::string& text) {
    ExponentSelector sel;
    if (text == "all") {
        sel.mode = Mode::All;
    } else if (text == "primes") {
        sel.mode = Mode::Primes;
    } else {
        sel.mode = Mode::Single;
        try {
            sel.n = std::stoi(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("exponent selector must be 'all', 'primes', or an integer");
        }
        if (sel.n < 2) throw std::invalid_argument("exponent must be >= 2");
    }
    return sel;
}

std::string ExponentSelector::str() const {
    switch (mode) {
        case Mode::All: return "all";
        case Mode::Primes: return "primes";
        case Mode::Single: return std::to_string(n);
    }
    return "?";
}

std::vector<Solution> composite_exponent_solutions(int d, long long r, int n, const Options& opts) {
    // A solution at exponent n = p*m is a prime-level solution whose y is
    // a perfect m-th power. Any odd prime factor of n gives a finite
    // prime-level list; pure powers of two fall back to the n = 4 table.
    int p = 0;
    for (int q = 3; q <= n; q += 2)
        if (n % q == 0 && is_prime(BigInt(q))) {
            p = q;
            break;
        }
    std::vector<Solution> base_sols;
    int m = 0;
    if (p != 0) {
        m = n / p;
        base_sols = (d == 2) ? solve_odd_prime(r, p) : solve_odd_prime_d6(r, p);
    } else {
        if (d != 2 || n % 4 != 0)
            return {};  // even exponents for d = 6 are settled by the sieve
        m = n / 4;
        base_sols = solve_n4(r, opts.thue_bound);
    }
    std::vector<Solution> out;
    for (const auto& s : base_sols) {
        if (m == 1) {
            out.push_back(s);
            continue;
        }
        BigInt root;
        if (s.y == 1) {
            root = 1;
        } else {
            int exact = mpz_root(root.get_mpz_t(), s.y.get_mpz_t(), m);
            if (exact == 0) continue;
        }
        Solution t = s;
        t.y = root;
        t.n = n;
        if (verify_solution(t)) out.push_back(std::move(t));
    }
    sort_dedupe(out);
    return out;
}

namespace {

// Everything produced for one r under a selector; pure, so the sweep can
// fan r values out to worker threads.
std::vector<Solution> rows_for_r(int d, long long r, const ExponentSelector& sel,
                                 const Options& opts) {
    std::vector<Solution> rows;
    auto add = [&rows](const std::vector<Solution>& sols) {
        rows.insert(rows.end(), sols.begin(), sols.end());
    };
    if (d == 2) {
        using M = ExponentSelector::Mode;
        if (sel.mode == M::Single && sel.n == 2) {
            Verdict v = solve_n2(r);
            if (v.family) add(family_members(*v.family, -opts.family_k, opts.family_k));
        } else if (sel.mode == M::Single && sel.n == 4) {
            add(solve_n4(r, opts.thue_bound));
        } else if (sel.mode == M::Single) {
            if (is_prime(BigInt(sel.n)) && sel.n % 2 == 1)
                add(solve_odd_prime(r, sel.n));
            else
                add(composite_exponent_solutions(2, r, sel.n, opts));
        } else if (sel.mode == M::Primes) {
            if (r % 2 == 1)
                for (long long p : exponent_set_d2(r).primes)
                    add(solve_odd_prime(r, static_cast<int>(p)));
        } else {  // All
            D2Options d2o{opts.thue_bound, opts.family_k};
            D2Bundle b = solve_all_d2(r, d2o);
            add(b.n2_members);
            add(b.n4);
            for (const auto& [n, sols] : b.odd_prime) {
                (void)n;
                add(sols);
            }
            add(b.lifts);
        }
    } else if (d == 6) {
        if (std::gcd(r, 6LL) != 1) return rows;
        using M = ExponentSelector::Mode;
        if (sel.mode == M::Single) {
            if (sel.n % 2 == 0) return rows;  // settled by the sieve
            if (is_prime(BigInt(sel.n)))
                add(solve_odd_prime_d6(r, sel.n));
            else
                add(composite_exponent_solutions(6, r, sel.n, opts));
        } else {
            for (long long p : exponent_set_d6(r).primes)
                add(solve_odd_prime_d6(r, static_cast<int>(p)));
            if (sel.mode == M::All) {
                std::vector<Solution> copy = rows;
                add(power_lifts(copy));
            }
        }
    }
    sort_dedupe(rows);
    return rows;
}

}  // namespace

SweepResult sweep(int d, long long r_min, long long r_max, const ExponentSelector& sel,
                  const Options& opts) {
    if (r_min < 1 || r_min > r_max) throw std::invalid_argument("sweep: need 1 <= r_min <= r_max");
    SweepResult res;
    res.metadata.push_back(std::string("tool: ") + kToolVersion);
    {
        std::ostringstream os;
        os << "sweep: d=" << d << " n=" << sel.str() << " r=" << r_min << ".." << r_max;
        res.metadata.push_back(os.str());
    }
    res.metadata.push_back("thue-bound: " + std::to_string(opts.thue_bound));
    res.metadata.push_back("family-k: " + std::to_string(opts.family_k));

    Verdict cls = classify(d, sel.mode == ExponentSelector::Mode::Single ? sel.n : 2);
    if (d >= 2 && d <= 10 && d != 2 && d != 6) {
        // d = 3 defers, everything else here is obstructed for all n
        std::ostringstream os;
        os << "d=" << d << ": " << verdict_kind_name(cls.kind) << " (" << cls.reason << ")";
        if (sel.mode != ExponentSelector::Mode::Single && d == 8) {
            Verdict c3 = classify(d, 3);
            os << " for n=2; " << verdict_kind_name(c3.kind) << " (" << c3.reason
               << ") for n>=3";
        }
        res.notes.push_back(os.str());
        return res;
    }
    if (d < 2 || d > 10) {
        res.notes.push_back("unsupported d");
        return res;
    }
    if (d == 6 && sel.mode == ExponentSelector::Mode::Single && sel.n % 2 == 0) {
        std::ostringstream os;
        os << "d=6 even exponent: NoSolutions (" << kTagD6Mod7 << ")";
        res.notes.push_back(os.str());
        return res;
    }

    const long long count = r_max - r_min + 1;
    std::vector<std::vector<Solution>> per_r(static_cast<size_t>(count));
    std::atomic<long long> next{0};
    int jobs = effective_jobs(opts);
    auto worker = [&]() {
        while (true) {
            long long i = next.fetch_add(1);
            if (i >= count) break;
            per_r[static_cast<size_t>(i)] = rows_for_r(d, r_min + i, sel, opts);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& rows : per_r) res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    sort_dedupe(res.rows);
    return res;
}

namespace {

void write_row(std::ostream& os, const Solution& s) {
    os << s.d << ',' << s.r << ',' << s.x << ',' << s.y << ',' << s.n << '\n';
}

std::string emit_rows(const std::vector<std::string>& comments,
                      const std::vector<Solution>& rows) {
    std::ostringstream os;
    for (const auto& c : comments) os << c << '\n';
    os << "d,r,x,y,n\n";
    for (const auto& s : rows) write_row(os, s);
    return os.str();
}

}  // namespace

std::string emit_csv(const SweepResult& res) {
    std::vector<std::string> comments;
    for (const auto& m : res.metadata) comments.push_back("# " + m);
    for (const auto& n : res.notes) comments.push_back("# note: " + n);
    return emit_rows(comments, res.rows);
}

std::string emit_csv(const CsvTable& table) { return emit_rows(table.comments, table.rows); }

CsvTable parse_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    long line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            table.comments.push_back(line);
            continue;
        }
        if (!header_seen) {
            if (line != "d,r,x,y,n")
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": expected header d,r,x,y,n");
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 5)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected five comma-separated fields");
        try {
            Solution s;
            s.d = std::stoi(fields[0]);
            s.r = std::stoll(fields[1]);
            s.x = BigInt(fields[2]);
            s.y = BigInt(fields[3]);
            s.n = std::stoi(fields[4]);
            table.rows.push_back(std::move(s));
        } catch (const std::exception&) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": malformed integer");
        }
    }
    if (!header_seen) throw std::runtime_error("missing CSV header d,r,x,y,n");
    return table;
}

std::string emit_json(const SweepResult& res) {
    nlohmann::json arr = nlohmann::json::array();
    auto num = [](const BigInt& v) -> nlohmann::json {
        if (v.fits_slong_p()) return v.get_si();
        return v.get_str();
    };
    for (const auto& s : res.rows) {
        nlohmann::json o{{"d", s.d}, {"r", s.r}, {"x", num(s.x)}, {"y", num(s.y)}, {"n", s.n}};
        if (s.witness) {
            nlohmann::json w{{"ring_D", s.witness->ring_D},
                             {"u", num(s.witness->u)},
                             {"v", num(s.witness->v)},
                             {"seed_divisor", num(s.witness->seed_divisor)},
                             {"unit_case", s.witness->unit_case}};
            if (s.witness->X) w["X"] = num(*s.witness->X);
            o["witness"] = w;
        }
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

std::string emit_latex(const SweepResult& res) {
    std::ostringstream os;
    os << "\\begin{longtable}{|c|l|}\n\\hline\n";
    os << "$r$ & $(x, y, n)$ \\\\ \\hline\n";
    long long cur = -1;
    bool first = true;
    for (const auto& s : res.rows) {
        if (s.r != cur) {
            if (!first) os << "\n\\\\ \\hline\n";
            os << "$ " << s.r << " $ &\n$ ( " << s.x << " , " << s.y << " , " << s.n << " ) $";
            cur = s.r;
            first = false;
        } else {
            os << "  ,\n$ ( " << s.x << " , " << s.y << " , " << s.n << " ) $";
        }
    }
    if (!first) os << "\n\\\\ \\hline\n";
    os << "\\end{longtable}\n";
    return os.str();
}

ReferenceTable load_reference(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file: " + path);
    CsvTable table;
    try {
        table = parse_csv(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    ReferenceTable ref;
    ref.label = path;
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const Solution& s = table.rows[i];
        if (!verify_solution(s)) {
            std::ostringstream os;
            os << path << ": row " << (i + 1) << " (r=" << s.r << ", x=" << s.x
               << ") fails the defining equation";
            if (strict) throw std::runtime_error(os.str());
            ref.warnings.push_back(os.str());
        }
    }
    ref.rows = table.rows;
    return ref;
}

namespace {

// Comparison key; |y| for n = 4 rows, where the tables record |y|.
std::tuple<int, long long, BigInt, BigInt, int> diff_key(const Solution& s) {
    BigInt y = s.y;
    if (s.n == 4 && y < 0) y = -y;
    return {s.d, s.r, s.x, y, s.n};
}

}  // namespace

DiffReport verify_diff(const std::vector<Solution>& produced,
                       const std::vector<Solution>& reference) {
    std::map<std::tuple<int, long long, BigInt, BigInt, int>, Solution> ours, theirs;
    for (const auto& s : produced) ours.emplace(diff_key(s), s);
    for (const auto& s : reference) theirs.emplace(diff_key(s), s);
    DiffReport rep;
    for (const auto& [k, s] : theirs) {
        if (ours.count(k))
            rep.matched.push_back(s);
        else
            rep.missing.push_back(s);
    }
    for (const auto& [k, s] : ours)
        if (!theirs.count(k)) rep.extra.push_back(s);
    return rep;
}

}  // namespace apsq
