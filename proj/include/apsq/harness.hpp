#pragma once

#include <iosfwd>
#include <string>

#include "apsq/sieve.hpp"
#include "apsq/solution.hpp"

namespace apsq {

inline constexpr const char* kToolVersion = "apsq 1.0.0";

/// Runtime knobs. CLI flags win over APSQ_* environment variables, which
/// win over these defaults.
struct Options {
    long long thue_bound = 1000;
    long long family_k = 10;
    long long oracle_y_max = 10000;
    int jobs = 0;  // 0 means hardware concurrency
};

Options options_from_env();

struct ExponentSelector {
    enum class Mode { All, Primes, Single } mode = Mode::Primes;
    int n = 0;  // for Single

    static ExponentSelector parse(const std::string& text);
    std::string str() const;
};

struct SweepResult {
    std::vector<std::string> metadata;  // key: value lines for the CSV header
    std::vector<std::string> notes;     // per-d verdict notes (eliminations etc.)
    std::vector<Solution> rows;         // sorted by (r, n, x, y)
};

/// Deterministic sweep over r in [r_min, r_max]; r values are distributed
/// over `jobs` workers and merged in canonical order.
SweepResult sweep(int d, long long r_min, long long r_max, const ExponentSelector& sel,
                  const Options& opts);

/// Solutions for one composite exponent, recovered from the prime-level
/// lists by perfect-power filtering.
std::vector<Solution> composite_exponent_solutions(int d, long long r, int n, const Options& opts);

struct CsvTable {
    std::vector<std::string> comments;  // verbatim '#' lines
    std::vector<Solution> rows;
};

std::string emit_csv(const SweepResult& res);
std::string emit_csv(const CsvTable& table);
CsvTable parse_csv(std::istream& in);

std::string emit_json(const SweepResult& res);
std::string emit_latex(const SweepResult& res);

struct ReferenceTable {
    std::string label;
    std::vector<Solution> rows;
    std::vector<std::string> warnings;  // populated instead of throwing when lenient
};

/// Loads a reference CSV and validates every row against the defining
/// equation; throws with the row position on any mismatch. With
/// strict = false invalid rows are kept and reported in `warnings`, so a
/// diff against solver output can surface them.
ReferenceTable load_reference(const std::string& path, bool strict = true);

struct DiffReport {
    std::vector<Solution> matched;
    std::vector<Solution> missing;  // in reference, absent from produced
    std::vector<Solution> extra;    // produced, absent from reference
    bool clean() const { return missing.empty() && extra.empty(); }
};

/// Order-insensitive three-way comparison; y is compared by absolute
/// value for n = 4 rows (the reference stores |y| there).
DiffReport verify_diff(const std::vector<Solution>& produced,
                       const std::vector<Solution>& reference);

}  // namespace apsq
