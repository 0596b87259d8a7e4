#pragma once

#include <memory>
#include <string>
#include <vector>

#include "apsq/solution.hpp"

namespace apsq {

enum class VerdictKind {
    Eliminated,   // a local obstruction rules every solution out
    NoSolutions,  // proved empty for this specific (d, n) or (d, r, n)
    Family,       // infinite parametrized family
    Finite,       // finite, fully listed
    Open,         // no obstruction; descent machinery applies
    Unsupported,  // d outside the supported range
    Deferred,     // resolved elsewhere, not re-derived here
};

const char* verdict_kind_name(VerdictKind k);

// Reason tags (machine-readable in CLI output).
inline constexpr const char* kTagLemma21 = "Lemma2.1";
inline constexpr const char* kTagLemma22 = "Lemma2.2";
inline constexpr const char* kTagLemma23 = "Lemma2.3";
inline constexpr const char* kTagD6Mod7 = "§3-d6-mod7";
inline constexpr const char* kTagD8Mod3 = "§3-d8-mod3";
inline constexpr const char* kTagD2N2Residue = "Thm1-d2n2-residue";

struct PellFamily;

/// Classification outcome. `reason` is a tag from the fixed set above for
/// Eliminated/NoSolutions verdicts; `detail` is human-readable context.
/// Solver verdicts may carry a solution list or a family parametrization.
struct Verdict {
    VerdictKind kind = VerdictKind::Open;
    std::string reason;
    std::string detail;
    std::vector<Solution> solutions;
    std::shared_ptr<PellFamily> family;
};

/// Pure classification of (d, n) by the local obstructions, evaluated in
/// fixed order. Requires n >= 2.
Verdict classify(int d, int n);

}  // namespace apsq
