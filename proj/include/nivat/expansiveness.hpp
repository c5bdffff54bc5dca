#pragma once

// Finite-parameter one-sided expansiveness certificates, candidate-direction
// enumeration, and the periodicity trichotomy classifier.  All verdicts are
// window-relative: a direction is only ever "nonexpansive up to the budget",
// never nonexpansive outright.

#include <optional>
#include <string>
#include <vector>

#include "nivat/complexity.hpp"
#include "nivat/config.hpp"
#include "nivat/deduction.hpp"
#include "nivat/generating.hpp"
#include "nivat/geometry.hpp"

namespace nivat {

struct ExpansivenessCertificate {
  enum class Verdict { expansive_at, nonexpansive_at, inconclusive };
  DirectedRationalLine direction;
  UnimodularMap map;  // A with A(0,-1) = direction
  i64 a = 0, b = 0;
  Verdict verdict = Verdict::inconclusive;
  // nonexpansive_at: two full patterns agreeing on the context but not at
  // the probe cell
  std::optional<std::pair<std::string, std::string>> witness;
  i64 translates_observed = 0;
};

/// Edge directions of the generating set (both orientations) plus the axis
/// directions, filtered to vectors with a two-point fit inside R_{n,k},
/// deduplicated and sorted by (|dx|,|dy|,dx,dy).
std::vector<DirectedRationalLine> candidate_directions(const GeneratingSetReport& report, i64 n,
                                                       i64 k);

/// Groups observed patterns of A([0,a]x[-b,b] ∪ {(-1,0)}) by their
/// restriction to the context part; expansive_at iff every group is
/// constant at the probe cell.
ExpansivenessCertificate expansive_certificate(const WindowConfiguration& cfg,
                                               const DirectedRationalLine& line, i64 a, i64 b);

struct Budget {
  i64 a = 8;
  i64 b = 8;
};

struct DirectionScanResult {
  DirectedRationalLine direction;
  ExpansivenessCertificate certificate;  // first expansive, or strongest attempt
  bool resolved_expansive = false;
};

struct NonexpansiveScan {
  std::vector<DirectionScanResult> directions;
  // directions nonexpansive-up-to-budget whose antiparallel partner resolved
  // expansive (possible window artifact)
  std::vector<DirectedRationalLine> antiparallel_violations;
};

/// Escalates (a,b) through (1,1),(2,2),(4,4),... up to the budget for every
/// candidate direction of `report`.
NonexpansiveScan scan_nonexpansive(const WindowConfiguration& cfg,
                                   const GeneratingSetReport& report, i64 n, i64 k,
                                   Budget budget);

struct TrichotomyVerdict {
  enum class Case {
    doubly_periodic,
    singly_periodic,
    multiple_nonexpansive,
    no_hypothesis,
    inconclusive
  };
  Case verdict = Case::inconclusive;
  std::optional<Vec> nonexpansive_line;  // singly_periodic: canonical direction
  PeriodScan periods;
  NonexpansiveScan scan;
  std::optional<GeneratingSetReport> generating;
  std::optional<std::pair<i64, i64>> hit;  // the (n',k') used for the pipeline
  bool strong_hit = false;
  std::vector<std::pair<i64, i64>> hits;         // all P <= n'k'
  std::vector<std::pair<i64, i64>> strong_hits;  // all P <= n'k'/2
  Rect window;
  std::vector<std::string> notes;
};

/// Combines the complexity table, period detection and the per-direction
/// scan into the trichotomy verdict.
TrichotomyVerdict classify_trichotomy(const WindowConfiguration& cfg, i64 n, i64 k, Budget budget);

}  // namespace nivat
