#pragma once

// Search procedures for weak/strong generating sets, nested families,
// balanced sets, and thin generating sets.  All discrepancies inside a
// search are computed over the fixed translate set of the container, which
// keeps the one-point-removal identities exact at window scale.

#include <optional>
#include <string>
#include <vector>

#include "nivat/complexity.hpp"
#include "nivat/config.hpp"
#include "nivat/geometry.hpp"

namespace nivat {

struct EdgeStat {
  DirectedEdge edge;
  i64 points_on_edge = 0;
  std::optional<i64> d_without;  // D(S \ w), absent when S \ w is empty
};

struct GeneratingSetReport {
  enum class Kind { weak, generating, strong, balanced, thin };
  enum class Status { ok, collapsed_to_segment, unverified };

  Kind kind = Kind::generating;
  Status status = Status::ok;
  ConvexLatticeSet set;
  i64 pattern_count = 0;  // P(set), container-relative
  i64 discrepancy = 0;    // P(set) - |set|
  Shape container;        // the translate-set owner (e.g. R_{n,k})
  Rect translates;
  Rect window;
  std::vector<LatticePoint> generated_vertices;
  std::vector<LatticePoint> ungenerated_vertices;
  std::vector<EdgeStat> edge_stats;
  std::vector<ConvexLatticeSet> nested_family;  // weak generating, strictly nested

  // strong sets: the three defining conditions, evaluated directly
  std::optional<bool> cond_half_size;       // D <= -|S|/2
  std::optional<bool> cond_edge_removal;    // D(S\w) >= D(S) + ceil(|w∩S|/2)
  std::optional<bool> cond_minimality;      // proper convex subsets have larger D

  std::optional<DirectedRationalLine> balanced_line;
  std::string failing_condition;  // set when status == unverified

  // collapsed_to_segment: the detected 1D periodicity signal
  std::optional<Vec> collapse_direction;
  i64 collapse_period = 0;  // smallest window-valid period along the direction
};

/// Convex subset of `container`, minimal under extreme-point removal, with
/// container-relative discrepancy at most target_d.  Deterministic: always
/// removes the lexicographically smallest removable extreme point.
ConvexLatticeSet find_minimal_low_discrepancy(const WindowConfiguration& cfg,
                                              const ConvexLatticeSet& container, i64 target_d);

/// Generating set inside R_{n,k}; requires D(R_{n,k}) <= 0 (window-relative).
/// Minimality is re-checked against all convex subsets for |S| <= 18 and
/// against the defining extreme-point/edge inequalities above that.
GeneratingSetReport find_generating_set(const WindowConfiguration& cfg, i64 n, i64 k);

/// Strong generating set: iteratively strips edges violating the
/// half-edge-growth condition and re-minimizes.  Requires P(R_{n,k}) <= nk/2.
/// Collapse to a collinear set is reported as a periodicity signal.
GeneratingSetReport find_strong_generating_set(const WindowConfiguration& cfg, i64 n, i64 k);

/// l-balanced set construction (axis cases via a minimal sub-rectangle,
/// oblique case via the support-line cut through a corner), verified against
/// the balanced-set conditions by direct enumeration.
GeneratingSetReport find_balanced_set(const WindowConfiguration& cfg, i64 n, i64 k,
                                      const DirectedRationalLine& line);

/// Splits S at half its column span, keeps a half with nonpositive
/// discrepancy, and extracts a generating subset; asserts the halved
/// vertical diameter bound.
GeneratingSetReport thin_generating_set(const WindowConfiguration& cfg,
                                        const ConvexLatticeSet& s);

}  // namespace nivat
