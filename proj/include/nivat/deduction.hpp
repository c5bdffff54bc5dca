#pragma once

// The forcing engine: extend partial colorings uniquely using pattern
// languages (one-hole rule only), detect ambiguity, plus the 1D
// Morse-Hedlund and Fine-Wilf procedures and window period detection.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nivat/complexity.hpp"
#include "nivat/config.hpp"
#include "nivat/geometry.hpp"

namespace nivat {

/// A partially known coloring of a rectangular frame.  '\0' marks an
/// uncolored cell.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(Rect frame)
      : frame_(frame), values_(static_cast<std::size_t>(frame.area()), '\0') {
    if (frame.width <= 0 || frame.height <= 0)
      fail(Errc::invalid_argument, "frame must be nonempty");
  }

  const Rect& frame() const { return frame_; }
  bool colored(const LatticePoint& p) const { return at(p) != '\0'; }
  char at(const LatticePoint& p) const {
    return values_[static_cast<std::size_t>((p.y - frame_.y0) * frame_.width + (p.x - frame_.x0))];
  }
  void set(const LatticePoint& p, char symbol) {
    char& slot =
        values_[static_cast<std::size_t>((p.y - frame_.y0) * frame_.width + (p.x - frame_.x0))];
    if (slot == '\0' && symbol != '\0') ++colored_count_;
    if (slot != '\0' && symbol == '\0') --colored_count_;
    slot = symbol;
  }
  i64 colored_count() const { return colored_count_; }
  bool complete() const { return colored_count_ == frame_.area(); }

  /// Restriction of a window configuration to frame ∩ region.
  static PartialColoring from_window(const WindowConfiguration& cfg, Rect frame,
                                     std::span<const LatticePoint> region);

 private:
  Rect frame_;
  std::vector<char> values_;
  i64 colored_count_ = 0;
};

enum class ScanOrder { row_major, column_major };

struct DeduceOptions {
  ScanOrder order = ScanOrder::row_major;
  bool trace = false;
  // The core rule fills only translates with exactly one uncolored cell.
  // The extended rule additionally fills any cell whose value is forced by
  // the patterns consistent with the colored part of some translate.
  bool extended = false;
};

struct DeductionOutcome {
  enum class Status { completed, ambiguous, contradiction, stalled };
  Status status = Status::completed;
  PartialColoring final;
  i64 steps = 0;  // forced cells
  // ambiguous: the first one-hole translate (scan order) admitting two values
  std::optional<std::pair<std::string, std::string>> witness;
  std::vector<LatticePoint> frontier;        // uncolored cells at fixpoint
  std::optional<LatticePoint> contradiction_cell;
  std::vector<std::string> trace;  // "x y symbol ux uy" per forced cell
};

/// One-hole fixpoint: for any translate of a language shape with exactly one
/// uncolored cell whose colored part is consistent with a unique value at
/// the hole, fill it; repeat to fixpoint in deterministic scan order.
DeductionOutcome deduce_fixpoint(std::span<const PatternLanguage> langs,
                                 const PartialColoring& start, DeduceOptions opts = {});
DeductionOutcome deduce_fixpoint(const PatternLanguage& lang, const PartialColoring& start,
                                 DeduceOptions opts = {});

enum class ExtensionMultiplicity { unique, ambiguous, none };

struct UniqueExtensionResult {
  ExtensionMultiplicity verdict = ExtensionMultiplicity::unique;
  // for ambiguous: the base coloring plus two distinct target completions
  std::optional<std::string> base_witness;
  std::optional<std::pair<std::string, std::string>> completions;
  i64 bases_checked = 0;
};

enum class ExtensionMode { automatic, exhaustive, fixpoint };

/// For each base-region coloring observed in cfg (over translates where the
/// whole target fits), classify how many target completions the language
/// admits.  Exhaustive search is capped at 24 free cells.
UniqueExtensionResult unique_extension_check(const WindowConfiguration& cfg,
                                             const PatternLanguage& lang, const Shape& base,
                                             const Shape& target,
                                             ExtensionMode mode = ExtensionMode::automatic);

struct RowFillResult {
  DeductionOutcome outcome;
  bool cross_checked = false;  // agrees with deduce_fixpoint on the column
};

/// Fills the column x = column_x of `start` by upward then downward
/// induction, sliding the generating set S so that an endpoint of its
/// downward vertical edge lands on the next unknown cell.  Requires the
/// edge endpoints to be generated in the language.
RowFillResult row_fill(const PatternLanguage& lang, const ConvexLatticeSet& s,
                       const PartialColoring& start, i64 column_x);

struct MorseHedlundVerdict {
  enum class Status { periodic, not_applicable, short_domain_no_period };
  Status status = Status::not_applicable;
  i64 complexity = 0;  // P_f(n0)
  i64 period = 0;
  i64 interval_begin = 0;  // inclusive, 0-based
  i64 interval_end = 0;    // inclusive
  bool guaranteed = false; // domain length exceeds 3*n0
};

/// Interval Morse-Hedlund test: if P_f(n0) <= n0 report a period p <= n0 on
/// the guaranteed middle interval (or on the full word, unguaranteed, when
/// the domain is too short for the theorem).
MorseHedlundVerdict morse_hedlund_check(const std::string& word, i64 n0);

struct FineWilfCompletion {
  i64 period = 0;
  std::string block;  // repeating block anchored at the segment start
};

struct FineWilfResult {
  enum class Status { unique, ambiguous, inconsistent };
  Status status = Status::inconsistent;
  std::vector<i64> possible_periods;  // the set of possible periods <= p
  std::vector<FineWilfCompletion> completions;  // distinct ones
  i64 minimal_period = 0;  // unique case
};

/// Reconstruction of a periodic sequence of period at most p from a
/// segment of consecutive entries.  Segments of length >= 2p-2 reconstruct
/// uniquely; shorter segments may admit several completions.
FineWilfResult fine_wilf_reconstruct(const std::string& segment, i64 p);

struct PeriodScan {
  enum class Kind { none, singly, doubly };
  Kind kind = Kind::none;
  std::vector<Vec> periods;  // closed under negation
  std::optional<Vec> direction;  // singly: primitive common direction
};

/// All vectors m (components up to half the window dimensions) that agree on
/// the overlap of the window with its m-shift, overlap at least half the
/// window area.
PeriodScan detect_periods_2d(const WindowConfiguration& cfg);

}  // namespace nivat
