#pragma once

// Batch orchestration: run the full pipeline over one configuration and
// render deterministic reports (text, JSON, CSV).

#include <optional>
#include <string>
#include <vector>

#include "nivat/complexity.hpp"
#include "nivat/config.hpp"
#include "nivat/deduction.hpp"
#include "nivat/expansiveness.hpp"
#include "nivat/generating.hpp"

namespace nivat {

enum class OutputFormat { text, json, csv };

struct AnalysisRequest {
  i64 max_n = 8;
  i64 max_k = 8;
  Budget budget{8, 8};
  bool want_table = true;
  bool want_generating = true;
  bool want_trichotomy = true;
  std::optional<Vec> balanced_direction;
  std::optional<std::pair<i64, i64>> entropy_nk;
  i64 entropy_max_np = 16;
};

struct AnalysisReport {
  Rect window;
  std::string alphabet;
  std::optional<RectComplexityTable> table;
  std::vector<std::pair<i64, i64>> hits;         // P(n,k) <= nk
  std::vector<std::pair<i64, i64>> strong_hits;  // P(n,k) <= nk/2
  std::optional<GeneratingSetReport> generating;
  std::optional<GeneratingSetReport> balanced;
  std::optional<TrichotomyVerdict> trichotomy;
  std::optional<EntropyBoundReport> entropy;
  std::vector<std::string> notes;
  bool any_hit = false;
};

AnalysisReport run_analysis(const WindowConfiguration& cfg, const AnalysisRequest& req);

/// Deterministic rendering: identical report -> identical bytes.  JSON keys
/// are sorted; CSV rows are `n,k,P,D`; text tables are aligned.
std::string emit(const AnalysisReport& report, OutputFormat format);

std::string trichotomy_case_name(TrichotomyVerdict::Case c);
std::string certificate_verdict_name(ExpansivenessCertificate::Verdict v);

/// Mask-and-reconstruct demonstration: keep a centered seed block of the
/// window, deduce the rest from the generating-set languages of R_{n,k} and
/// its transpose, and compare against the ground truth.
struct DeduceDemoReport {
  Rect frame;
  Rect seed;
  i64 forced = 0;
  i64 unknown = 0;
  i64 mismatches = 0;
  std::string status;
  std::vector<std::string> trace;
};

DeduceDemoReport deduce_demo(const WindowConfiguration& cfg, i64 n, i64 k, i64 seed_w, i64 seed_h,
                             bool trace = false);

std::string render_deduce_demo(const DeduceDemoReport& r, OutputFormat format);
std::string render_fine_wilf(const FineWilfResult& r, OutputFormat format);
std::string render_morse_hedlund(const MorseHedlundVerdict& v, OutputFormat format);

}  // namespace nivat
