#include "nivat/deduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace nivat {

PartialColoring PartialColoring::from_window(const WindowConfiguration& cfg, Rect frame,
                                             std::span<const LatticePoint> region) {
  PartialColoring pc(frame);
  for (const auto& p : region) {
    if (!frame.contains(p) || !cfg.in_window(p)) continue;
    pc.set(p, cfg.symbol_at(p));
  }
  return pc;
}

namespace {

struct LangState {
  const PatternLanguage* lang;
  Rect urect;                       // translates with shape+u inside the frame
  std::vector<int> holes;           // per translate
  std::unordered_set<std::string> pattern_set;
  i64 ucount() const { return std::max<i64>(0, urect.width) * std::max<i64>(0, urect.height); }
  i64 uindex(const Vec& u) const { return (u.y - urect.y0) * urect.width + (u.x - urect.x0); }
  Vec uat(i64 idx) const { return {urect.x0 + idx % urect.width, urect.y0 + idx / urect.width}; }
  bool uin(const Vec& u) const { return urect.contains({u.x, u.y}); }
};

// scan key: langs in order, then row-major (or column-major) over u
i64 scan_key(const LangState& ls, std::size_t li, const Vec& u, ScanOrder order, i64 span) {
  i64 within = order == ScanOrder::row_major
                   ? (u.y - ls.urect.y0) * ls.urect.width + (u.x - ls.urect.x0)
                   : (u.x - ls.urect.x0) * ls.urect.height + (u.y - ls.urect.y0);
  return static_cast<i64>(li) * span + within;
}

struct HoleEval {
  enum class Kind { nothing, fill, contradiction, ambiguous };
  Kind kind = Kind::nothing;
  char value = '\0';
  const std::string* first = nullptr;
  const std::string* second = nullptr;
  LatticePoint hole;
};

// Evaluate one translate.  Core mode requires exactly one uncolored cell;
// extended mode forces any hole on which all consistent patterns agree.
HoleEval eval_translate(const LangState& ls, const Vec& u, const PartialColoring& pc,
                        bool extended) {
  HoleEval ev;
  const auto& pts = ls.lang->shape.points();
  std::vector<std::size_t> holes;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!pc.colored(pts[i] + u)) holes.push_back(i);
  if (holes.empty() || (!extended && holes.size() != 1)) return ev;

  std::vector<const std::string*> consistent;
  for (const auto& pat : ls.lang->patterns) {
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!pc.colored(pts[i] + u)) continue;
      if (pc.at(pts[i] + u) != pat[i]) {
        ok = false;
        break;
      }
    }
    if (ok) consistent.push_back(&pat);
  }
  if (consistent.empty()) {
    ev.kind = HoleEval::Kind::contradiction;
    ev.hole = pts[holes.front()] + u;
    return ev;
  }
  for (std::size_t hi : holes) {
    char v = (*consistent.front())[hi];
    const std::string* other = nullptr;
    for (const auto* pat : consistent)
      if ((*pat)[hi] != v) {
        other = pat;
        break;
      }
    if (!other) {
      ev.kind = HoleEval::Kind::fill;
      ev.value = v;
      ev.hole = pts[hi] + u;
      return ev;
    }
    if (ev.kind == HoleEval::Kind::nothing) {
      ev.kind = HoleEval::Kind::ambiguous;
      ev.hole = pts[hi] + u;
      ev.first = consistent.front();
      ev.second = other;
    }
  }
  return ev;
}

}  // namespace

DeductionOutcome deduce_fixpoint(std::span<const PatternLanguage> langs,
                                 const PartialColoring& start, DeduceOptions opts) {
  if (langs.empty()) fail(Errc::invalid_argument, "at least one language required");
  DeductionOutcome out;
  out.final = start;
  PartialColoring& pc = out.final;
  const Rect frame = pc.frame();

  std::vector<LangState> states;
  i64 span = 0;
  for (const auto& lang : langs) {
    LangState ls;
    ls.lang = &lang;
    ls.urect = translate_range(frame, lang.shape);
    if (ls.urect.width <= 0 || ls.urect.height <= 0)
      fail(Errc::shape_too_large, "language shape does not fit in the frame");
    ls.pattern_set.insert(lang.patterns.begin(), lang.patterns.end());
    span = std::max(span, ls.ucount());
    states.push_back(std::move(ls));
  }

  auto full_check = [&](const LangState& ls, const Vec& u) -> bool {
    std::string buf(ls.lang->shape.size(), '\0');
    std::size_t i = 0;
    for (const auto& p : ls.lang->shape.points()) buf[i++] = pc.at(p + u);
    return ls.pattern_set.count(buf) > 0;
  };

  std::set<i64> one_hole;  // scan keys
  auto key_of = [&](std::size_t li, const Vec& u) {
    return scan_key(states[li], li, u, opts.order, span);
  };
  auto decode = [&](i64 key) -> std::pair<std::size_t, Vec> {
    std::size_t li = static_cast<std::size_t>(key / span);
    i64 within = key % span;
    const LangState& ls = states[li];
    Vec u = opts.order == ScanOrder::row_major
                ? Vec{ls.urect.x0 + within % ls.urect.width, ls.urect.y0 + within / ls.urect.width}
                : Vec{ls.urect.x0 + within / ls.urect.height,
                      ls.urect.y0 + within % ls.urect.height};
    return {li, u};
  };

  auto activates = [&](int holes) {
    return opts.extended ? holes >= 1 : holes == 1;
  };

  // initial hole counts
  for (std::size_t li = 0; li < states.size(); ++li) {
    LangState& ls = states[li];
    ls.holes.assign(static_cast<std::size_t>(ls.ucount()), 0);
    for (i64 uy = ls.urect.y0; uy < ls.urect.y1(); ++uy)
      for (i64 ux = ls.urect.x0; ux < ls.urect.x1(); ++ux) {
        Vec u{ux, uy};
        int holes = 0;
        for (const auto& p : ls.lang->shape.points())
          if (!pc.colored(p + u)) ++holes;
        ls.holes[static_cast<std::size_t>(ls.uindex(u))] = holes;
        if (activates(holes)) one_hole.insert(key_of(li, u));
        if (holes == 0 && !full_check(ls, u)) {
          out.status = DeductionOutcome::Status::contradiction;
          out.contradiction_cell = ls.lang->shape.points().front() + u;
          return out;
        }
      }
  }

  auto fill = [&](const LatticePoint& cell, char symbol, const Vec& reason) -> bool {
    pc.set(cell, symbol);
    ++out.steps;
    if (opts.trace)
      out.trace.push_back(std::to_string(cell.x) + " " + std::to_string(cell.y) + " " + symbol +
                          " " + std::to_string(reason.x) + " " + std::to_string(reason.y));
    for (std::size_t li = 0; li < states.size(); ++li) {
      LangState& ls = states[li];
      for (const auto& p : ls.lang->shape.points()) {
        Vec u = cell - p;
        if (!ls.uin(u)) continue;
        int& h = ls.holes[static_cast<std::size_t>(ls.uindex(u))];
        --h;
        if (activates(h)) {
          one_hole.insert(key_of(li, u));
        } else if (h == 0) {
          one_hole.erase(key_of(li, u));
          if (!full_check(ls, u)) {
            out.status = DeductionOutcome::Status::contradiction;
            out.contradiction_cell = cell;
            return false;
          }
        }
      }
    }
    return true;
  };

  while (!one_hole.empty()) {
    i64 key = *one_hole.begin();
    auto [li, u] = decode(key);
    LangState& ls = states[li];
    if (!activates(ls.holes[static_cast<std::size_t>(ls.uindex(u))])) {
      one_hole.erase(key);
      continue;
    }
    HoleEval ev = eval_translate(ls, u, pc, opts.extended);
    if (ev.kind == HoleEval::Kind::contradiction) {
      out.status = DeductionOutcome::Status::contradiction;
      out.contradiction_cell = ev.hole;
      return out;
    }
    if (ev.kind != HoleEval::Kind::fill) {
      one_hole.erase(key);  // blocked until one of its cells is filled
      continue;
    }
    if (!fill(ev.hole, ev.value, u)) return out;
  }

  if (pc.complete()) {
    out.status = DeductionOutcome::Status::completed;
    return out;
  }

  // fixpoint without completion: report frontier and, when some one-hole
  // translate admits two values, the scan-minimal witness pair
  for (i64 y = frame.y0; y < frame.y1(); ++y)
    for (i64 x = frame.x0; x < frame.x1(); ++x)
      if (!pc.colored({x, y})) out.frontier.push_back({x, y});

  std::optional<i64> best_key;
  std::optional<std::pair<std::string, std::string>> best_witness;
  for (std::size_t li = 0; li < states.size(); ++li) {
    LangState& ls = states[li];
    for (i64 idx = 0; idx < ls.ucount(); ++idx) {
      if (!activates(ls.holes[static_cast<std::size_t>(idx)])) continue;
      Vec u = ls.uat(idx);
      i64 key = key_of(li, u);
      if (best_key && key >= *best_key) continue;
      HoleEval ev = eval_translate(ls, u, pc, opts.extended);
      if (ev.kind == HoleEval::Kind::ambiguous) {
        best_key = key;
        best_witness = {*ev.first, *ev.second};
      }
    }
  }
  if (best_witness) {
    out.status = DeductionOutcome::Status::ambiguous;
    out.witness = best_witness;
  } else {
    out.status = DeductionOutcome::Status::stalled;
  }
  return out;
}

DeductionOutcome deduce_fixpoint(const PatternLanguage& lang, const PartialColoring& start,
                                 DeduceOptions opts) {
  return deduce_fixpoint(std::span<const PatternLanguage>(&lang, 1), start, opts);
}

UniqueExtensionResult unique_extension_check(const WindowConfiguration& cfg,
                                             const PatternLanguage& lang, const Shape& base,
                                             const Shape& target, ExtensionMode mode) {
  std::vector<std::size_t> base_idx;
  for (const auto& p : base.points()) {
    auto i = target.index_of(p);
    if (!i) fail(Errc::invalid_argument, "base must be contained in target");
    base_idx.push_back(*i);
  }
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < target.size(); ++i)
    if (!base.contains(target.points()[i])) free_idx.push_back(i);
  if (free_idx.empty()) fail(Errc::invalid_argument, "target must strictly contain base");

  constexpr std::size_t kExhaustiveCap = 24;
  if (mode == ExtensionMode::exhaustive && free_idx.size() > kExhaustiveCap)
    fail(Errc::frame_too_large, "exhaustive mode capped at 24 free cells");
  bool exhaustive = mode == ExtensionMode::exhaustive ||
                    (mode == ExtensionMode::automatic && free_idx.size() <= kExhaustiveCap);

  // observed base colorings, over translates where the whole target fits
  Rect tr = translate_range(cfg.window(), target);
  if (tr.width <= 0 || tr.height <= 0)
    fail(Errc::shape_too_large, "target does not fit inside the window");
  std::set<std::string> bases;
  {
    std::string buf(base.size(), '\0');
    for (i64 uy = tr.y0; uy < tr.y1(); ++uy)
      for (i64 ux = tr.x0; ux < tr.x1(); ++ux) {
        std::size_t i = 0;
        for (const auto& p : base.points()) buf[i++] = cfg.symbol_at({p.x + ux, p.y + uy});
        bases.insert(buf);
      }
  }

  UniqueExtensionResult out;
  out.bases_checked = static_cast<i64>(bases.size());

  // frame hosting one target translate
  Rect frame{target.min_corner().x, target.min_corner().y,
             target.max_corner().x - target.min_corner().x + 1,
             target.max_corner().y - target.min_corner().y + 1};

  bool any_none = false;
  for (const auto& b : bases) {
    if (exhaustive) {
      // backtracking over free cells; prune on fully-assigned shape translates
      PartialColoring pc(frame);
      for (std::size_t i = 0; i < base.points().size(); ++i) pc.set(base.points()[i], b[i]);
      Rect ur = translate_range(frame, lang.shape);
      std::unordered_set<std::string> patset(lang.patterns.begin(), lang.patterns.end());
      std::vector<std::vector<Vec>> finishing(free_idx.size());
      if (ur.width > 0 && ur.height > 0) {
        for (i64 uy = ur.y0; uy < ur.y1(); ++uy)
          for (i64 ux = ur.x0; ux < ur.x1(); ++ux) {
            Vec u{ux, uy};
            // last free cell (in assignment order) covered by this translate
            std::size_t last = free_idx.size();
            bool covers_target_only = true;
            for (const auto& p : lang.shape.points()) {
              LatticePoint c = p + u;
              if (!target.contains(c)) {
                covers_target_only = false;
                break;
              }
              auto ti = target.index_of(c);
              for (std::size_t fi = 0; fi < free_idx.size(); ++fi)
                if (free_idx[fi] == *ti) last = (last == free_idx.size() || fi > last) ? fi : last;
            }
            if (!covers_target_only) continue;
            if (last == free_idx.size()) {
              // fully determined by the base: check now
              std::string buf(lang.shape.size(), '\0');
              std::size_t i = 0;
              bool all = true;
              for (const auto& p : lang.shape.points()) {
                if (!pc.colored(p + u)) {
                  all = false;
                  break;
                }
                buf[i++] = pc.at(p + u);
              }
              if (all && !patset.count(buf)) {
                // base itself inconsistent with the language
              }
              continue;
            }
            finishing[last].push_back(u);
          }
      }
      int found = 0;
      std::string first_completion, second_completion;
      std::string cur(free_idx.size(), '\0');
      const std::string& symbols = cfg.alphabet().symbols();
      auto rec = [&](auto&& self, std::size_t fi) -> void {
        if (found >= 2) return;
        if (fi == free_idx.size()) {
          std::string full(target.size(), '\0');
          for (std::size_t i = 0; i < target.size(); ++i) full[i] = pc.at(target.points()[i]);
          if (found == 0)
            first_completion = full;
          else
            second_completion = full;
          ++found;
          return;
        }
        LatticePoint cell = target.points()[free_idx[fi]];
        for (char s : symbols) {
          pc.set(cell, s);
          cur[fi] = s;
          bool ok = true;
          for (const Vec& u : finishing[fi]) {
            std::string buf(lang.shape.size(), '\0');
            std::size_t i = 0;
            for (const auto& p : lang.shape.points()) buf[i++] = pc.at(p + u);
            if (!patset.count(buf)) {
              ok = false;
              break;
            }
          }
          if (ok) self(self, fi + 1);
          pc.set(cell, '\0');
          if (found >= 2) return;
        }
      };
      rec(rec, 0);
      if (found == 0) any_none = true;
      if (found >= 2) {
        out.verdict = ExtensionMultiplicity::ambiguous;
        out.base_witness = b;
        out.completions = {first_completion, second_completion};
        return out;
      }
    } else {
      PartialColoring pc(frame);
      for (std::size_t i = 0; i < base.points().size(); ++i) pc.set(base.points()[i], b[i]);
      DeductionOutcome d = deduce_fixpoint(lang, pc);
      if (d.status == DeductionOutcome::Status::contradiction) any_none = true;
      if (d.status == DeductionOutcome::Status::ambiguous ||
          d.status == DeductionOutcome::Status::stalled) {
        out.verdict = ExtensionMultiplicity::ambiguous;
        out.base_witness = b;
        if (d.witness) out.completions = d.witness;
        return out;
      }
    }
  }
  out.verdict = any_none ? ExtensionMultiplicity::none : ExtensionMultiplicity::unique;
  return out;
}

RowFillResult row_fill(const PatternLanguage& lang, const ConvexLatticeSet& s,
                       const PartialColoring& start, i64 column_x) {
  Shape sshape{std::vector<LatticePoint>(s.points().begin(), s.points().end())};
  if (sshape != lang.shape)
    fail(Errc::invalid_argument, "language must be collected over the generating set itself");

  std::optional<DirectedEdge> w1;
  for (const auto& e : s.edges())
    if (e.direction() == Vec{0, -1}) {
      w1 = e;
      break;
    }
  if (!w1) fail(Errc::hypothesis_violation, "set has no downward vertical edge");
  i64 h = w1->lattice_count();

  if (!point_generated(lang.patterns, sshape, w1->start) ||
      !point_generated(lang.patterns, sshape, w1->end))
    fail(Errc::hypothesis_violation, "endpoints of the vertical edge are not generated");

  RowFillResult res;
  res.outcome.final = start;
  PartialColoring& pc = res.outcome.final;
  const Rect frame = pc.frame();
  if (column_x < frame.x0 || column_x >= frame.x1())
    fail(Errc::invalid_argument, "column outside the frame");

  // longest colored run in the column
  i64 best_len = 0, best_top = 0;
  {
    i64 run = 0;
    for (i64 y = frame.y0; y < frame.y1(); ++y) {
      if (pc.colored({column_x, y})) {
        ++run;
        if (run > best_len) {
          best_len = run;
          best_top = y;
        }
      } else {
        run = 0;
      }
    }
  }
  if (best_len < h - 1)
    fail(Errc::hypothesis_violation,
         "seed must cover " + std::to_string(h - 1) + " consecutive cells of the column");

  auto force_cell = [&](const LatticePoint& target, const LatticePoint& anchor) -> int {
    // slide S so that `anchor` (an endpoint of w1) lands on target
    Vec v = target - anchor;
    for (const auto& p : s.points()) {
      LatticePoint c = p + v;
      if (c == target) continue;
      if (!frame.contains(c) || !pc.colored(c)) return 0;  // support exhausted
    }
    auto ti = sshape.index_of(target - v);
    char value = '\0';
    const std::string* first = nullptr;
    for (const auto& pat : lang.patterns) {
      bool ok = true;
      std::size_t i = 0;
      for (const auto& p : sshape.points()) {
        if (p + v != target && pc.at(p + v) != pat[i]) {
          ok = false;
          break;
        }
        ++i;
      }
      if (!ok) continue;
      if (value == '\0') {
        value = pat[*ti];
        first = &pat;
      } else if (pat[*ti] != value) {
        res.outcome.status = DeductionOutcome::Status::ambiguous;
        res.outcome.witness = {*first, pat};
        return -1;
      }
    }
    if (value == '\0') {
      res.outcome.status = DeductionOutcome::Status::contradiction;
      res.outcome.contradiction_cell = target;
      return -1;
    }
    pc.set(target, value);
    ++res.outcome.steps;
    return 1;
  };

  // upward from the run top, sliding the top endpoint of w1
  for (i64 y = best_top + 1; y < frame.y1(); ++y) {
    if (pc.colored({column_x, y})) continue;
    int r = force_cell({column_x, y}, w1->start);
    if (r < 0) return res;
    if (r == 0) break;
  }
  // downward, sliding the bottom endpoint
  for (i64 y = best_top - best_len; y >= frame.y0; --y) {
    if (pc.colored({column_x, y})) continue;
    int r = force_cell({column_x, y}, w1->end);
    if (r < 0) return res;
    if (r == 0) break;
  }

  bool column_done = true;
  for (i64 y = frame.y0; y < frame.y1(); ++y)
    if (!pc.colored({column_x, y})) column_done = false;
  res.outcome.status =
      column_done ? DeductionOutcome::Status::completed : DeductionOutcome::Status::stalled;

  // cross-check against the generic engine
  DeductionOutcome generic = deduce_fixpoint(lang, start);
  res.cross_checked = true;
  for (i64 y = frame.y0; y < frame.y1(); ++y) {
    LatticePoint c{column_x, y};
    if (pc.colored(c) && generic.final.colored(c) && pc.at(c) != generic.final.at(c))
      res.cross_checked = false;
  }
  return res;
}

MorseHedlundVerdict morse_hedlund_check(const std::string& word, i64 n0) {
  const i64 len = static_cast<i64>(word.size());
  if (n0 < 1 || n0 > len) fail(Errc::invalid_argument, "need 1 <= n0 <= |word|");
  MorseHedlundVerdict v;
  std::set<std::string> blocks;
  for (i64 m = 0; m + n0 <= len; ++m) blocks.insert(word.substr(static_cast<std::size_t>(m),
                                                                static_cast<std::size_t>(n0)));
  v.complexity = static_cast<i64>(blocks.size());
  if (v.complexity > n0) {
    v.status = MorseHedlundVerdict::Status::not_applicable;
    return v;
  }
  v.guaranteed = len > 3 * n0;
  v.interval_begin = v.guaranteed ? n0 : 0;
  v.interval_end = v.guaranteed ? len - n0 : len - 1;
  for (i64 p = 1; p <= n0; ++p) {
    bool ok = true;
    for (i64 x = v.interval_begin; x + p <= v.interval_end; ++x)
      if (word[static_cast<std::size_t>(x)] != word[static_cast<std::size_t>(x + p)]) {
        ok = false;
        break;
      }
    if (ok) {
      v.status = MorseHedlundVerdict::Status::periodic;
      v.period = p;
      return v;
    }
  }
  if (v.guaranteed) fail(Errc::internal, "Morse-Hedlund guarantee failed");
  v.status = MorseHedlundVerdict::Status::short_domain_no_period;
  return v;
}

FineWilfResult fine_wilf_reconstruct(const std::string& segment, i64 p) {
  if (p < 1) fail(Errc::invalid_argument, "p must be positive");
  const i64 m = static_cast<i64>(segment.size());
  FineWilfResult out;
  for (i64 q = 1; q <= std::min(p, m); ++q) {
    bool ok = true;
    for (i64 i = 0; i + q < m; ++i)
      if (segment[static_cast<std::size_t>(i)] != segment[static_cast<std::size_t>(i + q)]) {
        ok = false;
        break;
      }
    if (ok) out.possible_periods.push_back(q);
  }
  if (out.possible_periods.empty()) {
    out.status = FineWilfResult::Status::inconsistent;
    return out;
  }
  auto value_at = [&](const FineWilfCompletion& c, i64 i) -> char {
    i64 r = ((i % c.period) + c.period) % c.period;
    return c.block[static_cast<std::size_t>(r)];
  };
  auto same = [&](const FineWilfCompletion& a, const FineWilfCompletion& b) {
    i64 l = std::lcm(a.period, b.period);
    for (i64 i = 0; i < l; ++i)
      if (value_at(a, i) != value_at(b, i)) return false;
    return true;
  };
  for (i64 q : out.possible_periods) {
    FineWilfCompletion c{q, segment.substr(0, static_cast<std::size_t>(q))};
    bool dup = false;
    for (const auto& prev : out.completions)
      if (same(prev, c)) {
        dup = true;
        break;
      }
    if (!dup) out.completions.push_back(std::move(c));
  }
  if (out.completions.size() == 1) {
    out.status = FineWilfResult::Status::unique;
    out.minimal_period = out.possible_periods.front();
  } else {
    out.status = FineWilfResult::Status::ambiguous;
  }
  if (m >= 2 * p - 2 && out.status != FineWilfResult::Status::unique)
    fail(Errc::internal, "Fine-Wilf uniqueness failed on a long segment");
  return out;
}

PeriodScan detect_periods_2d(const WindowConfiguration& cfg) {
  PeriodScan scan;
  const Rect w = cfg.window();
  const i64 mx_max = w.width / 2, my_max = w.height / 2;
  std::vector<Vec> found;
  for (i64 my = 0; my <= my_max; ++my)
    for (i64 mx = -mx_max; mx <= mx_max; ++mx) {
      if (my == 0 && mx <= 0) continue;  // scan a half plane; mirror afterwards
      i64 ow = w.width - std::abs(mx), oh = w.height - my;
      if (2 * ow * oh < w.area()) continue;
      i64 x0 = w.x0 + std::max<i64>(0, -mx), x1 = w.x1() + std::min<i64>(0, -mx);
      bool ok = true;
      for (i64 y = w.y0; ok && y + my < w.y1(); ++y)
        for (i64 x = x0; x < x1; ++x)
          if (cfg.at({x, y}) != cfg.at({x + mx, y + my})) {
            ok = false;
            break;
          }
      if (ok) found.push_back({mx, my});
    }
  for (const auto& v : found) {
    scan.periods.push_back(v);
    scan.periods.push_back(-v);
  }
  std::sort(scan.periods.begin(), scan.periods.end());
  if (found.empty()) {
    scan.kind = PeriodScan::Kind::none;
    return scan;
  }
  Vec dir = primitive(found.front());
  bool collinear = true;
  for (const auto& v : found)
    if (cross(dir, v) != 0) collinear = false;
  if (collinear) {
    scan.kind = PeriodScan::Kind::singly;
    // orient canonically: y > 0, or y == 0 and x > 0
    if (dir.y < 0 || (dir.y == 0 && dir.x < 0)) dir = -dir;
    scan.direction = dir;
  } else {
    scan.kind = PeriodScan::Kind::doubly;
  }
  return scan;
}

}  // namespace nivat
