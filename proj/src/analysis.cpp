#include "nivat/analysis.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace nivat {

using nlohmann::json;

namespace {

json point_json(const LatticePoint& p) { return json::array({p.x, p.y}); }

json rect_json(const Rect& r) {
  return json{{"x0", r.x0}, {"y0", r.y0}, {"width", r.width}, {"height", r.height}};
}

json pairs_json(const std::vector<std::pair<i64, i64>>& v) {
  json a = json::array();
  for (const auto& [n, k] : v) a.push_back(json::array({n, k}));
  return a;
}

json set_json(const ConvexLatticeSet& s) {
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back(point_json(p));
  json hull = json::array();
  for (const auto& p : s.hull_vertices()) hull.push_back(point_json(p));
  return json{{"points", pts}, {"hull", hull}};
}

const char* kind_name(GeneratingSetReport::Kind k) {
  switch (k) {
    case GeneratingSetReport::Kind::weak: return "weak";
    case GeneratingSetReport::Kind::generating: return "generating";
    case GeneratingSetReport::Kind::strong: return "strong";
    case GeneratingSetReport::Kind::balanced: return "balanced";
    case GeneratingSetReport::Kind::thin: return "thin";
  }
  return "?";
}

const char* status_name(GeneratingSetReport::Status s) {
  switch (s) {
    case GeneratingSetReport::Status::ok: return "ok";
    case GeneratingSetReport::Status::collapsed_to_segment: return "collapsed_to_segment";
    case GeneratingSetReport::Status::unverified: return "unverified";
  }
  return "?";
}

json generating_json(const GeneratingSetReport& r) {
  json j;
  j["kind"] = kind_name(r.kind);
  j["status"] = status_name(r.status);
  j["set"] = set_json(r.set);
  j["pattern_count"] = r.pattern_count;
  j["discrepancy"] = r.discrepancy;
  j["window"] = rect_json(r.window);
  json gv = json::array();
  for (const auto& p : r.generated_vertices) gv.push_back(point_json(p));
  j["generated_vertices"] = gv;
  json uv = json::array();
  for (const auto& p : r.ungenerated_vertices) uv.push_back(point_json(p));
  j["ungenerated_vertices"] = uv;
  json es = json::array();
  for (const auto& st : r.edge_stats) {
    json e;
    e["from"] = point_json(st.edge.start);
    e["to"] = point_json(st.edge.end);
    e["points_on_edge"] = st.points_on_edge;
    if (st.d_without) e["d_without"] = *st.d_without;
    es.push_back(e);
  }
  j["edge_stats"] = es;
  if (!r.nested_family.empty()) {
    json nf = json::array();
    for (const auto& s : r.nested_family) nf.push_back(set_json(s));
    j["nested_family"] = nf;
  }
  if (r.balanced_line)
    j["balanced_line"] = point_json(r.balanced_line->direction);
  if (!r.failing_condition.empty()) j["failing_condition"] = r.failing_condition;
  if (r.collapse_direction) {
    j["collapse_direction"] = point_json(*r.collapse_direction);
    j["collapse_period"] = r.collapse_period;
  }
  if (r.cond_half_size) j["cond_half_size"] = *r.cond_half_size;
  if (r.cond_edge_removal) j["cond_edge_removal"] = *r.cond_edge_removal;
  if (r.cond_minimality) j["cond_minimality"] = *r.cond_minimality;
  return j;
}

json trichotomy_json(const TrichotomyVerdict& v) {
  json j;
  j["case"] = trichotomy_case_name(v.verdict);
  json dirs = json::array();
  for (const auto& d : v.scan.directions) {
    json e;
    e["dx"] = d.direction.direction.x;
    e["dy"] = d.direction.direction.y;
    e["verdict"] = certificate_verdict_name(d.certificate.verdict);
    e["a"] = d.certificate.a;
    e["b"] = d.certificate.b;
    dirs.push_back(e);
  }
  j["directions"] = dirs;
  json periods = json::array();
  for (const auto& m : v.periods.periods) periods.push_back(point_json(m));
  j["periods"] = periods;
  if (v.nonexpansive_line) j["nonexpansive_line"] = point_json(*v.nonexpansive_line);
  if (v.generating) j["generating_set"] = generating_json(*v.generating);
  if (v.hit) j["hit"] = json::array({v.hit->first, v.hit->second});
  j["strong_hit"] = v.strong_hit;
  j["window"] = rect_json(v.window);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

json entropy_json(const EntropyBoundReport& e) {
  json rows = json::array();
  for (const auto& r : e.rows)
    rows.push_back(json{{"np", r.np},
                        {"p", r.p},
                        {"exponent", r.exponent},
                        {"in_hypothesis", r.in_hypothesis},
                        {"holds", r.holds}});
  return json{{"rows", rows}, {"holds_in_hypothesis", e.holds_in_hypothesis}};
}

}  // namespace

std::string trichotomy_case_name(TrichotomyVerdict::Case c) {
  switch (c) {
    case TrichotomyVerdict::Case::doubly_periodic: return "doubly_periodic";
    case TrichotomyVerdict::Case::singly_periodic: return "singly_periodic";
    case TrichotomyVerdict::Case::multiple_nonexpansive: return "multiple_nonexpansive";
    case TrichotomyVerdict::Case::no_hypothesis: return "no_hypothesis";
    case TrichotomyVerdict::Case::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string certificate_verdict_name(ExpansivenessCertificate::Verdict v) {
  switch (v) {
    case ExpansivenessCertificate::Verdict::expansive_at: return "expansive_at";
    case ExpansivenessCertificate::Verdict::nonexpansive_at: return "nonexpansive_at";
    case ExpansivenessCertificate::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

AnalysisReport run_analysis(const WindowConfiguration& cfg, const AnalysisRequest& req) {
  if (req.max_n < 1 || req.max_k < 1) fail(Errc::invalid_argument, "table bounds must be positive");
  AnalysisReport rep;
  rep.window = cfg.window();
  rep.alphabet = cfg.alphabet().symbols();

  rep.table = rect_complexity_table(cfg, req.max_n, req.max_k);
  for (i64 k = 1; k <= req.max_k; ++k)
    for (i64 n = 1; n <= req.max_n; ++n) {
      i64 p = rep.table->at(n, k);
      if (p <= n * k) rep.hits.push_back({n, k});
      if (2 * p <= n * k) rep.strong_hits.push_back({n, k});
    }
  rep.any_hit = !rep.hits.empty();

  if (req.want_trichotomy) {
    rep.trichotomy = classify_trichotomy(cfg, req.max_n, req.max_k, req.budget);
    if (rep.trichotomy->generating && req.want_generating)
      rep.generating = rep.trichotomy->generating;
  } else if (req.want_generating && rep.any_hit) {
    const auto& h = rep.hits.front();
    rep.generating = find_generating_set(cfg, h.first, h.second);
  }
  if (!rep.any_hit)
    rep.notes.push_back("no (n,k) with P <= nk inside the requested table: hypothesis fails");

  if (req.balanced_direction) {
    if (rep.strong_hits.empty()) {
      rep.notes.push_back("balanced set skipped: no strong hit P <= nk/2");
    } else {
      auto best = rep.strong_hits.front();
      for (const auto& h : rep.strong_hits)
        if (h.first >= 2 && h.second >= 2 &&
            (best.first < 2 || best.second < 2 ||
             h.first * h.second < best.first * best.second))
          best = h;
      rep.balanced = find_balanced_set(cfg, best.first, best.second,
                                       DirectedRationalLine::through_origin(*req.balanced_direction));
    }
  }

  if (req.entropy_nk)
    rep.entropy =
        entropy_bound_check(cfg, req.entropy_nk->first, req.entropy_nk->second, req.entropy_max_np);
  return rep;
}

std::string emit(const AnalysisReport& rep, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "n,k,P,D\n";
    if (rep.table)
      for (i64 k = 1; k <= rep.table->max_k; ++k)
        for (i64 n = 1; n <= rep.table->max_n; ++n)
          out << n << "," << k << "," << rep.table->at(n, k) << ","
              << (rep.table->at(n, k) - n * k) << "\n";
    return out.str();
  }

  if (format == OutputFormat::json) {
    json j;
    j["schema"] = 1;
    j["window"] = rect_json(rep.window);
    j["alphabet"] = rep.alphabet;
    j["window_relative"] = true;
    if (rep.table) {
      json t;
      t["max_n"] = rep.table->max_n;
      t["max_k"] = rep.table->max_k;
      json rows = json::array();
      for (i64 k = 1; k <= rep.table->max_k; ++k) {
        json row = json::array();
        for (i64 n = 1; n <= rep.table->max_n; ++n) row.push_back(rep.table->at(n, k));
        rows.push_back(row);
      }
      t["p"] = rows;
      j["complexity"] = t;
    }
    j["hits"] = pairs_json(rep.hits);
    j["strong_hits"] = pairs_json(rep.strong_hits);
    if (rep.generating) j["generating"] = generating_json(*rep.generating);
    if (rep.balanced) j["balanced"] = generating_json(*rep.balanced);
    if (rep.trichotomy) j["trichotomy"] = trichotomy_json(*rep.trichotomy);
    if (rep.entropy) j["entropy"] = entropy_json(*rep.entropy);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "window: [" << rep.window.x0 << "," << rep.window.x1() << ") x [" << rep.window.y0 << ","
      << rep.window.y1() << ")  alphabet: " << rep.alphabet << "\n";
  if (rep.table) {
    out << "\nP(n,k) table (rows k=1.." << rep.table->max_k << ", cols n=1.." << rep.table->max_n
        << "):\n";
    std::size_t width = 1;
    for (i64 k = 1; k <= rep.table->max_k; ++k)
      for (i64 n = 1; n <= rep.table->max_n; ++n)
        width = std::max(width, std::to_string(rep.table->at(n, k)).size());
    for (i64 k = 1; k <= rep.table->max_k; ++k) {
      out << "  k=" << k << ":";
      for (i64 n = 1; n <= rep.table->max_n; ++n) {
        std::string cell = std::to_string(rep.table->at(n, k));
        out << " " << std::string(width - cell.size(), ' ') << cell;
      }
      out << "\n";
    }
  }
  auto pair_list = [](const std::vector<std::pair<i64, i64>>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s << (i ? " " : "") << "(" << v[i].first << "," << v[i].second << ")";
    return s.str();
  };
  out << "\nhits (P<=nk): " << (rep.hits.empty() ? "none" : pair_list(rep.hits)) << "\n";
  out << "strong hits (P<=nk/2): "
      << (rep.strong_hits.empty() ? "none" : pair_list(rep.strong_hits)) << "\n";
  if (rep.generating) {
    const auto& g = *rep.generating;
    out << "\ngenerating set (" << kind_name(g.kind) << ", " << status_name(g.status)
        << "): " << g.set.size() << " points, P=" << g.pattern_count << ", D=" << g.discrepancy
        << "\n  points:";
    for (const auto& p : g.set.points()) out << " (" << p.x << "," << p.y << ")";
    out << "\n";
  }
  if (rep.balanced) {
    const auto& b = *rep.balanced;
    out << "balanced set (" << status_name(b.status) << "): " << b.set.size()
        << " points, D=" << b.discrepancy;
    if (b.balanced_line)
      out << ", line=(" << b.balanced_line->direction.x << "," << b.balanced_line->direction.y
          << ")";
    if (!b.failing_condition.empty()) out << ", failing=" << b.failing_condition;
    out << "\n";
  }
  if (rep.trichotomy) {
    const auto& t = *rep.trichotomy;
    out << "\ntrichotomy: " << trichotomy_case_name(t.verdict);
    if (t.nonexpansive_line)
      out << "  line=(" << t.nonexpansive_line->x << "," << t.nonexpansive_line->y << ")";
    if (t.hit) out << "  via (n,k)=(" << t.hit->first << "," << t.hit->second << ")";
    out << "\n";
    for (const auto& d : t.scan.directions) {
      out << "  dir (" << d.direction.direction.x << "," << d.direction.direction.y
          << "): " << certificate_verdict_name(d.certificate.verdict) << "(a=" << d.certificate.a
          << ",b=" << d.certificate.b << ")\n";
    }
    out << "  periods:";
    if (t.periods.periods.empty()) out << " none";
    for (const auto& m : t.periods.periods) out << " (" << m.x << "," << m.y << ")";
    out << "\n";
    for (const auto& nte : t.notes) out << "  note: " << nte << "\n";
  }
  if (rep.entropy) {
    out << "\nentropy bound: "
        << (rep.entropy->holds_in_hypothesis ? "holds in hypothesis range" : "VIOLATED") << "\n";
    for (const auto& r : rep.entropy->rows)
      out << "  n'=" << r.np << " P=" << r.p << " exponent=" << r.exponent
          << (r.in_hypothesis ? " [hyp]" : "") << (r.holds ? " ok" : " fail") << "\n";
  }
  for (const auto& nte : rep.notes) out << "note: " << nte << "\n";
  return out.str();
}

DeduceDemoReport deduce_demo(const WindowConfiguration& cfg, i64 n, i64 k, i64 seed_w, i64 seed_h,
                             bool trace) {
  DeduceDemoReport rep;
  const Rect w = cfg.window();
  rep.frame = w;
  seed_w = std::min(seed_w, w.width);
  seed_h = std::min(seed_h, w.height);
  rep.seed = Rect{w.x0 + (w.width - seed_w) / 2, w.y0 + (w.height - seed_h) / 2, seed_w, seed_h};

  std::vector<PatternLanguage> langs;
  GeneratingSetReport g1 = find_generating_set(cfg, n, k);
  langs.push_back(collect_patterns(
      cfg, Shape{std::vector<LatticePoint>(g1.set.points().begin(), g1.set.points().end())}));
  GeneratingSetReport g2 = find_generating_set(cfg, k, n);
  langs.push_back(collect_patterns(
      cfg, Shape{std::vector<LatticePoint>(g2.set.points().begin(), g2.set.points().end())}));

  PartialColoring start(w);
  for (i64 y = rep.seed.y0; y < rep.seed.y1(); ++y)
    for (i64 x = rep.seed.x0; x < rep.seed.x1(); ++x) start.set({x, y}, cfg.symbol_at({x, y}));

  DeduceOptions opts;
  opts.trace = trace;
  DeductionOutcome out = deduce_fixpoint(langs, start, opts);
  rep.forced = out.steps;
  rep.trace = std::move(out.trace);
  switch (out.status) {
    case DeductionOutcome::Status::completed: rep.status = "completed"; break;
    case DeductionOutcome::Status::ambiguous: rep.status = "ambiguous"; break;
    case DeductionOutcome::Status::contradiction: rep.status = "contradiction"; break;
    case DeductionOutcome::Status::stalled: rep.status = "stalled"; break;
  }
  for (i64 y = w.y0; y < w.y1(); ++y)
    for (i64 x = w.x0; x < w.x1(); ++x) {
      if (!out.final.colored({x, y}))
        ++rep.unknown;
      else if (out.final.at({x, y}) != cfg.symbol_at({x, y}))
        ++rep.mismatches;
    }
  return rep;
}

std::string render_deduce_demo(const DeduceDemoReport& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    json j;
    j["schema"] = 1;
    j["frame"] = rect_json(r.frame);
    j["seed"] = rect_json(r.seed);
    j["forced"] = r.forced;
    j["unknown"] = r.unknown;
    j["mismatches"] = r.mismatches;
    j["status"] = r.status;
    if (!r.trace.empty()) j["trace"] = r.trace;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "deduce: status=" << r.status << " forced=" << r.forced << " unknown=" << r.unknown
      << " mismatches=" << r.mismatches << "\n";
  for (const auto& t : r.trace) out << t << "\n";
  return out.str();
}

std::string render_fine_wilf(const FineWilfResult& r, OutputFormat format) {
  const char* status = r.status == FineWilfResult::Status::unique        ? "unique"
                       : r.status == FineWilfResult::Status::ambiguous   ? "ambiguous"
                                                                         : "inconsistent";
  if (format == OutputFormat::json) {
    json j;
    j["schema"] = 1;
    j["status"] = status;
    j["possible_periods"] = r.possible_periods;
    json cs = json::array();
    for (const auto& c : r.completions) cs.push_back(json{{"period", c.period}, {"block", c.block}});
    j["completions"] = cs;
    if (r.status == FineWilfResult::Status::unique) j["minimal_period"] = r.minimal_period;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "finewilf: " << status;
  if (r.status == FineWilfResult::Status::unique) out << " minimal_period=" << r.minimal_period;
  out << "\npossible periods:";
  for (i64 q : r.possible_periods) out << " " << q;
  out << "\n";
  for (const auto& c : r.completions)
    out << "  period " << c.period << ": block \"" << c.block << "\"\n";
  return out.str();
}

std::string render_morse_hedlund(const MorseHedlundVerdict& v, OutputFormat format) {
  const char* status = v.status == MorseHedlundVerdict::Status::periodic ? "periodic"
                       : v.status == MorseHedlundVerdict::Status::not_applicable
                           ? "not_applicable"
                           : "short_domain_no_period";
  if (format == OutputFormat::json) {
    json j;
    j["schema"] = 1;
    j["status"] = status;
    j["complexity"] = v.complexity;
    if (v.status == MorseHedlundVerdict::Status::periodic) {
      j["period"] = v.period;
      j["interval"] = json::array({v.interval_begin, v.interval_end});
      j["guaranteed"] = v.guaranteed;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "morsehedlund: " << status << " P=" << v.complexity;
  if (v.status == MorseHedlundVerdict::Status::periodic)
    out << " period=" << v.period << " interval=[" << v.interval_begin << "," << v.interval_end
        << "]" << (v.guaranteed ? " (guaranteed)" : " (short domain)");
  out << "\n";
  return out.str();
}

}  // namespace nivat
