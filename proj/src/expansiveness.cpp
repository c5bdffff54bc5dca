#include "nivat/expansiveness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nivat {

std::vector<DirectedRationalLine> candidate_directions(const GeneratingSetReport& report, i64 n,
                                                       i64 k) {
  std::set<Vec> dirs;
  for (const auto& e : report.set.edges()) {
    dirs.insert(e.direction());
    dirs.insert(-e.direction());
  }
  // axis safety net
  dirs.insert({0, 1});
  dirs.insert({0, -1});
  dirs.insert({1, 0});
  dirs.insert({-1, 0});

  std::vector<Vec> kept;
  for (const auto& d : dirs)
    if (std::abs(d.x) <= n - 1 && std::abs(d.y) <= k - 1) kept.push_back(d);
  std::sort(kept.begin(), kept.end(), [](const Vec& a, const Vec& b) {
    return std::make_tuple(std::abs(a.x), std::abs(a.y), a.x, a.y) <
           std::make_tuple(std::abs(b.x), std::abs(b.y), b.x, b.y);
  });
  std::vector<DirectedRationalLine> out;
  for (const auto& d : kept) out.push_back(DirectedRationalLine::through_origin(d));
  return out;
}

ExpansivenessCertificate expansive_certificate(const WindowConfiguration& cfg,
                                               const DirectedRationalLine& line, i64 a, i64 b) {
  if (a < 1 || b < 1) fail(Errc::invalid_argument, "certificate parameters must be positive");
  ExpansivenessCertificate cert;
  cert.direction = DirectedRationalLine::through_origin(line.direction);
  cert.map = unimodular_to_vertical(cert.direction);
  cert.a = a;
  cert.b = b;

  // image of the context [0,a]x[-b,b] and the probe (-1,0) under A
  std::vector<LatticePoint> full_pts;
  for (i64 x = 0; x <= a; ++x)
    for (i64 y = -b; y <= b; ++y) full_pts.push_back(cert.map.apply({x, y}));
  LatticePoint probe = cert.map.apply({-1, 0});
  full_pts.push_back(probe);
  Shape full{std::move(full_pts)};
  auto probe_idx = full.index_of(probe);

  Rect tr = translate_range(cfg.window(), full);
  if (tr.width <= 0 || tr.height <= 0) {
    cert.verdict = ExpansivenessCertificate::Verdict::inconclusive;
    return cert;
  }
  cert.translates_observed = tr.width * tr.height;

  std::vector<std::string> patterns = collect_over(cfg, full, tr);
  std::map<std::string, const std::string*> rest_to_pattern;
  for (const auto& pat : patterns) {
    std::string rest = pat;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*probe_idx));
    auto [it, fresh] = rest_to_pattern.emplace(rest, &pat);
    if (!fresh && (*it->second)[*probe_idx] != pat[*probe_idx]) {
      cert.verdict = ExpansivenessCertificate::Verdict::nonexpansive_at;
      cert.witness = {*it->second, pat};
      return cert;
    }
  }
  cert.verdict = ExpansivenessCertificate::Verdict::expansive_at;
  return cert;
}

NonexpansiveScan scan_nonexpansive(const WindowConfiguration& cfg,
                                   const GeneratingSetReport& report, i64 n, i64 k,
                                   Budget budget) {
  NonexpansiveScan scan;
  std::vector<std::pair<i64, i64>> schedule;
  for (i64 s = 1; s <= std::max(budget.a, budget.b); s *= 2)
    schedule.push_back({std::min(s, budget.a), std::min(s, budget.b)});
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());

  for (const auto& dir : candidate_directions(report, n, k)) {
    DirectionScanResult res;
    res.direction = dir;
    bool have = false;
    for (const auto& [a, b] : schedule) {
      ExpansivenessCertificate cert = expansive_certificate(cfg, dir, a, b);
      if (cert.verdict == ExpansivenessCertificate::Verdict::inconclusive) {
        if (!have) res.certificate = cert;
        break;  // larger contexts cannot fit either
      }
      res.certificate = cert;
      have = true;
      if (cert.verdict == ExpansivenessCertificate::Verdict::expansive_at) {
        res.resolved_expansive = true;
        break;
      }
    }
    scan.directions.push_back(std::move(res));
  }

  // antiparallel pairing: a nonexpansive-up-to-budget direction whose
  // reverse resolved expansive is suspicious
  for (const auto& r : scan.directions) {
    if (r.certificate.verdict != ExpansivenessCertificate::Verdict::nonexpansive_at) continue;
    Vec rev = -r.direction.direction;
    for (const auto& other : scan.directions)
      if (other.direction.direction == rev && other.resolved_expansive)
        scan.antiparallel_violations.push_back(r.direction);
  }
  return scan;
}

TrichotomyVerdict classify_trichotomy(const WindowConfiguration& cfg, i64 n, i64 k,
                                      Budget budget) {
  TrichotomyVerdict v;
  v.window = cfg.window();
  i64 max_n = std::min(n, cfg.width()), max_k = std::min(k, cfg.height());
  RectComplexityTable table = rect_complexity_table(cfg, max_n, max_k);
  for (i64 kk = 1; kk <= max_k; ++kk)
    for (i64 nn = 1; nn <= max_n; ++nn) {
      i64 p = table.at(nn, kk);
      if (p <= nn * kk) v.hits.push_back({nn, kk});
      if (2 * p <= nn * kk) v.strong_hits.push_back({nn, kk});
    }
  if (v.hits.empty()) {
    v.verdict = TrichotomyVerdict::Case::no_hypothesis;
    return v;
  }

  // prefer strong hits and genuinely two-dimensional rectangles, then area
  auto pick = [](const std::vector<std::pair<i64, i64>>& pool,
                 bool need_2d) -> std::optional<std::pair<i64, i64>> {
    std::optional<std::pair<i64, i64>> best;
    for (const auto& h : pool) {
      if (need_2d && (h.first < 2 || h.second < 2)) continue;
      if (!best || std::make_tuple(h.first * h.second, h.first, h.second) <
                       std::make_tuple(best->first * best->second, best->first, best->second))
        best = h;
    }
    return best;
  };
  std::optional<std::pair<i64, i64>> hit = pick(v.strong_hits, true);
  if (!hit) hit = pick(v.strong_hits, false);
  if (hit) v.strong_hit = true;
  if (!hit) hit = pick(v.hits, true);
  if (!hit) hit = pick(v.hits, false);
  v.hit = hit;

  v.generating = find_generating_set(cfg, hit->first, hit->second);
  v.scan = scan_nonexpansive(cfg, *v.generating, hit->first, hit->second, budget);
  v.periods = detect_periods_2d(cfg);

  auto canonical_line = [](Vec d) {
    if (d.y < 0 || (d.y == 0 && d.x < 0)) d = -d;
    return d;
  };
  std::set<Vec> nonexp_lines;
  bool all_expansive = true;
  for (const auto& r : v.scan.directions) {
    if (r.resolved_expansive) continue;
    all_expansive = false;
    if (r.certificate.verdict == ExpansivenessCertificate::Verdict::nonexpansive_at)
      nonexp_lines.insert(canonical_line(r.direction.direction));
  }

  if (all_expansive) {
    if (v.periods.kind == PeriodScan::Kind::doubly) {
      v.verdict = TrichotomyVerdict::Case::doubly_periodic;
    } else {
      v.verdict = TrichotomyVerdict::Case::inconclusive;
      v.notes.push_back("all candidate directions expansive but window periods not doubly");
    }
    return v;
  }
  if (nonexp_lines.size() == 1) {
    Vec line = *nonexp_lines.begin();
    bool periods_on_line = v.periods.kind != PeriodScan::Kind::none;
    for (const auto& m : v.periods.periods)
      if (cross(line, m) != 0) periods_on_line = false;
    if (periods_on_line) {
      v.verdict = TrichotomyVerdict::Case::singly_periodic;
      v.nonexpansive_line = line;
    } else {
      v.verdict = TrichotomyVerdict::Case::inconclusive;
      v.notes.push_back("one nonexpansive line but period evidence inconsistent");
    }
    return v;
  }
  if (nonexp_lines.size() >= 2) {
    v.verdict = TrichotomyVerdict::Case::multiple_nonexpansive;
    if (v.strong_hit)
      v.notes.push_back(
          "two nonexpansive lines under a strong hit: impossible for the infinite "
          "configuration, reported as a window artifact");
    return v;
  }
  v.verdict = TrichotomyVerdict::Case::inconclusive;
  v.notes.push_back("unresolved directions at the window/budget");
  return v;
}

}  // namespace nivat
