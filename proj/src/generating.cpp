#include "nivat/generating.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nivat {

namespace {

// Distinct container patterns over the container's translate set.  Every
// discrepancy inside a search is a projection of this small list.
struct Basis {
  Shape container;
  Rect translates;
  Rect window;
  std::vector<std::string> patterns;  // distinct

  std::size_t index(const LatticePoint& p) const {
    auto i = container.index_of(p);
    if (!i) fail(Errc::internal, "point outside the container");
    return *i;
  }

  i64 pattern_count(const std::vector<LatticePoint>& pts) const {
    std::set<std::string> seen;
    std::string buf(pts.size(), '\0');
    std::vector<std::size_t> idx;
    idx.reserve(pts.size());
    for (const auto& p : pts) idx.push_back(index(p));
    for (const auto& pat : patterns) {
      for (std::size_t i = 0; i < idx.size(); ++i) buf[i] = pat[idx[i]];
      seen.insert(buf);
    }
    return static_cast<i64>(seen.size());
  }

  i64 d(const std::vector<LatticePoint>& pts) const {
    return pattern_count(pts) - static_cast<i64>(pts.size());
  }
  i64 d(const ConvexLatticeSet& s) const { return d(s.points()); }

  bool generated(const std::vector<LatticePoint>& pts, const LatticePoint& x) const {
    std::vector<std::size_t> idx;
    std::size_t xi = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      idx.push_back(index(pts[i]));
      if (pts[i] == x) xi = i;
    }
    if (xi == pts.size()) fail(Errc::invalid_argument, "x must belong to the set");
    std::map<std::string, char> rest;
    std::string buf;
    for (const auto& pat : patterns) {
      buf.clear();
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (i != xi) buf.push_back(pat[idx[i]]);
      auto [it, fresh] = rest.emplace(buf, pat[idx[xi]]);
      if (!fresh && it->second != pat[idx[xi]]) return false;
    }
    return true;
  }
};

Basis make_basis(const WindowConfiguration& cfg, const Shape& container) {
  Basis b;
  b.container = container;
  b.window = cfg.window();
  b.translates = translate_range(cfg.window(), container);
  if (b.translates.width <= 0 || b.translates.height <= 0)
    fail(Errc::shape_too_large, "container does not fit inside the window");
  b.patterns = collect_over(cfg, container, b.translates);
  return b;
}

ConvexLatticeSet without_point(const ConvexLatticeSet& s, const LatticePoint& x) {
  std::vector<LatticePoint> pts;
  pts.reserve(s.size() - 1);
  for (const auto& p : s.points())
    if (p != x) pts.push_back(p);
  return ConvexLatticeSet::hull_of(pts);
}

std::vector<LatticePoint> edge_points(const DirectedEdge& e) {
  std::vector<LatticePoint> pts;
  Vec step = e.direction();
  i64 n = gcd_nonneg(e.end.x - e.start.x, e.end.y - e.start.y);
  for (i64 i = 0; i <= n; ++i) pts.push_back(e.start + step * i);
  return pts;
}

std::optional<ConvexLatticeSet> without_edge(const ConvexLatticeSet& s, const DirectedEdge& e) {
  std::set<LatticePoint> drop;
  for (const auto& p : edge_points(e)) drop.insert(p);
  std::vector<LatticePoint> pts;
  for (const auto& p : s.points())
    if (!drop.count(p)) pts.push_back(p);
  if (pts.empty()) return std::nullopt;
  return ConvexLatticeSet::hull_of(pts);
}

// greedy minimal-set descent; `pins` survive every removal
ConvexLatticeSet descend_minimal(const Basis& basis, ConvexLatticeSet s, i64 target_d,
                                 const std::vector<LatticePoint>& pins = {}) {
  if (basis.d(s) > target_d)
    fail(Errc::no_such_subset, "container discrepancy exceeds the target");
  bool moved = true;
  while (moved && s.size() > 1) {
    moved = false;
    std::vector<LatticePoint> verts = s.extreme_points();
    std::sort(verts.begin(), verts.end());
    for (const auto& x : verts) {
      if (std::find(pins.begin(), pins.end(), x) != pins.end()) continue;
      ConvexLatticeSet t = without_point(s, x);
      if (basis.d(t) <= target_d) {
        s = std::move(t);
        moved = true;
        break;
      }
    }
  }
  return s;
}

// all nonempty proper convex subsets, by brute force (collinear sets have
// only contiguous runs; 2D sets are capped at |S| <= 18)
bool minimality_brute(const Basis& basis, const ConvexLatticeSet& s, i64 d_s,
                      ConvexLatticeSet* violator) {
  const auto& pts = s.points();
  const std::size_t n = pts.size();
  if (s.is_collinear()) {
    for (std::size_t lo = 0; lo < n; ++lo)
      for (std::size_t hi = lo; hi < n; ++hi) {
        if (lo == 0 && hi == n - 1) continue;
        std::vector<LatticePoint> sub(pts.begin() + lo, pts.begin() + hi + 1);
        if (basis.d(sub) <= d_s) {
          if (violator) *violator = ConvexLatticeSet::hull_of(sub);
          return false;
        }
      }
    return true;
  }
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<LatticePoint> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(pts[i]);
    ConvexLatticeSet t = ConvexLatticeSet::hull_of(sub);
    if (t.points() != sub) continue;  // not convex
    if (basis.d(t) <= d_s) {
      if (violator) *violator = std::move(t);
      return false;
    }
  }
  return true;
}

void fill_report_stats(const Basis& basis, GeneratingSetReport& r) {
  r.pattern_count = basis.pattern_count(r.set.points());
  r.discrepancy = r.pattern_count - static_cast<i64>(r.set.size());
  r.container = basis.container;
  r.translates = basis.translates;
  r.window = basis.window;
  r.generated_vertices.clear();
  r.ungenerated_vertices.clear();
  for (const auto& v : r.set.extreme_points()) {
    if (r.set.size() >= 2 && basis.generated(r.set.points(), v))
      r.generated_vertices.push_back(v);
    else if (r.set.size() >= 2)
      r.ungenerated_vertices.push_back(v);
    else
      r.generated_vertices.push_back(v);  // singleton: vacuous
  }
  r.edge_stats.clear();
  for (const auto& e : r.set.edges()) {
    EdgeStat st;
    st.edge = e;
    st.points_on_edge = e.lattice_count();
    if (auto rest = without_edge(r.set, e)) st.d_without = basis.d(*rest);
    r.edge_stats.push_back(st);
  }
}

// restore true minimality: restart the descent from any violating subset
ConvexLatticeSet minimal_generating(const Basis& basis, ConvexLatticeSet start, i64 target_d) {
  ConvexLatticeSet s = descend_minimal(basis, std::move(start), target_d);
  while (true) {
    i64 d_s = basis.d(s);
    if (s.size() <= 18 || s.is_collinear()) {
      ConvexLatticeSet violator;
      if (minimality_brute(basis, s, d_s, &violator)) return s;
      s = descend_minimal(basis, violator, basis.d(violator));
      continue;
    }
    // defining inequalities only: extreme points (hold at the descent
    // fixpoint) and whole-edge removals
    bool violated = false;
    for (const auto& e : s.edges()) {
      auto rest = without_edge(s, e);
      if (rest && basis.d(*rest) <= d_s) {
        s = descend_minimal(basis, *rest, basis.d(*rest));
        violated = true;
        break;
      }
    }
    if (!violated) return s;
  }
}

i64 detect_line_period(const WindowConfiguration& cfg, const Vec& dir, i64 max_period) {
  for (i64 p = 1; p <= max_period; ++p) {
    Vec shift = dir * p;
    bool ok = true;
    i64 checked = 0;
    const Rect w = cfg.window();
    for (i64 y = w.y0; ok && y < w.y1(); ++y)
      for (i64 x = w.x0; x < w.x1(); ++x) {
        LatticePoint q{x + shift.x, y + shift.y};
        if (!w.contains(q)) continue;
        ++checked;
        if (cfg.at({x, y}) != cfg.at(q)) {
          ok = false;
          break;
        }
      }
    if (ok && checked > 0) return p;
  }
  return 0;
}

}  // namespace

ConvexLatticeSet find_minimal_low_discrepancy(const WindowConfiguration& cfg,
                                              const ConvexLatticeSet& container, i64 target_d) {
  Shape shape{std::vector<LatticePoint>(container.points().begin(), container.points().end())};
  Basis basis = make_basis(cfg, shape);
  return descend_minimal(basis, container, target_d);
}

GeneratingSetReport find_generating_set(const WindowConfiguration& cfg, i64 n, i64 k) {
  Shape rect = Shape::rect(n, k);
  Basis basis = make_basis(cfg, rect);
  ConvexLatticeSet full = ConvexLatticeSet::hull_of(rect.points());
  i64 d0 = basis.d(full);
  if (d0 > 0)
    fail(Errc::hypothesis_fails,
         "D(R_{" + std::to_string(n) + "," + std::to_string(k) + "}) = " + std::to_string(d0) +
             " > 0");

  GeneratingSetReport r;
  r.kind = GeneratingSetReport::Kind::generating;
  r.set = minimal_generating(basis, full, d0);
  fill_report_stats(basis, r);

  // nested family of weak generating sets, D(S_j) = d0 + j - 1
  if (d0 <= -1) {
    ConvexLatticeSet cur = descend_minimal(basis, full, d0);
    r.nested_family.push_back(cur);
    for (i64 j = 1; j <= -d0 && cur.size() >= 2; ++j) {
      std::vector<LatticePoint> verts = cur.extreme_points();
      std::sort(verts.begin(), verts.end());
      ConvexLatticeSet stripped = without_point(cur, verts.front());
      if (stripped.empty()) break;
      cur = descend_minimal(basis, stripped, d0 + j);
      r.nested_family.push_back(cur);
    }
  }
  return r;
}

GeneratingSetReport find_strong_generating_set(const WindowConfiguration& cfg, i64 n, i64 k) {
  Shape rect = Shape::rect(n, k);
  Basis basis = make_basis(cfg, rect);
  ConvexLatticeSet full = ConvexLatticeSet::hull_of(rect.points());
  i64 p0 = basis.pattern_count(full.points());
  if (2 * p0 > n * k)
    fail(Errc::hypothesis_fails, "P(R_{" + std::to_string(n) + "," + std::to_string(k) +
                                     "}) = " + std::to_string(p0) + " > nk/2");

  GeneratingSetReport r;
  r.kind = GeneratingSetReport::Kind::strong;
  ConvexLatticeSet s = minimal_generating(basis, full, basis.d(full));

  while (true) {
    if (s.is_collinear() && s.size() >= 2) {
      r.status = GeneratingSetReport::Status::collapsed_to_segment;
      r.set = s;
      fill_report_stats(basis, r);
      Vec dir = primitive(s.points().back() - s.points().front());
      r.collapse_direction = dir;
      r.collapse_period = detect_line_period(cfg, dir, static_cast<i64>(s.size()));
      return r;
    }
    i64 d_s = basis.d(s);
    std::optional<DirectedEdge> bad;
    for (const auto& e : s.edges()) {
      auto rest = without_edge(s, e);
      if (!rest) continue;
      i64 need = d_s + (e.lattice_count() + 1) / 2;
      if (basis.d(*rest) < need) {
        if (!bad || std::make_pair(e.start, e.end) < std::make_pair(bad->start, bad->end))
          bad = e;
      }
    }
    if (!bad) break;
    ConvexLatticeSet rest = *without_edge(s, *bad);
    s = minimal_generating(basis, rest, basis.d(rest));
  }

  r.set = s;
  fill_report_stats(basis, r);
  r.cond_half_size = 2 * r.discrepancy <= -static_cast<i64>(s.size());
  bool cond2 = true;
  for (const auto& st : r.edge_stats)
    if (st.d_without && *st.d_without < r.discrepancy + (st.points_on_edge + 1) / 2) cond2 = false;
  r.cond_edge_removal = cond2;
  r.cond_minimality = (s.size() <= 18 || s.is_collinear())
                          ? minimality_brute(basis, s, r.discrepancy, nullptr)
                          : true;
  return r;
}

namespace {

GeneratingSetReport balanced_from_generating(const WindowConfiguration& cfg, i64 n, i64 k,
                                             const DirectedRationalLine& line) {
  GeneratingSetReport r = find_generating_set(cfg, n, k);
  r.kind = GeneratingSetReport::Kind::balanced;
  r.balanced_line = DirectedRationalLine::through_origin(line.direction);
  return r;
}

// verify the balanced-set conditions by direct enumeration
void verify_balanced(const Basis& basis, const DirectedRationalLine& line,
                     GeneratingSetReport& r) {
  const ConvexLatticeSet& s = r.set;
  Vec v = primitive(line.direction);
  Vec nvec = rot90(v);
  i64 best = dot(nvec, s.points().front());
  for (const auto& p : s.points()) best = std::min(best, dot(nvec, p));
  std::vector<LatticePoint> support;
  for (const auto& p : s.points())
    if (dot(nvec, p) == best) support.push_back(p);
  i64 need = static_cast<i64>(support.size()) - 1;

  std::map<i64, i64> per_line;
  for (const auto& p : s.points()) ++per_line[dot(nvec, p)];
  for (const auto& [c, cnt] : per_line)
    if (cnt < need) {
      r.status = GeneratingSetReport::Status::unverified;
      r.failing_condition = "line-count";
      return;
    }

  if (s.size() >= 2) {
    for (const auto& endpoint : {support.front(), support.back()}) {
      if (!basis.generated(s.points(), endpoint)) {
        r.status = GeneratingSetReport::Status::unverified;
        r.failing_condition = "support-endpoints-generated";
        return;
      }
    }
  }

  std::vector<LatticePoint> rest;
  for (const auto& p : s.points())
    if (dot(nvec, p) != best) rest.push_back(p);
  if (!rest.empty()) {
    ConvexLatticeSet without = ConvexLatticeSet::hull_of(rest);
    if (basis.d(without) <= basis.d(s)) {
      r.status = GeneratingSetReport::Status::unverified;
      r.failing_condition = "support-edge-removal-discrepancy";
      return;
    }
  }
}

}  // namespace

GeneratingSetReport find_balanced_set(const WindowConfiguration& cfg, i64 n, i64 k,
                                      const DirectedRationalLine& line) {
  Shape rect = Shape::rect(n, k);
  Basis basis = make_basis(cfg, rect);
  ConvexLatticeSet full = ConvexLatticeSet::hull_of(rect.points());
  i64 p0 = basis.pattern_count(full.points());
  if (2 * p0 > n * k)
    fail(Errc::hypothesis_fails, "P(R_{n,k}) = " + std::to_string(p0) + " > nk/2");

  Vec v = primitive(line.direction);

  // no translate of the line meets R_{n,k} twice: any generating set works
  if (std::abs(v.x) > n - 1 || std::abs(v.y) > k - 1) {
    GeneratingSetReport r = balanced_from_generating(cfg, n, k, line);
    verify_balanced(basis, line, r);
    return r;
  }

  if (v.y == 0 || v.x == 0) {
    // axis case: minimal sub-rectangle still satisfying the strong bound
    i64 np = n, kp = k;
    if (v.y == 0) {
      for (i64 cand = 1; cand <= k; ++cand) {
        Shape sub = Shape::rect(n, cand);
        i64 p = static_cast<i64>(collect_over(cfg, sub, translate_range(cfg.window(), sub)).size());
        if (2 * p <= n * cand) {
          kp = cand;
          break;
        }
      }
    } else {
      for (i64 cand = 1; cand <= n; ++cand) {
        Shape sub = Shape::rect(cand, k);
        i64 p = static_cast<i64>(collect_over(cfg, sub, translate_range(cfg.window(), sub)).size());
        if (2 * p <= cand * k) {
          np = cand;
          break;
        }
      }
    }
    Shape sub_rect = Shape::rect(np, kp);
    Basis sub_basis = make_basis(cfg, sub_rect);
    ConvexLatticeSet sub_full = ConvexLatticeSet::hull_of(sub_rect.points());
    i64 d_sub = sub_basis.d(sub_full);

    // strip the support row/column from its ends while the discrepancy
    // allows; the rest of the rectangle is pinned
    Vec nvec = rot90(v);
    i64 best = dot(nvec, sub_full.points().front());
    for (const auto& p : sub_full.points()) best = std::min(best, dot(nvec, p));
    std::vector<LatticePoint> pins;
    for (const auto& p : sub_full.points())
      if (dot(nvec, p) != best) pins.push_back(p);
    std::vector<LatticePoint> row;
    for (const auto& p : sub_full.points())
      if (dot(nvec, p) == best) row.push_back(p);

    ConvexLatticeSet s = sub_full;
    bool moved = true;
    while (moved) {
      moved = false;
      std::vector<LatticePoint> remaining;
      for (const auto& p : row)
        if (s.contains(p)) remaining.push_back(p);
      if (remaining.size() <= 1) break;  // keep the containment strict
      for (const auto& cand : {remaining.front(), remaining.back()}) {
        ConvexLatticeSet t = without_point(s, cand);
        if (sub_basis.d(t) <= d_sub) {
          s = std::move(t);
          moved = true;
          break;
        }
      }
    }

    GeneratingSetReport r;
    r.kind = GeneratingSetReport::Kind::balanced;
    r.balanced_line = DirectedRationalLine::through_origin(v);
    r.set = s;
    fill_report_stats(sub_basis, r);
    verify_balanced(sub_basis, line, r);
    return r;
  }

  // oblique case: cut along the support line through a corner
  ConvexLatticeSet r_set = full;
  Vec nvec = rot90(v);
  std::vector<LatticePoint> corners = {{0, 0}, {n - 1, 0}, {0, k - 1}, {n - 1, k - 1}};
  auto line_count = [&](const LatticePoint& c) {
    i64 cnt = 0;
    for (const auto& p : r_set.points())
      if (dot(nvec, p) == dot(nvec, c)) ++cnt;
    return cnt;
  };
  i64 max_count = 0;
  {
    std::map<i64, i64> hist;
    for (const auto& p : r_set.points()) ++hist[dot(nvec, p)];
    for (const auto& [c, cnt] : hist) max_count = std::max(max_count, cnt);
  }
  std::optional<LatticePoint> chosen;
  std::sort(corners.begin(), corners.end());
  for (const auto& c : corners) {
    if (line_count(c) != max_count) continue;
    i64 kept = 0;
    for (const auto& p : r_set.points())
      if (dot(nvec, p) >= dot(nvec, c)) ++kept;
    if (2 * (static_cast<i64>(r_set.size()) - kept) <= static_cast<i64>(r_set.size())) {
      chosen = c;
      break;
    }
  }
  if (!chosen) {
    GeneratingSetReport r;
    r.kind = GeneratingSetReport::Kind::balanced;
    r.status = GeneratingSetReport::Status::unverified;
    r.failing_condition = "corner-cut";
    r.balanced_line = DirectedRationalLine::through_origin(v);
    r.set = full;
    fill_report_stats(basis, r);
    return r;
  }

  std::vector<LatticePoint> kept_pts, on_line;
  i64 cut = dot(nvec, *chosen);
  for (const auto& p : r_set.points()) {
    if (dot(nvec, p) >= cut) kept_pts.push_back(p);
    if (dot(nvec, p) == cut) on_line.push_back(p);
  }
  ConvexLatticeSet s1 = ConvexLatticeSet::hull_of(kept_pts);
  // extremal points of the cut line inside the rectangle
  auto along = [&](const LatticePoint& p) { return dot(v, p); };
  LatticePoint a = on_line.front(), b = on_line.front();
  for (const auto& p : on_line) {
    if (along(p) < along(a)) a = p;
    if (along(p) > along(b)) b = p;
  }
  ConvexLatticeSet s2 = descend_minimal(basis, s1, basis.d(s1), {a, b});

  GeneratingSetReport r;
  r.kind = GeneratingSetReport::Kind::balanced;
  r.balanced_line = DirectedRationalLine::through_origin(v);
  if (s2.is_collinear()) {
    r.set = descend_minimal(basis, s2, basis.d(s2));
  } else {
    r.set = s2;
  }
  fill_report_stats(basis, r);
  verify_balanced(basis, line, r);
  return r;
}

GeneratingSetReport thin_generating_set(const WindowConfiguration& cfg,
                                        const ConvexLatticeSet& s) {
  Shape shape{std::vector<LatticePoint>(s.points().begin(), s.points().end())};
  Basis basis = make_basis(cfg, shape);
  i64 xmin = s.min_corner().x, xmax = s.max_corner().x;
  i64 width = xmax - xmin + 1;
  i64 d_cols = width / 2;

  GeneratingSetReport r;
  r.kind = GeneratingSetReport::Kind::thin;

  ConvexLatticeSet half;
  if (width == 1) {
    half = s;
  } else {
    std::vector<LatticePoint> left, right;
    for (const auto& p : s.points())
      (p.x < xmin + d_cols ? left : right).push_back(p);
    ConvexLatticeSet left_set = ConvexLatticeSet::hull_of(left);
    ConvexLatticeSet right_set = ConvexLatticeSet::hull_of(right);
    i64 d_left = basis.d(left_set), d_right = basis.d(right_set);
    if (2 * static_cast<i64>(left.size()) >= static_cast<i64>(s.size()) && d_left <= 0)
      half = left_set;
    else if (d_right <= 0)
      half = right_set;
    else if (d_left <= 0)
      half = left_set;
    else
      fail(Errc::hypothesis_fails, "neither half has nonpositive discrepancy");
  }

  r.set = minimal_generating(basis, half, basis.d(half));
  fill_report_stats(basis, r);

  DirectedRationalLine vertical = DirectedRationalLine::through_origin({0, 1});
  i64 diam_s = directional_diameter(s, vertical);
  i64 diam_r = directional_diameter(r.set, vertical);
  if (diam_r > (diam_s + 1) / 2) fail(Errc::internal, "thin diameter bound violated");
  return r;
}

}  // namespace nivat
