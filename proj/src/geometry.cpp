#include "nivat/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nivat {

i64 gcd_nonneg(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return std::gcd(a, b);
}

Vec primitive(Vec v) {
  if (v.x == 0 && v.y == 0) fail(Errc::invalid_argument, "zero vector has no direction");
  i64 g = gcd_nonneg(v.x, v.y);
  return {v.x / g, v.y / g};
}

Rational::Rational(i64 n, i64 d) : num(n), den(d) {
  if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = gcd_nonneg(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

i64 Rational::floor() const {
  i64 q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}
i64 Rational::ceil() const { return -Rational(-num, den).floor(); }

UnimodularMap::UnimodularMap(i64 a_, i64 b_, i64 c_, i64 d_, Vec t_)
    : a(a_), b(b_), c(c_), d(d_), t(t_) {
  if (a * d - b * c != 1) fail(Errc::invalid_argument, "matrix determinant must be +1");
}

UnimodularMap UnimodularMap::inverse() const {
  UnimodularMap inv(d, -b, -c, a);
  inv.t = {-(inv.a * t.x + inv.b * t.y), -(inv.c * t.x + inv.d * t.y)};
  return inv;
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
  UnimodularMap r(a * inner.a + b * inner.c, a * inner.b + b * inner.d,
                  c * inner.a + d * inner.c, c * inner.b + d * inner.d);
  r.t = apply(inner.t);
  return r;
}

namespace {

// Monotone chain; returns strict hull vertices in CCW order starting at the
// lexicographically smallest point.  Collinear inputs yield the two endpoints
// (or one point).
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticePoint> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && orient(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && orient(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  if (lower.size() == 1 && upper.size() == 1) {
    // all points collinear
    return {pts.front(), pts.back()};
  }
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

}  // namespace

ConvexLatticeSet ConvexLatticeSet::hull_of(std::span<const LatticePoint> pts) {
  if (pts.empty()) fail(Errc::invalid_argument, "empty point set");
  ConvexLatticeSet s;
  s.hull_ = convex_hull(std::vector<LatticePoint>(pts.begin(), pts.end()));
  if (s.hull_.size() == 1) {
    s.points_ = s.hull_;
    return s;
  }
  if (s.hull_.size() == 2) {
    // fill the segment
    LatticePoint a = s.hull_[0], b = s.hull_[1];
    Vec step = primitive(b - a);
    i64 n = gcd_nonneg(b.x - a.x, b.y - a.y);
    for (i64 i = 0; i <= n; ++i) s.points_.push_back(a + step * i);
    std::sort(s.points_.begin(), s.points_.end());
    return s;
  }
  // Fill conv(hull) ∩ Z² column by column: intersect each vertical line with
  // the hull edges, exactly.
  i64 xmin = s.hull_[0].x, xmax = s.hull_[0].x;
  for (const auto& v : s.hull_) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
  }
  const std::size_t m = s.hull_.size();
  for (i64 x = xmin; x <= xmax; ++x) {
    bool have = false;
    Rational lo, hi;
    for (std::size_t i = 0; i < m; ++i) {
      LatticePoint p = s.hull_[i], q = s.hull_[(i + 1) % m];
      if (p.x == q.x) {
        if (p.x != x) continue;
        Rational a(std::min(p.y, q.y)), b(std::max(p.y, q.y));
        if (!have) {
          lo = a;
          hi = b;
          have = true;
        } else {
          lo = std::min(lo, a, [](const Rational& u, const Rational& v) { return u < v; });
          hi = std::max(hi, b, [](const Rational& u, const Rational& v) { return u < v; });
        }
        continue;
      }
      i64 x0 = std::min(p.x, q.x), x1 = std::max(p.x, q.x);
      if (x < x0 || x > x1) continue;
      // y = p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x)
      Rational y = Rational(p.y) + Rational((x - p.x) * (q.y - p.y), q.x - p.x);
      if (!have) {
        lo = hi = y;
        have = true;
      } else {
        if (y < lo) lo = y;
        if (hi < y) hi = y;
      }
    }
    if (!have) continue;
    for (i64 y = lo.ceil(); y <= hi.floor(); ++y) s.points_.push_back({x, y});
  }
  std::sort(s.points_.begin(), s.points_.end());
  return s;
}

ConvexBuildResult convex_lattice_set(std::span<const LatticePoint> pts) {
  ConvexBuildResult r;
  r.set = ConvexLatticeSet::hull_of(pts);
  std::vector<LatticePoint> in(pts.begin(), pts.end());
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  r.input_was_convex = (in == r.set.points());
  return r;
}

bool ConvexLatticeSet::contains(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<DirectedEdge> ConvexLatticeSet::edges() const {
  std::vector<DirectedEdge> es;
  if (hull_.size() < 2) return es;
  if (hull_.size() == 2) {
    es.push_back({hull_[0], hull_[1]});
    es.push_back({hull_[1], hull_[0]});
    return es;
  }
  for (std::size_t i = 0; i < hull_.size(); ++i)
    es.push_back({hull_[i], hull_[(i + 1) % hull_.size()]});
  return es;
}

std::size_t ConvexLatticeSet::succ_index(std::size_t i) const {
  std::size_t m = hull_.size() < 2 ? 0 : (hull_.size() == 2 ? 2 : hull_.size());
  if (m == 0) fail(Errc::invalid_argument, "set has no edges");
  return (i + 1) % m;
}

std::size_t ConvexLatticeSet::pred_index(std::size_t i) const {
  std::size_t m = hull_.size() < 2 ? 0 : (hull_.size() == 2 ? 2 : hull_.size());
  if (m == 0) fail(Errc::invalid_argument, "set has no edges");
  return (i + m - 1) % m;
}

bool ConvexLatticeSet::is_collinear() const { return hull_.size() <= 2; }

i64 ConvexLatticeSet::area2() const {
  if (hull_.size() < 3) return 0;
  i64 s = 0;
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    const auto& p = hull_[i];
    const auto& q = hull_[(i + 1) % hull_.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;  // positive for CCW
}

i64 ConvexLatticeSet::boundary_lattice_count() const {
  if (hull_.size() == 1) return 1;
  if (hull_.size() == 2) {
    Vec d = hull_[1] - hull_[0];
    return gcd_nonneg(d.x, d.y) + 1;
  }
  i64 b = 0;
  for (std::size_t i = 0; i < hull_.size(); ++i) {
    Vec d = hull_[(i + 1) % hull_.size()] - hull_[i];
    b += gcd_nonneg(d.x, d.y);
  }
  return b;
}

ConvexLatticeSet ConvexLatticeSet::translated(const Vec& v) const {
  ConvexLatticeSet s(*this);
  for (auto& p : s.points_) p = p + v;
  for (auto& p : s.hull_) p = p + v;
  return s;
}

LatticePoint ConvexLatticeSet::min_corner() const {
  LatticePoint m = points_.front();
  for (const auto& p : points_) {
    m.x = std::min(m.x, p.x);
    m.y = std::min(m.y, p.y);
  }
  return m;
}

LatticePoint ConvexLatticeSet::max_corner() const {
  LatticePoint m = points_.front();
  for (const auto& p : points_) {
    m.x = std::max(m.x, p.x);
    m.y = std::max(m.y, p.y);
  }
  return m;
}

i64 directional_diameter(const ConvexLatticeSet& s, const DirectedRationalLine& v) {
  if (s.empty()) fail(Errc::invalid_argument, "empty set");
  Vec n = rot90(v.direction);
  std::set<i64> values;
  for (const auto& p : s.points()) values.insert(dot(n, p));
  return static_cast<i64>(values.size());
}

SupportLine support_line(const ConvexLatticeSet& s, const DirectedRationalLine& v) {
  if (s.empty()) fail(Errc::invalid_argument, "empty set");
  Vec dir = primitive(v.direction);
  Vec n = rot90(dir);  // points into the half plane
  i64 best = dot(n, s.points().front());
  for (const auto& p : s.points()) best = std::min(best, dot(n, p));
  std::vector<LatticePoint> on_line;
  for (const auto& p : s.points())
    if (dot(n, p) == best) on_line.push_back(p);
  SupportLine out;
  out.line = {dir, on_line.front()};
  if (on_line.size() == 1) {
    out.touch = on_line.front();
    return out;
  }
  // the matching boundary edge is the one with this direction
  for (const auto& e : s.edges()) {
    if (e.direction() == dir && dot(n, e.start) == best) {
      out.touch = e;
      return out;
    }
  }
  // collinear set viewed against its own direction
  out.touch = DirectedEdge{on_line.front(), on_line.back()};
  auto& e = std::get<DirectedEdge>(out.touch);
  if (e.direction() != dir) std::swap(e.start, e.end);
  return out;
}

UnimodularMap unimodular_to_vertical(const DirectedRationalLine& line) {
  Vec d = primitive(line.direction);
  // A(0,-1) = d forces b = -d.x, d22 = -d.y; det gives d.x*c - d.y*a = 1.
  i64 a0 = 0, c0 = 0;
  if (d.x == 0) {
    a0 = (d.y > 0) ? -1 : 1;  // -d.y * a = 1
    c0 = 0;
  } else if (d.y == 0) {
    c0 = (d.x > 0) ? 1 : -1;
    a0 = 0;
  } else {
    // extended gcd for d.x*c + (-d.y)*a = 1
    i64 x = d.x, y = -d.y;
    i64 old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      i64 q = old_r / r;
      std::swap(old_r -= q * r, r);
      std::swap(old_s -= q * s, s);
      std::swap(old_t -= q * t, t);
    }
    // old_r = gcd = ±1 since d primitive
    i64 g = old_r;
    c0 = old_s / g;
    a0 = old_t / g;
  }
  // general solution: a = a0 + k*d.x, c = c0 + k*d.y
  auto better = [](i64 u, i64 v) {  // is u a better canonical entry than v
    if (std::abs(u) != std::abs(v)) return std::abs(u) < std::abs(v);
    return u > v;
  };
  if (d.x != 0) {
    // minimize |a|
    i64 k = -(a0 / d.x);
    i64 best_a = a0 + k * d.x;
    for (i64 dk = -2; dk <= 2; ++dk) {
      i64 cand = a0 + (k + dk) * d.x;
      if (better(cand, best_a)) best_a = cand;
    }
    i64 kk = (best_a - a0) / d.x;
    a0 = best_a;
    c0 = c0 + kk * d.y;
  } else {
    // a fixed; minimize |c| over c0 + k*d.y
    i64 k = -(c0 / d.y);
    i64 best_c = c0 + k * d.y;
    for (i64 dk = -2; dk <= 2; ++dk) {
      i64 cand = c0 + (k + dk) * d.y;
      if (better(cand, best_c)) best_c = cand;
    }
    c0 = best_c;
  }
  return UnimodularMap(a0, -d.x, c0, -d.y);
}

ConvexLatticeSet apply_unimodular(const UnimodularMap& m, const ConvexLatticeSet& s) {
  std::vector<LatticePoint> pts;
  pts.reserve(s.size());
  for (const auto& p : s.points()) pts.push_back(m.apply(p));
  return ConvexLatticeSet::hull_of(pts);
}

namespace {

// Line through two lattice points, as y = slope*x + intercept (never vertical).
struct AffineLine {
  Rational slope;
  Rational intercept;
  static AffineLine through(const LatticePoint& p, const LatticePoint& q) {
    AffineLine l;
    l.slope = Rational(q.y - p.y, q.x - p.x);
    l.intercept = Rational(p.y) - l.slope * Rational(p.x);
    return l;
  }
  Rational at(i64 x) const { return slope * Rational(x) + intercept; }
};

}  // namespace

EdgeExtension ext_w(const ConvexLatticeSet& t, const DirectedEdge& w) {
  if (t.area2() == 0) fail(Errc::degenerate_set, "extension requires a positive-area hull");
  auto es = t.edges();
  std::size_t wi = es.size();
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i] == w) {
      wi = i;
      break;
    }
  if (wi == es.size()) fail(Errc::invalid_argument, "edge does not belong to the set");

  // Conjugate so that w points vertically downward along x = 0.
  UnimodularMap a_map = unimodular_to_vertical(DirectedRationalLine::through_origin(w.direction()));
  UnimodularMap to_vert = a_map.inverse();
  ConvexLatticeSet tv = apply_unimodular(to_vert, t);
  DirectedEdge wv{to_vert.apply(w.start), to_vert.apply(w.end)};
  i64 x0 = wv.start.x;

  auto esv = tv.edges();
  std::size_t wvi = esv.size();
  for (std::size_t i = 0; i < esv.size(); ++i)
    if (esv[i] == wv) {
      wvi = i;
      break;
    }
  if (wvi == esv.size()) fail(Errc::internal, "conjugated edge not found");
  const DirectedEdge pred = esv[tv.pred_index(wvi)];
  const DirectedEdge succ = esv[tv.succ_index(wvi)];
  AffineLine top = AffineLine::through(pred.start, pred.end);    // y = a x + b
  AffineLine bottom = AffineLine::through(succ.start, succ.end); // y = c x + d

  EdgeExtension out;
  out.extended = t;
  // integrality of a*x+b at x = x0+Δ needs q_a | Δ (b integral at x0), same
  // for c; the first candidate is Δ = -lcm.
  i64 qa = top.slope.den, qc = bottom.slope.den;
  i64 lcm = qa / std::gcd(qa, qc) * qc;
  i64 delta = -lcm;
  Rational width = top.at(x0 + delta) - bottom.at(x0 + delta);
  if (width < Rational(0)) return out;  // lines already crossed: no valid step

  std::vector<LatticePoint> pts(t.points().begin(), t.points().end());
  std::vector<LayerSegment> layers;
  for (i64 x = x0 - 1; x >= x0 + delta; --x) {
    i64 ylo = bottom.at(x).ceil();
    i64 yhi = top.at(x).floor();
    if (ylo > yhi) continue;  // empty column
    // oriented like w (downward in the chart)
    layers.push_back({a_map.apply({x, yhi}), a_map.apply({x, ylo})});
    for (i64 y = ylo; y <= yhi; ++y) pts.push_back(a_map.apply({x, y}));
  }
  out.depth = static_cast<int>(layers.size());
  out.layers = std::move(layers);
  if (out.depth > 0) out.extended = ConvexLatticeSet::hull_of(pts);
  return out;
}

BorderResult border(const ConvexLatticeSet& s, const DirectedEdge& w,
                    const ConvexLatticeSet& t, i64 g) {
  for (const auto& p : s.points())
    if (!t.contains(p)) fail(Errc::invalid_argument, "S must be contained in T");
  Vec dir = w.direction();
  // the edge of T parallel (same orientation) to w
  std::optional<DirectedEdge> wstar;
  for (const auto& e : t.edges())
    if (e.direction() == dir) {
      wstar = e;
      break;
    }
  if (!wstar) fail(Errc::invalid_argument, "T has no edge parallel to w");

  i64 span_t = gcd_nonneg(wstar->end.x - wstar->start.x, wstar->end.y - wstar->start.y);
  i64 span_s = gcd_nonneg(w.end.x - w.start.x, w.end.y - w.start.y);

  auto fits = [&](const Vec& v) {
    for (const auto& p : s.points())
      if (!t.contains(p + v)) return false;
    return true;
  };

  BorderResult out;
  out.step = dir;
  // translations mapping w into w*: v = (w*.start - w.start) + lambda*dir
  Vec base = wstar->start - w.start;
  for (i64 lam = 0; lam + span_s <= span_t; ++lam) {
    Vec v = base + dir * lam;
    if (fits(v)) out.translations.push_back(v);
  }
  if (out.translations.empty()) fail(Errc::empty_border, "no translate of S fits along the edge");

  std::set<LatticePoint> pts, interior;
  i64 n = static_cast<i64>(out.translations.size());
  for (i64 i = 0; i < n; ++i) {
    for (const auto& p : s.points()) {
      pts.insert(p + out.translations[i]);
      if (2 * g < n - 1 && i >= g && i <= n - 1 - g) interior.insert(p + out.translations[i]);
    }
  }
  out.border.assign(pts.begin(), pts.end());
  out.g_interior.assign(interior.begin(), interior.end());
  return out;
}

}  // namespace nivat
