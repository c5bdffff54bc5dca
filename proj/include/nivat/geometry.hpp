#pragma once

// Exact integer/rational geometry of finite convex lattice sets: hulls,
// oriented boundary edges, support lines, SL2(Z) changes of coordinates,
// edge extensions and borders.  All arithmetic is exact; there is no
// floating point in this module.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nivat/errors.hpp"

namespace nivat {

using i64 = std::int64_t;

struct LatticePoint {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
  LatticePoint operator-() const { return {-x, -y}; }
  LatticePoint operator*(i64 k) const { return {x * k, y * k}; }
};
using Vec = LatticePoint;

i64 gcd_nonneg(i64 a, i64 b);

// cross((b-a),(c-a)); > 0 when a,b,c make a left (counterclockwise) turn.
inline i64 cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
inline i64 orient(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return cross(b - a, c - a);
}
inline i64 dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }

/// Primitive representative of a nonzero integer vector.
Vec primitive(Vec v);

/// Rotate by +90 degrees (counterclockwise).
inline Vec rot90(const Vec& v) { return {-v.y, v.x}; }

/// Exact rational on int64, always normalized with positive denominator.
struct Rational {
  i64 num = 0;
  i64 den = 1;
  Rational() = default;
  Rational(i64 n) : num(n), den(1) {}
  Rational(i64 n, i64 d);
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  friend bool operator==(const Rational&, const Rational&) = default;
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
  bool is_integer() const { return den == 1; }
  i64 floor() const;
  i64 ceil() const;
};

/// Oriented rational line: a primitive direction plus a point it passes through.
struct DirectedRationalLine {
  Vec direction;                 // primitive, nonzero; orientation matters
  LatticePoint anchor{0, 0};
  static DirectedRationalLine through_origin(Vec dir) {
    return {primitive(dir), {0, 0}};
  }
  friend bool operator==(const DirectedRationalLine&, const DirectedRationalLine&) = default;
};

struct DirectedEdge {
  LatticePoint start;
  LatticePoint end;
  Vec direction() const { return primitive(end - start); }
  /// Number of lattice points on the closed segment.
  i64 lattice_count() const {
    Vec d = end - start;
    return gcd_nonneg(d.x, d.y) + 1;
  }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Element of SL2(Z) with an optional translation part.
/// apply(p) = M p + t with M = [[a b],[c d]], det M = +1.
struct UnimodularMap {
  i64 a = 1, b = 0, c = 0, d = 1;
  Vec t{0, 0};
  UnimodularMap() = default;
  UnimodularMap(i64 a_, i64 b_, i64 c_, i64 d_, Vec t_ = {0, 0});
  LatticePoint apply(const LatticePoint& p) const {
    return {a * p.x + b * p.y + t.x, c * p.x + d * p.y + t.y};
  }
  Vec apply_vector(const Vec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  UnimodularMap inverse() const;
  UnimodularMap compose(const UnimodularMap& inner) const;  // this ∘ inner
  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

/// Finite convex subset of Z^2: the full lattice-point set together with its
/// counterclockwise hull.  Degenerate (collinear) sets carry the two
/// oppositely directed copies of their segment as edges; a single point has
/// no edges.
class ConvexLatticeSet {
 public:
  ConvexLatticeSet() = default;

  /// Smallest convex lattice set containing `pts` (hull + interior fill).
  static ConvexLatticeSet hull_of(std::span<const LatticePoint> pts);

  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<LatticePoint>& hull_vertices() const { return hull_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const LatticePoint& p) const;

  /// Extreme points V(S): hull vertices (for a segment, its two endpoints).
  const std::vector<LatticePoint>& extreme_points() const { return hull_; }

  /// Boundary edges E(S) in counterclockwise cyclic order.
  std::vector<DirectedEdge> edges() const;
  std::size_t succ_index(std::size_t i) const;
  std::size_t pred_index(std::size_t i) const;

  bool is_collinear() const;  // includes the single-point case
  bool empty() const { return points_.empty(); }

  /// Twice the hull area (shoelace).
  i64 area2() const;
  /// Lattice points on the hull boundary.
  i64 boundary_lattice_count() const;

  ConvexLatticeSet translated(const Vec& v) const;

  LatticePoint min_corner() const;  // componentwise minimum
  LatticePoint max_corner() const;

  friend bool operator==(const ConvexLatticeSet&, const ConvexLatticeSet&) = default;

 private:
  std::vector<LatticePoint> points_;  // sorted lexicographically by (x,y)
  std::vector<LatticePoint> hull_;    // CCW, starting from the lex-min vertex
};

struct ConvexBuildResult {
  ConvexLatticeSet set;
  bool input_was_convex = false;
};

/// Hull + interior fill; reports whether the input was already convex.
ConvexBuildResult convex_lattice_set(std::span<const LatticePoint> pts);

inline i64 edge_lattice_count(const DirectedEdge& e) { return e.lattice_count(); }

/// Number of distinct lines parallel to `v` meeting S.
i64 directional_diameter(const ConvexLatticeSet& s, const DirectedRationalLine& v);

struct SupportLine {
  DirectedRationalLine line;  // anchored at a point of S it passes through
  std::variant<DirectedEdge, LatticePoint> touch;
};

/// Boundary of the minimal v-half-plane containing S, and its intersection
/// with conv(S) (an edge when two or more points of S lie on it).
SupportLine support_line(const ConvexLatticeSet& s, const DirectedRationalLine& v);

/// Canonical A in SL2(Z) with A(0,-1) = line.direction: minimal |a| among all
/// solutions, ties broken by a >= 0, then minimal |c|, ties by c >= 0.
UnimodularMap unimodular_to_vertical(const DirectedRationalLine& line);

ConvexLatticeSet apply_unimodular(const UnimodularMap& m, const ConvexLatticeSet& s);

struct LayerSegment {
  LatticePoint first;  // endpoints of the new-point run, may coincide
  LatticePoint last;
  friend bool operator==(const LayerSegment&, const LayerSegment&) = default;
};

struct EdgeExtension {
  ConvexLatticeSet extended;
  int depth = 0;
  // Layer i is the segment of new points on the i-th line parallel to w,
  // ordered from nearest to farthest; empty columns are skipped.
  std::vector<LayerSegment> layers;
};

/// w-extension of T across its boundary edge w (finite-set case of the
/// edge-extension construction, evaluated after conjugating w to the
/// downward vertical).  Returns T itself with depth 0 when no valid step
/// exists.
EdgeExtension ext_w(const ConvexLatticeSet& t, const DirectedEdge& w);

struct BorderResult {
  std::vector<Vec> translations;        // a + lambda*b for lambda = 0..N-1
  Vec step{0, 0};                       // b, the primitive direction of w
  std::vector<LatticePoint> border;     // union of S + v, sorted
  std::vector<LatticePoint> g_interior; // translates with lambda in [g, N-1-g]
};

/// (S,w)-border of T and its g-interior.  Requires S ⊆ T and an edge of T
/// parallel to w; throws Errc::empty_border when no translate fits.
BorderResult border(const ConvexLatticeSet& s, const DirectedEdge& w,
                    const ConvexLatticeSet& t, i64 g);

}  // namespace nivat
