#pragma once

// Exact collection and counting of S-shaped patterns within a window:
// pattern languages, rectangular complexity tables, discrepancy, and
// generated-point tests.  Counts are exact: rectangular patterns are packed
// losslessly into key words (no fingerprint can collide), general shapes
// are compared as symbol strings.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nivat/config.hpp"
#include "nivat/geometry.hpp"

namespace nivat {

/// Finite set of lattice points in canonical (lexicographic) order.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<LatticePoint> pts);
  static Shape rect(i64 n, i64 k);  // R_{n,k}: [0,n) x [0,k)

  const std::vector<LatticePoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  LatticePoint min_corner() const { return min_; }
  LatticePoint max_corner() const { return max_; }
  Shape normalized() const;  // translated so the min corner is the origin
  Shape translated(const Vec& v) const;
  bool contains(const LatticePoint& p) const;
  std::optional<std::size_t> index_of(const LatticePoint& p) const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<LatticePoint> pts_;
  LatticePoint min_{0, 0}, max_{0, 0};
};

/// The set of distinct S-shaped colorings observed in a window, together
/// with the translate set that produced it.  Window-relative by
/// construction.
struct PatternLanguage {
  Shape shape;
  std::vector<std::string> patterns;  // sorted, each of length |shape|
  Rect window;                        // source window descriptor
  Rect translates;                    // the set of u used (a rectangle)
  i64 count() const { return static_cast<i64>(patterns.size()); }
};

/// Rectangle of all u with shape+u inside the window; empty (width<=0) when
/// no translate fits.
Rect translate_range(const Rect& window, const Shape& shape);

PatternLanguage collect_patterns(const WindowConfiguration& cfg, const Shape& shape);

/// Distinct patterns of `shape` read over an explicit translate rectangle.
/// Used when several shapes must be compared over a common translate set.
std::vector<std::string> collect_over(const WindowConfiguration& cfg, const Shape& shape,
                                      const Rect& translates);

struct RectComplexityTable {
  i64 max_n = 0;
  i64 max_k = 0;
  Rect window;
  std::vector<i64> p;  // (k-1)*max_n + (n-1)
  i64 at(i64 n, i64 k) const { return p[static_cast<std::size_t>((k - 1) * max_n + (n - 1))]; }
};

/// Exact P(n,k) for all 1<=n<=max_n, 1<=k<=max_k, parallelized over k.
RectComplexityTable rect_complexity_table(const WindowConfiguration& cfg, i64 max_n, i64 max_k,
                                          unsigned threads = 0);

i64 discrepancy(const WindowConfiguration& cfg, const Shape& shape);

struct GeneratedCheck {
  bool generated = false;
  std::optional<std::pair<std::string, std::string>> witness;  // two full patterns
};

/// True iff no two observed shape-patterns agree off x and differ at x
/// (x's color is forced by the rest).  Patterns are collected over the
/// translate set of the full shape.
GeneratedCheck is_generated(const WindowConfiguration& cfg, const Shape& shape,
                            const LatticePoint& x);

/// Same test evaluated against an explicit pattern list.
bool point_generated(std::span<const std::string> patterns, const Shape& shape,
                     const LatticePoint& x);

/// Number of subshape-patterns (over the shape's translate set) with two or
/// more distinct extensions to shape-patterns.
i64 nonunique_extension_count(const WindowConfiguration& cfg, const Shape& shape,
                              const Shape& subshape);

struct EntropyBoundRow {
  i64 np = 0;
  i64 p = 0;
  i64 exponent = 0;       // 2*n*np + 2*k*np - 4*n*k
  bool in_hypothesis = false;  // np > 2n and np > 2k
  bool holds = false;          // P <= |A|^exponent
};

struct EntropyBoundReport {
  std::vector<EntropyBoundRow> rows;
  bool holds_in_hypothesis = true;  // over all in-hypothesis rows
  double max_log_ratio = 0.0;       // max over rows of log(P)/np^2
};

/// Checks P(R_{np,np}) <= |A|^(2n*np+2k*np-4nk) for np = 1..max_np (as far
/// as the window allows).  The bound is only guaranteed for np beyond twice
/// the generating rectangle; rows carry an in_hypothesis flag.
EntropyBoundReport entropy_bound_check(const WindowConfiguration& cfg, i64 n, i64 k, i64 max_np);

}  // namespace nivat
