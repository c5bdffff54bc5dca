#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "nivat/complexity.hpp"

using namespace nivat;

namespace {

WindowConfiguration delta_window(i64 half) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::delta;
  return materialize(g, Rect{-half, -half, 2 * half + 1, 2 * half + 1});
}

WindowConfiguration constant_window(i64 w, i64 h) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::constant;
  g.symbol = 'a';
  return materialize(g, Rect{0, 0, w, h});
}

WindowConfiguration stripes_window(i64 w, i64 h) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::mechanical;
  g.slope_num = 1;
  g.slope_den = 2;
  g.axis = 'x';
  return materialize(g, Rect{0, 0, w, h});
}

WindowConfiguration checkerboard_window(i64 w, i64 h) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::periodic_motif;
  g.period_p = {2, 0};
  g.period_q = {0, 2};
  g.motif = {"01", "10"};
  return materialize(g, Rect{0, 0, w, h});
}

WindowConfiguration random_window(std::mt19937_64& rng, i64 w, i64 h, int alphabet) {
  std::uniform_int_distribution<int> sym(0, alphabet - 1);
  std::string text;
  for (i64 y = 0; y < h; ++y) {
    for (i64 x = 0; x < w; ++x) text.push_back(static_cast<char>('0' + sym(rng)));
    text.push_back('\n');
  }
  for (int a = 0; a < alphabet; ++a) text[static_cast<std::size_t>(a)] = static_cast<char>('0' + a);
  return load_grid_text(text);
}

}  // namespace

TEST_CASE("collect_patterns examples") {
  auto constant = constant_window(6, 6);
  CHECK(collect_patterns(constant, Shape::rect(3, 2)).count() == 1);

  auto delta = delta_window(8);
  CHECK(collect_patterns(delta, Shape::rect(2, 2)).count() == 5);  // nk+1

  auto stripes = stripes_window(8, 8);
  auto tromino = collect_patterns(stripes, Shape::rect(3, 1));
  CHECK(tromino.patterns == std::vector<std::string>{"010", "101"});
}

TEST_CASE("collect_patterns: shape too large") {
  auto cfg = constant_window(3, 3);
  CHECK_THROWS_AS(collect_patterns(cfg, Shape::rect(4, 1)), Error);
}

TEST_CASE("rect_complexity_table: delta is nk+1") {
  auto delta = delta_window(16);
  auto table = rect_complexity_table(delta, 8, 8);
  for (i64 k = 1; k <= 8; ++k)
    for (i64 n = 1; n <= 8; ++n) CHECK(table.at(n, k) == n * k + 1);
}

TEST_CASE("rect_complexity_table: constant is all ones") {
  auto table = rect_complexity_table(constant_window(10, 10), 4, 4);
  for (i64 k = 1; k <= 4; ++k)
    for (i64 n = 1; n <= 4; ++n) CHECK(table.at(n, k) == 1);
}

TEST_CASE("rect_complexity_table: period-2 vertical product has P = 2") {
  auto table = rect_complexity_table(stripes_window(12, 12), 5, 5);
  for (i64 k = 1; k <= 5; ++k)
    for (i64 n = 1; n <= 5; ++n) CHECK(table.at(n, k) == 2);
}

TEST_CASE("rect_complexity_table agrees with naive collection (dual route)") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    auto cfg = random_window(rng, 14 + trial, 11 + trial, 2 + trial % 2);
    auto table = rect_complexity_table(cfg, 6, 6);
    for (i64 k = 1; k <= 6; ++k)
      for (i64 n = 1; n <= 6; ++n)
        CHECK(table.at(n, k) == collect_patterns(cfg, Shape::rect(n, k)).count());
  }
}

TEST_CASE("rect_complexity_table: multiword keys agree with naive collection") {
  // nk up to 11*11 = 121 cells exceeds one 64-bit key word
  std::mt19937_64 rng(43);
  auto cfg = random_window(rng, 24, 24, 2);
  auto table = rect_complexity_table(cfg, 11, 11);
  for (i64 n : {9, 10, 11})
    CHECK(table.at(n, 11) == collect_patterns(cfg, Shape::rect(n, 11)).count());
}

TEST_CASE("discrepancy examples") {
  auto delta = delta_window(8);
  Shape singleton{std::vector<LatticePoint>{{0, 0}}};
  CHECK(discrepancy(delta, singleton) == 1);  // |A| - 1
  CHECK(discrepancy(delta, Shape::rect(2, 2)) == 1);
  CHECK(discrepancy(constant_window(8, 8), Shape::rect(2, 2)) == -3);
}

TEST_CASE("is_generated examples") {
  auto constant = constant_window(8, 8);
  Shape domino{std::vector<LatticePoint>{{0, 0}, {1, 0}}};
  CHECK(is_generated(constant, domino, {1, 0}).generated);

  auto delta = delta_window(8);
  auto r = is_generated(delta, domino, {1, 0});
  CHECK_FALSE(r.generated);
  REQUIRE(r.witness.has_value());
  // two domino patterns agreeing on the left cell but not the right
  CHECK(r.witness->first[0] == r.witness->second[0]);
  CHECK(r.witness->first[1] != r.witness->second[1]);
  CHECK(std::set<std::string>{r.witness->first, r.witness->second} ==
        std::set<std::string>{"00", "01"});

  auto board = checkerboard_window(8, 8);
  CHECK(is_generated(board, domino, {0, 0}).generated);
  CHECK(is_generated(board, domino, {1, 0}).generated);
}

TEST_CASE("nonunique_extension_count examples") {
  Shape domino{std::vector<LatticePoint>{{0, 0}, {1, 0}}};
  Shape single{std::vector<LatticePoint>{{0, 0}}};
  CHECK(nonunique_extension_count(constant_window(8, 8), domino, single) == 0);
  CHECK(nonunique_extension_count(delta_window(8), domino, single) == 1);  // "0"
}

TEST_CASE("nonunique extensions bounded by P(shape) - P(subshape)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    auto cfg = random_window(rng, 10, 10, 2);
    Shape shape = Shape::rect(2, 2);
    Shape sub = Shape::rect(1, 2);
    i64 count = nonunique_extension_count(cfg, shape, sub);
    Rect tr = translate_range(cfg.window(), shape);
    i64 p_shape = static_cast<i64>(collect_over(cfg, shape, tr).size());
    i64 p_sub = static_cast<i64>(collect_over(cfg, sub, tr).size());
    CHECK(count <= p_shape - p_sub);
  }
}

TEST_CASE("monotonicity over a common translate set") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto cfg = random_window(rng, 9, 9, 2);
    Shape shape = Shape::rect(3, 2);
    Rect tr = translate_range(cfg.window(), shape);
    std::vector<LatticePoint> sub_pts;
    for (const auto& p : shape.points())
      if (rng() % 2) sub_pts.push_back(p);
    if (sub_pts.empty()) sub_pts.push_back({0, 0});
    Shape sub{sub_pts};
    CHECK(collect_over(cfg, sub, tr).size() <= collect_over(cfg, shape, tr).size());
  }
}

TEST_CASE("translation invariance of P") {
  auto cfg = checkerboard_window(10, 10);
  Shape shape = Shape::rect(2, 3);
  i64 p = collect_patterns(cfg, shape).count();
  auto shifted = translate(cfg, {3, 2});
  CHECK(collect_patterns(shifted, shape).count() == p);
}

TEST_CASE("unimodular equivariance of the discrepancy") {
  // doubly periodic input keeps window truncation out of the counts
  auto cfg = checkerboard_window(33, 33);
  UnimodularMap a(1, 1, 0, 1);  // shear
  Shape shape = Shape::rect(3, 3);
  auto inv = a.inverse();
  std::vector<LatticePoint> pre;
  for (const auto& p : shape.points()) pre.push_back(inv.apply(p));
  Shape pre_shape{pre};
  auto re = recoordinatize(cfg, a, Rect{0, 0, 16, 16});
  CHECK(discrepancy(re, pre_shape) == discrepancy(cfg, shape));
}

TEST_CASE("removal dichotomy at window scale") {
  // over the translate set of S: either x is generated or the discrepancy
  // does not grow when x is removed
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    auto cfg = random_window(rng, 12, 12, 2 + trial % 2);
    std::vector<LatticePoint> pts;
    std::uniform_int_distribution<i64> c(0, 3);
    for (int i = 0; i < 5; ++i) pts.push_back({c(rng), c(rng)});
    ConvexLatticeSet s = ConvexLatticeSet::hull_of(pts);
    if (s.size() < 2 || s.size() > 10) continue;
    Shape shape{std::vector<LatticePoint>(s.points().begin(), s.points().end())};
    Rect tr = translate_range(cfg.window(), shape);
    auto patterns = collect_over(cfg, shape, tr);
    i64 d_s = static_cast<i64>(patterns.size()) - static_cast<i64>(shape.size());
    for (const auto& x : s.extreme_points()) {
      std::vector<LatticePoint> rest;
      for (const auto& p : shape.points())
        if (p != x) rest.push_back(p);
      Shape rest_shape{rest};
      i64 d_rest = static_cast<i64>(collect_over(cfg, rest_shape, tr).size()) -
                   static_cast<i64>(rest.size());
      if (!point_generated(patterns, shape, x)) CHECK(d_rest <= d_s);
    }
  }
}

TEST_CASE("entropy_bound_check examples") {
  auto constant = constant_window(8, 8);
  auto r1 = entropy_bound_check(constant, 1, 1, 6);
  CHECK(r1.holds_in_hypothesis);
  for (const auto& row : r1.rows)
    if (row.in_hypothesis) CHECK(row.holds);

  auto board = checkerboard_window(40, 40);
  auto r2 = entropy_bound_check(board, 2, 2, 32);
  CHECK(r2.holds_in_hypothesis);
  for (const auto& row : r2.rows) {
    CHECK(row.p == 2);
    if (row.np >= 3) CHECK(row.holds);  // 2 <= 2^(8n'-16) from n' = 3 on
    if (row.np <= 2) CHECK_FALSE(row.holds);
  }

  // delta violates the generating-set hypothesis; the arithmetic still runs
  auto delta = delta_window(10);
  auto r3 = entropy_bound_check(delta, 2, 2, 8);
  CHECK(r3.rows.size() == 8);
}
