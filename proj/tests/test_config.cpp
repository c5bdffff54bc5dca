#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nivat/config.hpp"

using namespace nivat;

TEST_CASE("materialize: delta puts a single 1 at the requested cell") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::delta;
  auto cfg = materialize(g, Rect{-2, -2, 5, 5});
  for (i64 y = -2; y <= 2; ++y)
    for (i64 x = -2; x <= 2; ++x)
      CHECK(cfg.symbol_at({x, y}) == ((x == 0 && y == 0) ? '1' : '0'));
}

TEST_CASE("materialize: constant") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::constant;
  g.symbol = 'a';
  auto cfg = materialize(g, Rect{0, 0, 3, 2});
  for (i64 y = 0; y < 2; ++y)
    for (i64 x = 0; x < 3; ++x) CHECK(cfg.symbol_at({x, y}) == 'a');
  CHECK(cfg.alphabet().size() == 2);  // a filler symbol keeps |A| >= 2
}

TEST_CASE("materialize: mechanical slope 1/2 gives alternating columns") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::mechanical;
  g.slope_num = 1;
  g.slope_den = 2;
  g.axis = 'x';
  auto cfg = materialize(g, Rect{0, 0, 6, 2});
  // s(t) = floor((t+1)/2) - floor(t/2) = t mod 2
  for (i64 y = 0; y < 2; ++y)
    for (i64 x = 0; x < 6; ++x) CHECK(cfg.symbol_at({x, y}) == (x % 2 ? '1' : '0'));
}

TEST_CASE("materialize: golden mechanical matches the Fibonacci word") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::mechanical;
  g.golden = true;
  g.axis = 'x';
  auto cfg = materialize(g, Rect{1, 0, 20, 1});
  // characteristic golden-ratio word starting at t=1
  std::string expect = "10110101101101011010";
  for (i64 x = 1; x <= 20; ++x) CHECK(cfg.symbol_at({x, 0}) == expect[x - 1]);
}

TEST_CASE("floor_golden is the exact floor of m*(sqrt(5)-1)/2") {
  CHECK(floor_golden(0) == 0);
  CHECK(floor_golden(1) == 0);
  CHECK(floor_golden(2) == 1);
  CHECK(floor_golden(3) == 1);
  CHECK(floor_golden(4) == 2);
  CHECK(floor_golden(13) == 8);
  CHECK(floor_golden(21) == 12);
  CHECK(floor_golden(-1) == -1);
  CHECK(floor_golden(-2) == -2);
  for (i64 m = -500; m <= 500; ++m) {
    long double v = static_cast<long double>(m) * 0.6180339887498948482L;
    CHECK(floor_golden(m) == static_cast<i64>(std::floor(v)));
  }
}

TEST_CASE("materialize: periodic motif honors skew periods") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::periodic_motif;
  g.period_p = {2, 1};
  g.period_q = {0, 3};
  g.motif = {"ab", "cd", "ef"};  // fundamental box 2x3
  auto cfg = materialize(g, Rect{-6, -6, 13, 13});
  for (i64 y = -6; y <= 6; ++y)
    for (i64 x = -6; x <= 6; ++x) {
      LatticePoint p{x, y};
      for (const Vec& v : {g.period_p, g.period_q}) {
        LatticePoint q = p + v;
        if (cfg.in_window(q)) CHECK(cfg.symbol_at(p) == cfg.symbol_at(q));
      }
    }
}

TEST_CASE("materialize: motif must tile the fundamental domain") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::periodic_motif;
  g.period_p = {2, 0};
  g.period_q = {0, 2};
  g.motif = {"abc"};  // wrong shape
  CHECK_THROWS_AS(materialize(g, Rect{0, 0, 4, 4}), Error);
}

TEST_CASE("translate examples and group action") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::delta;
  auto cfg = materialize(g, Rect{-4, -4, 9, 9});

  auto same = translate(cfg, {0, 0});
  CHECK(same.window() == cfg.window());
  CHECK(same.cells() == cfg.cells());

  auto t = translate(cfg, {1, 0});
  CHECK(t.symbol_at({-1, 0}) == '1');  // value at x reads the old x+u

  auto back = translate(t, {-1, 0});
  CHECK(back.window() == cfg.window());
  CHECK(back.cells() == cfg.cells());

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> d(-3, 3);
  for (int i = 0; i < 20; ++i) {
    Vec u{d(rng), d(rng)}, v{d(rng), d(rng)};
    auto a = translate(translate(cfg, u), v);
    auto b = translate(cfg, u + v);
    CHECK(a.window() == b.window());
    CHECK(a.cells() == b.cells());
  }
}

TEST_CASE("recoordinatize: identity is restriction") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::mechanical;
  g.slope_num = 1;
  g.slope_den = 2;
  auto cfg = materialize(g, Rect{-4, -4, 9, 9});
  auto r = recoordinatize(cfg, UnimodularMap(), Rect{-2, -2, 5, 5});
  for (i64 y = -2; y <= 2; ++y)
    for (i64 x = -2; x <= 2; ++x) CHECK(r.symbol_at({x, y}) == cfg.symbol_at({x, y}));
}

TEST_CASE("recoordinatize: rotation turns vertical stripes horizontal") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::mechanical;
  g.slope_num = 1;
  g.slope_den = 2;
  g.axis = 'x';
  auto cfg = materialize(g, Rect{-8, -8, 17, 17});
  UnimodularMap rot(0, -1, 1, 0);  // maps (x,y) to (-y, x)
  auto r = recoordinatize(cfg, rot, Rect{-4, -4, 9, 9});
  for (i64 y = -4; y <= 4; ++y)
    for (i64 x = -4; x <= 4; ++x) CHECK(r.symbol_at({x, y}) == cfg.symbol_at({-y, x}));
}

TEST_CASE("recoordinatize: delta stays at the origin, demands stay in-window") {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::delta;
  auto cfg = materialize(g, Rect{-3, -3, 7, 7});
  UnimodularMap shear(1, 1, 0, 1);
  auto r = recoordinatize(cfg, shear, Rect{-1, -1, 3, 3});
  CHECK(r.symbol_at({0, 0}) == '1');
  CHECK_THROWS_AS(recoordinatize(cfg, shear, Rect{-3, -3, 7, 7}), Error);
}

TEST_CASE("load_grid: checkerboard and alphabet order") {
  auto cfg = load_grid_text("01\n10\n");
  CHECK(cfg.width() == 2);
  CHECK(cfg.height() == 2);
  CHECK(cfg.alphabet().symbols() == "01");
  // last text row sits at the window bottom
  CHECK(cfg.symbol_at({0, 0}) == '1');
  CHECK(cfg.symbol_at({1, 0}) == '0');
  CHECK(cfg.symbol_at({0, 1}) == '0');
  CHECK(cfg.symbol_at({1, 1}) == '1');
}

TEST_CASE("load_grid: origin header honored") {
  auto cfg = load_grid_text("#origin -2 -2\nab\nba\n");
  CHECK(cfg.window() == Rect{-2, -2, 2, 2});
  CHECK(cfg.symbol_at({-2, -2}) == 'b');
}

TEST_CASE("load_grid errors") {
  try {
    load_grid_text("01\n0\n");
    FAIL("expected ragged_rows");
  } catch (const Error& e) {
    CHECK(e.code == Errc::ragged_rows);
  }
  try {
    load_grid_text("");
    FAIL("expected empty_input");
  } catch (const Error& e) {
    CHECK(e.code == Errc::empty_input);
  }
}

TEST_CASE("grid round-trip") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> sym(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::string text = "#origin -1 3\n";
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x < 5; ++x) text.push_back("abc"[sym(rng)]);
      text.push_back('\n');
    }
    auto cfg = load_grid_text(text);
    CHECK(save_grid(cfg) == text);
    auto cfg2 = load_grid_text(save_grid(cfg));
    CHECK(cfg2.window() == cfg.window());
    CHECK(cfg2.cells() == cfg.cells());
  }
}

TEST_CASE("parse_generator_kv") {
  auto g = parse_generator_kv({"kind=mechanical", "slope=13/21", "intercept=1/3", "axis=y"});
  CHECK(g.kind == GeneratorSpec::Kind::mechanical);
  CHECK(g.slope_num == 13);
  CHECK(g.slope_den == 21);
  CHECK(g.intercept_num == 1);
  CHECK(g.intercept_den == 3);
  CHECK(g.axis == 'y');

  auto golden = parse_generator_kv({"kind=mechanical", "slope=golden"});
  CHECK(golden.golden);

  auto motif = parse_generator_kv({"kind=motif", "motif=ab/cd", "periods=2,0;0,2"});
  CHECK(motif.motif == std::vector<std::string>{"ab", "cd"});
  CHECK(motif.period_p == Vec{2, 0});
  CHECK(motif.period_q == Vec{0, 2});

  CHECK_THROWS_AS(parse_generator_kv({"symbol=a"}), Error);  // no kind
  CHECK_THROWS_AS(parse_generator_kv({"kind=wat"}), Error);
  CHECK_THROWS_AS(parse_generator_kv({"kind=delta", "at=1"}), Error);
}
