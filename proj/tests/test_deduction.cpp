#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "nivat/deduction.hpp"

using namespace nivat;

namespace {

WindowConfiguration constant_window(i64 w, i64 h) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::constant;
  g.symbol = 'a';
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

WindowConfiguration delta_window(i64 half) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::delta;
  return materialize(g, Rect{-half, -half, 2 * half + 1, 2 * half + 1});
}

WindowConfiguration random_motif_window(std::mt19937_64& rng, i64 w, i64 h, i64 px, i64 py) {
  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::periodic_motif;
  g.period_p = {px, 0};
  g.period_q = {0, py};
  std::uniform_int_distribution<int> sym(0, 1);
  for (i64 y = 0; y < py; ++y) {
    std::string row;
    for (i64 x = 0; x < px; ++x) row.push_back(sym(rng) ? '1' : '0');
    g.motif.push_back(row);
  }
  g.motif[0][0] = '0';
  if (px * py > 1)
    g.motif[static_cast<std::size_t>(py - 1)][static_cast<std::size_t>(px - 1)] = '1';
  return materialize(g, Rect{0, 0, w, h});
}

}  // namespace

TEST_CASE("deduce_fixpoint: constant domino language floods the frame (extended)") {
  auto cfg = constant_window(8, 8);
  auto lang = collect_patterns(cfg, Shape{std::vector<LatticePoint>{{0, 0}, {1, 0}}});
  PartialColoring start(Rect{0, 0, 5, 5});
  start.set({2, 2}, 'a');
  DeduceOptions opts;
  opts.extended = true;
  auto out = deduce_fixpoint(lang, start, opts);
  CHECK(out.status == DeductionOutcome::Status::completed);
  CHECK(out.steps == 24);
}

TEST_CASE("deduce_fixpoint: core one-hole rule fills only the seeded row") {
  auto cfg = constant_window(8, 8);
  auto lang = collect_patterns(cfg, Shape{std::vector<LatticePoint>{{0, 0}, {1, 0}}});
  PartialColoring start(Rect{0, 0, 5, 5});
  start.set({2, 2}, 'a');
  auto out = deduce_fixpoint(lang, start);
  CHECK(out.status == DeductionOutcome::Status::stalled);
  CHECK(out.steps == 4);  // the row through the seed
  CHECK(out.frontier.size() == 20);
}

TEST_CASE("deduce_fixpoint: checkerboard from one seed (extended)") {
  auto cfg = checkerboard_window(10, 10);
  auto lang = collect_patterns(cfg, Shape::rect(2, 2));
  PartialColoring start(Rect{0, 0, 8, 8});
  start.set({0, 0}, cfg.symbol_at({0, 0}));
  DeduceOptions opts;
  opts.extended = true;
  auto out = deduce_fixpoint(lang, start, opts);
  REQUIRE(out.status == DeductionOutcome::Status::completed);
  for (i64 y = 0; y < 8; ++y)
    for (i64 x = 0; x < 8; ++x) CHECK(out.final.at({x, y}) == cfg.symbol_at({x, y}));
}

TEST_CASE("deduce_fixpoint: delta domino language is ambiguous") {
  auto cfg = delta_window(6);
  Shape domino{std::vector<LatticePoint>{{0, 0}, {1, 0}}};
  auto lang = collect_patterns(cfg, domino);
  REQUIRE(lang.patterns == std::vector<std::string>{"00", "01", "10"});
  PartialColoring start(Rect{0, 0, 2, 1});
  start.set({0, 0}, '0');
  auto out = deduce_fixpoint(lang, start);
  REQUIRE(out.status == DeductionOutcome::Status::ambiguous);
  REQUIRE(out.witness.has_value());
  CHECK(std::set<std::string>{out.witness->first, out.witness->second} ==
        std::set<std::string>{"00", "01"});
  CHECK(out.frontier == std::vector<LatticePoint>{{1, 0}});
}

TEST_CASE("deduce_fixpoint: contradiction when the seed is not in the language") {
  auto cfg = checkerboard_window(8, 8);
  auto lang = collect_patterns(cfg, Shape::rect(2, 2));
  PartialColoring start(Rect{0, 0, 4, 4});
  // two horizontally adjacent equal symbols never occur on a checkerboard
  start.set({0, 0}, '0');
  start.set({1, 0}, '0');
  start.set({0, 1}, '1');
  auto out = deduce_fixpoint(lang, start);
  CHECK(out.status == DeductionOutcome::Status::contradiction);
}

TEST_CASE("deduce_fixpoint: soundness on masked periodic configurations") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    i64 px = 1 + static_cast<i64>(rng() % 3), py = 1 + static_cast<i64>(rng() % 3);
    auto cfg = random_motif_window(rng, 12, 12, px, py);
    auto lang = collect_patterns(cfg, Shape::rect(3, 3));
    PartialColoring start(cfg.window());
    for (i64 y = 0; y < 12; ++y)
      for (i64 x = 0; x < 12; ++x)
        if (rng() % 3 != 0) start.set({x, y}, cfg.symbol_at({x, y}));
    auto out = deduce_fixpoint(lang, start);
    CHECK(out.status != DeductionOutcome::Status::contradiction);
    for (i64 y = 0; y < 12; ++y)
      for (i64 x = 0; x < 12; ++x)
        if (out.final.colored({x, y}) && !start.colored({x, y}))
          CHECK(out.final.at({x, y}) == cfg.symbol_at({x, y}));
  }
}

TEST_CASE("deduce_fixpoint: forced set independent of scan order") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    i64 px = 1 + static_cast<i64>(rng() % 3), py = 1 + static_cast<i64>(rng() % 3);
    auto cfg = random_motif_window(rng, 9, 9, px, py);
    auto lang = collect_patterns(cfg, Shape::rect(2, 2));
    PartialColoring start(cfg.window());
    for (i64 y = 0; y < 9; ++y)
      for (i64 x = 0; x < 9; ++x)
        if (rng() % 2) start.set({x, y}, cfg.symbol_at({x, y}));
    DeduceOptions row, col;
    row.order = ScanOrder::row_major;
    col.order = ScanOrder::column_major;
    auto a = deduce_fixpoint(lang, start, row);
    auto b = deduce_fixpoint(lang, start, col);
    CHECK(a.status == b.status);
    if (a.status == DeductionOutcome::Status::contradiction) continue;
    for (i64 y = 0; y < 9; ++y)
      for (i64 x = 0; x < 9; ++x) {
        CHECK(a.final.colored({x, y}) == b.final.colored({x, y}));
        if (a.final.colored({x, y})) CHECK(a.final.at({x, y}) == b.final.at({x, y}));
      }
  }
}

TEST_CASE("unique_extension_check examples") {
  auto constant = constant_window(8, 8);
  Shape single{std::vector<LatticePoint>{{0, 0}}};
  Shape domino{std::vector<LatticePoint>{{0, 0}, {1, 0}}};
  auto lang_c = collect_patterns(constant, domino);
  auto r1 = unique_extension_check(constant, lang_c, single, domino);
  CHECK(r1.verdict == ExtensionMultiplicity::unique);

  auto delta = delta_window(6);
  auto lang_d = collect_patterns(delta, domino);
  auto r2 = unique_extension_check(delta, lang_d, single, domino);
  CHECK(r2.verdict == ExtensionMultiplicity::ambiguous);
  REQUIRE(r2.base_witness.has_value());
  CHECK(*r2.base_witness == "0");

  auto board = checkerboard_window(10, 10);
  auto lang_b = collect_patterns(board, Shape::rect(2, 2));
  auto r3 = unique_extension_check(board, lang_b, single, Shape::rect(3, 3));
  CHECK(r3.verdict == ExtensionMultiplicity::unique);
}

TEST_CASE("unique_extension_check: exhaustive cap") {
  auto board = checkerboard_window(12, 12);
  auto lang = collect_patterns(board, Shape::rect(2, 2));
  Shape single{std::vector<LatticePoint>{{0, 0}}};
  CHECK_THROWS_AS(
      unique_extension_check(board, lang, single, Shape::rect(6, 6), ExtensionMode::exhaustive),
      Error);
  // automatic mode falls back to the fixpoint engine
  auto r = unique_extension_check(board, lang, single, Shape::rect(6, 6));
  CHECK(r.bases_checked == 2);
}

TEST_CASE("row_fill: constant fills trivially") {
  auto cfg = constant_window(8, 8);
  auto sq = ConvexLatticeSet::hull_of(std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto lang = collect_patterns(
      cfg, Shape{std::vector<LatticePoint>(sq.points().begin(), sq.points().end())});
  PartialColoring start(Rect{-1, 0, 3, 6});
  for (i64 y = 0; y < 6; ++y)
    for (i64 x = 0; x <= 1; ++x) start.set({x, y}, 'a');
  start.set({-1, 2}, 'a');  // h-1 = 1 seed cell
  auto res = row_fill(lang, sq, start, -1);
  CHECK(res.outcome.status == DeductionOutcome::Status::completed);
  CHECK(res.cross_checked);
  for (i64 y = 0; y < 6; ++y) CHECK(res.outcome.final.at({-1, y}) == 'a');
}

TEST_CASE("row_fill: checkerboard column from one seeded cell") {
  auto cfg = checkerboard_window(12, 12);
  auto sq = ConvexLatticeSet::hull_of(std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto lang = collect_patterns(
      cfg, Shape{std::vector<LatticePoint>(sq.points().begin(), sq.points().end())});
  PartialColoring start(Rect{3, 0, 3, 10});
  for (i64 y = 0; y < 10; ++y)
    for (i64 x = 4; x <= 5; ++x) start.set({x, y}, cfg.symbol_at({x, y}));
  start.set({3, 4}, cfg.symbol_at({3, 4}));
  auto res = row_fill(lang, sq, start, 3);
  CHECK(res.outcome.status == DeductionOutcome::Status::completed);
  CHECK(res.cross_checked);
  for (i64 y = 0; y < 10; ++y) CHECK(res.outcome.final.at({3, y}) == cfg.symbol_at({3, y}));
}

TEST_CASE("row_fill: doubly periodic motif reconstructs the true column") {
  std::mt19937_64 rng(31415);
  int done = 0;
  for (int trial = 0; trial < 40 && done < 10; ++trial) {
    i64 px = 2 + static_cast<i64>(rng() % 2), py = 2 + static_cast<i64>(rng() % 2);
    auto cfg = random_motif_window(rng, 16, 16, px, py);
    auto box = ConvexLatticeSet::hull_of(
        std::vector<LatticePoint>{{0, 0}, {px, 0}, {0, py}, {px, py}});
    Shape shape{std::vector<LatticePoint>(box.points().begin(), box.points().end())};
    auto lang = collect_patterns(cfg, shape);
    if (!point_generated(lang.patterns, shape, {0, py}) ||
        !point_generated(lang.patterns, shape, {0, 0}))
      continue;
    ++done;
    i64 h = py + 1;
    PartialColoring start(Rect{2, 0, px + 2, 14});
    for (i64 y = 0; y < 14; ++y)
      for (i64 x = 3; x <= 2 + px; ++x) start.set({x, y}, cfg.symbol_at({x, y}));
    for (i64 y = 5; y < 5 + h - 1; ++y) start.set({2, y}, cfg.symbol_at({2, y}));
    auto res = row_fill(lang, box, start, 2);
    CHECK(res.outcome.status == DeductionOutcome::Status::completed);
    for (i64 y = 0; y < 14; ++y) CHECK(res.outcome.final.at({2, y}) == cfg.symbol_at({2, y}));
  }
  CHECK(done >= 5);
}

TEST_CASE("row_fill: hypothesis violations surface") {
  auto cfg = delta_window(6);
  auto sq = ConvexLatticeSet::hull_of(std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto lang = collect_patterns(
      cfg, Shape{std::vector<LatticePoint>(sq.points().begin(), sq.points().end())});
  PartialColoring start(Rect{-1, 0, 3, 4});
  // delta's square language does not generate the edge endpoints
  CHECK_THROWS_AS(row_fill(lang, sq, start, -1), Error);
}

TEST_CASE("morse_hedlund_check examples") {
  std::string alternating = "01010101010101010101";
  auto v1 = morse_hedlund_check(alternating, 2);
  CHECK(v1.status == MorseHedlundVerdict::Status::periodic);
  CHECK(v1.complexity == 2);
  CHECK(v1.period == 2);
  CHECK(v1.guaranteed);
  CHECK(v1.interval_begin == 2);
  CHECK(v1.interval_end == 18);

  // short domain: the scan still finds period 3 but without the guarantee
  auto v2 = morse_hedlund_check("0010010", 3);
  CHECK(v2.status == MorseHedlundVerdict::Status::periodic);
  CHECK(v2.complexity == 3);
  CHECK(v2.period == 3);
  CHECK_FALSE(v2.guaranteed);

  auto v3 = morse_hedlund_check("0110100110010110", 4);  // P(4) > 4
  CHECK(v3.status == MorseHedlundVerdict::Status::not_applicable);
}

TEST_CASE("morse_hedlund_check: detected period verified directly") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    std::string w;
    for (int i = 0; i < 16; ++i) w.push_back(rng() % 2 ? '1' : '0');
    for (i64 n0 = 1; n0 <= 4; ++n0) {
      auto v = morse_hedlund_check(w, n0);
      if (v.status != MorseHedlundVerdict::Status::periodic) continue;
      CHECK(v.period <= n0);
      for (i64 x = v.interval_begin; x + v.period <= v.interval_end; ++x)
        CHECK(w[static_cast<std::size_t>(x)] == w[static_cast<std::size_t>(x + v.period)]);
    }
  }
}

TEST_CASE("fine_wilf_reconstruct examples") {
  auto amb = fine_wilf_reconstruct("00100", 4);
  REQUIRE(amb.status == FineWilfResult::Status::ambiguous);
  CHECK(amb.possible_periods == std::vector<i64>{3, 4});
  REQUIRE(amb.completions.size() == 2);
  CHECK(amb.completions[0].period == 3);
  CHECK(amb.completions[0].block == "001");
  CHECK(amb.completions[1].period == 4);
  CHECK(amb.completions[1].block == "0010");

  auto constant = fine_wilf_reconstruct("aaaa", 3);
  CHECK(constant.status == FineWilfResult::Status::unique);
  CHECK(constant.minimal_period == 1);

  auto unique = fine_wilf_reconstruct("010101", 3);
  CHECK(unique.status == FineWilfResult::Status::unique);
  CHECK(unique.minimal_period == 2);

  auto none = fine_wilf_reconstruct("0110", 1);
  CHECK(none.status == FineWilfResult::Status::inconsistent);
}

TEST_CASE("fine_wilf sharpness, small scale") {
  // agreement on p+q-gcd(p,q) forces equality; one fewer does not
  for (i64 q = 2; q <= 5; ++q)
    for (i64 p = q + 1; p <= 6; ++p) {
      i64 need = p + q - std::gcd(p, q);
      bool sharp_witness = false;
      for (std::uint32_t fm = 0; fm < (1u << p); ++fm)
        for (std::uint32_t gm = 0; gm < (1u << q); ++gm) {
          auto fval = [&](i64 i) { return (fm >> (((i % p) + p) % p)) & 1u; };
          auto gval = [&](i64 i) { return (gm >> (((i % q) + q) % q)) & 1u; };
          i64 agree = 0;
          while (agree < need && fval(agree) == gval(agree)) ++agree;
          if (agree >= need) {
            for (i64 i = 0; i < std::lcm(p, q); ++i) CHECK(fval(i) == gval(i));
          } else if (agree == need - 1) {
            for (i64 i = 0; i < std::lcm(p, q); ++i)
              if (fval(i) != gval(i)) sharp_witness = true;
          }
        }
      CHECK(sharp_witness);
    }
}

TEST_CASE("detect_periods_2d examples") {
  auto constant = constant_window(12, 12);
  auto s1 = detect_periods_2d(constant);
  CHECK(s1.kind == PeriodScan::Kind::doubly);
  CHECK(std::find(s1.periods.begin(), s1.periods.end(), Vec{1, 0}) != s1.periods.end());
  CHECK(std::find(s1.periods.begin(), s1.periods.end(), Vec{0, 1}) != s1.periods.end());

  GeneratorSpec g;
  g.kind = GeneratorSpec::Kind::mechanical;
  g.golden = true;
  g.axis = 'x';
  auto fib = materialize(g, Rect{0, 0, 64, 64});
  auto s2 = detect_periods_2d(fib);
  CHECK(s2.kind == PeriodScan::Kind::singly);
  REQUIRE(s2.direction.has_value());
  CHECK(*s2.direction == Vec{0, 1});
  for (const auto& m : s2.periods) CHECK(m.x == 0);  // nothing horizontal survives

  auto delta = delta_window(8);
  auto s3 = detect_periods_2d(delta);
  CHECK(s3.kind == PeriodScan::Kind::none);
}
