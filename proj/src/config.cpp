#include "nivat/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace nivat {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) fail(Errc::invalid_argument, "alphabet must not be empty");
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (index_[c] >= 0) fail(Errc::invalid_argument, "alphabet symbols must be distinct");
    index_[c] = static_cast<int>(i);
  }
}

WindowConfiguration::WindowConfiguration(Alphabet alphabet, Rect window,
                                         std::vector<std::uint8_t> cells)
    : alphabet_(std::move(alphabet)), window_(window), cells_(std::move(cells)) {
  if (window_.width <= 0 || window_.height <= 0)
    fail(Errc::invalid_argument, "window must be nonempty");
  if (cells_.size() != static_cast<std::size_t>(window_.area()))
    fail(Errc::invalid_argument, "cell count does not match window");
  for (auto v : cells_)
    if (v >= alphabet_.size()) fail(Errc::invalid_argument, "cell outside alphabet");
}

i64 isqrt(i64 v) {
  if (v < 0) fail(Errc::invalid_argument, "isqrt of negative value");
  if (v == 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

i64 floor_golden(i64 m) {
  if (m == 0) return 0;
  if (m < 0) return -floor_golden(-m) - 1;  // m*alpha is irrational for m != 0
  i64 a = isqrt(5 * m * m);  // floor(m*sqrt(5))
  i64 d = a - m;
  return d >= 0 ? d / 2 : (d - 1) / 2;
}

namespace {

// floor(t*alpha + i_num/i_den) with alpha either rational or golden, exact.
i64 floor_slope_at(const GeneratorSpec& g, i64 t) {
  if (g.golden) {
    // floor((m*alpha + p)/q) with m = q*t
    i64 q = g.intercept_den;
    i64 fl = floor_golden(q * t);
    i64 num = fl + g.intercept_num;
    return num >= 0 ? num / q : (num - q + 1) / q;
  }
  // floor(t*sn/sd + in/id) = floor((t*sn*id + in*sd) / (sd*id))
  i64 num = t * g.slope_num * g.intercept_den + g.intercept_num * g.slope_den;
  i64 den = g.slope_den * g.intercept_den;
  i64 fl = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) --fl;
  return fl;
}

int mechanical_bit(const GeneratorSpec& g, i64 t) {
  return static_cast<int>(floor_slope_at(g, t + 1) - floor_slope_at(g, t));
}

// Hermite-style column reduction of the period lattice: returns (h11, h21,
// h22) with lattice basis (h11, h21), (0, h22), h11 > 0, h22 > 0.
struct LatticeHnf {
  i64 h11, h21, h22;
};

LatticeHnf lattice_hnf(Vec p, Vec q) {
  i64 det = cross(p, q);
  if (det == 0) fail(Errc::bad_spec, "period vectors must be linearly independent");
  // second generator with zero x-component
  i64 g = std::gcd(std::abs(p.x), std::abs(q.x));
  LatticeHnf h;
  if (g == 0) fail(Errc::bad_spec, "period lattice has no horizontal extent");
  h.h11 = g;
  h.h22 = std::abs(det) / g;
  // find combination a*p + b*q with x-component g
  i64 a = 0, b = 0;
  if (p.x == 0) {
    a = 0;
    b = (q.x > 0) ? 1 : -1;
  } else if (q.x == 0) {
    a = (p.x > 0) ? 1 : -1;
    b = 0;
  } else {
    i64 old_r = p.x, r = q.x, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      i64 k = old_r / r;
      std::swap(old_r -= k * r, r);
      std::swap(old_s -= k * s, s);
      std::swap(old_t -= k * t, t);
    }
    i64 sign = old_r > 0 ? 1 : -1;
    a = old_s * sign;
    b = old_t * sign;
  }
  i64 y = a * p.y + b * q.y;
  h.h21 = ((y % h.h22) + h.h22) % h.h22;
  return h;
}

// canonical representative of x in the fundamental box [0,h11) x [0,h22)
LatticePoint reduce_mod(const LatticeHnf& h, LatticePoint x) {
  i64 k = x.x >= 0 ? x.x / h.h11 : -((-x.x + h.h11 - 1) / h.h11);
  x.x -= k * h.h11;
  x.y -= k * h.h21;
  x.y = ((x.y % h.h22) + h.h22) % h.h22;
  return x;
}

}  // namespace

WindowConfiguration materialize(const GeneratorSpec& spec, const Rect& window) {
  if (window.width <= 0 || window.height <= 0)
    fail(Errc::invalid_argument, "window must be nonempty");
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(window.area()), 0);
  Alphabet alph;

  switch (spec.kind) {
    case GeneratorSpec::Kind::constant: {
      char partner = spec.symbol == 'a' ? 'b' : 'a';
      alph = Alphabet(std::string(1, spec.symbol) + partner);
      break;
    }
    case GeneratorSpec::Kind::delta: {
      alph = Alphabet("01");
      if (window.contains(spec.delta_pos)) {
        std::size_t idx = static_cast<std::size_t>(
            (spec.delta_pos.y - window.y0) * window.width + (spec.delta_pos.x - window.x0));
        cells[idx] = 1;
      }
      break;
    }
    case GeneratorSpec::Kind::periodic_motif: {
      if (spec.motif.empty() || spec.motif.front().empty())
        fail(Errc::bad_spec, "motif must be nonempty");
      LatticeHnf h = lattice_hnf(spec.period_p, spec.period_q);
      if (static_cast<i64>(spec.motif.size()) != h.h22 ||
          static_cast<i64>(spec.motif.front().size()) != h.h11)
        fail(Errc::bad_spec, "motif must be " + std::to_string(h.h11) + "x" +
                                 std::to_string(h.h22) +
                                 " for these periods (fundamental domain)");
      std::string syms;
      for (const auto& row : spec.motif) {
        if (static_cast<i64>(row.size()) != h.h11) fail(Errc::bad_spec, "ragged motif");
        for (char c : row)
          if (syms.find(c) == std::string::npos) syms.push_back(c);
      }
      if (syms.size() < 2) syms.push_back(syms[0] == 'a' ? 'b' : 'a');
      alph = Alphabet(syms);
      for (i64 y = window.y0; y < window.y1(); ++y)
        for (i64 x = window.x0; x < window.x1(); ++x) {
          LatticePoint r = reduce_mod(h, {x, y});
          char c = spec.motif[static_cast<std::size_t>(r.y)][static_cast<std::size_t>(r.x)];
          cells[static_cast<std::size_t>((y - window.y0) * window.width + (x - window.x0))] =
              static_cast<std::uint8_t>(alph.index_of(c));
        }
      break;
    }
    case GeneratorSpec::Kind::product_1d: {
      if (spec.word.empty()) fail(Errc::bad_spec, "product word must be nonempty");
      std::string syms;
      for (char c : spec.word)
        if (syms.find(c) == std::string::npos) syms.push_back(c);
      if (syms.size() < 2) syms.push_back(syms[0] == 'a' ? 'b' : 'a');
      alph = Alphabet(syms);
      i64 n = static_cast<i64>(spec.word.size());
      for (i64 y = window.y0; y < window.y1(); ++y)
        for (i64 x = window.x0; x < window.x1(); ++x) {
          i64 tt = spec.axis == 'x' ? x : y;
          char c = spec.word[static_cast<std::size_t>(((tt % n) + n) % n)];
          cells[static_cast<std::size_t>((y - window.y0) * window.width + (x - window.x0))] =
              static_cast<std::uint8_t>(alph.index_of(c));
        }
      break;
    }
    case GeneratorSpec::Kind::mechanical: {
      if (!spec.golden) {
        if (spec.slope_den <= 0 || spec.slope_num <= 0 || spec.slope_num >= spec.slope_den)
          fail(Errc::bad_spec, "mechanical slope must lie in (0,1)");
      }
      if (spec.intercept_den <= 0) fail(Errc::bad_spec, "intercept denominator must be positive");
      alph = Alphabet("01");
      for (i64 y = window.y0; y < window.y1(); ++y)
        for (i64 x = window.x0; x < window.x1(); ++x) {
          i64 tt = spec.axis == 'x' ? x : y;
          cells[static_cast<std::size_t>((y - window.y0) * window.width + (x - window.x0))] =
              static_cast<std::uint8_t>(mechanical_bit(spec, tt));
        }
      break;
    }
  }
  return WindowConfiguration(alph, window, std::move(cells));
}

WindowConfiguration translate(const WindowConfiguration& cfg, const Vec& u) {
  Rect w = cfg.window();
  w.x0 -= u.x;
  w.y0 -= u.y;
  return WindowConfiguration(cfg.alphabet(), w, cfg.cells());
}

WindowConfiguration recoordinatize(const WindowConfiguration& cfg, const UnimodularMap& a,
                                   const Rect& target_window) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(target_window.area()), 0);
  for (i64 y = target_window.y0; y < target_window.y1(); ++y)
    for (i64 x = target_window.x0; x < target_window.x1(); ++x) {
      LatticePoint src = a.apply({x, y});
      if (!cfg.in_window(src))
        fail(Errc::out_of_window, "preimage demand exceeds the stored window");
      cells[static_cast<std::size_t>((y - target_window.y0) * target_window.width +
                                     (x - target_window.x0))] = cfg.at(src);
    }
  return WindowConfiguration(cfg.alphabet(), target_window, std::move(cells));
}

WindowConfiguration load_grid(std::istream& in) {
  std::string line;
  std::vector<std::string> rows;
  LatticePoint origin{0, 0};
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.rfind("#origin ", 0) == 0) {
      std::istringstream hs(line.substr(8));
      if (!(hs >> origin.x >> origin.y)) fail(Errc::bad_spec, "malformed #origin header");
      first = false;
      continue;
    }
    first = false;
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) fail(Errc::empty_input, "no grid rows");
  std::size_t w = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != w) fail(Errc::ragged_rows, "rows have unequal lengths");

  // alphabet in row-major first-occurrence order; row 0 is the top of the
  // grid file but the highest y in window coordinates
  std::string syms;
  for (const auto& r : rows)
    for (char c : r)
      if (syms.find(c) == std::string::npos) syms.push_back(c);
  Alphabet alph(syms);
  Rect window{origin.x, origin.y, static_cast<i64>(w), static_cast<i64>(rows.size())};
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(window.area()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t grid_y = rows.size() - 1 - i;  // last file row sits at y0
    for (std::size_t x = 0; x < w; ++x)
      cells[grid_y * w + x] = static_cast<std::uint8_t>(alph.index_of(rows[i][x]));
  }
  return WindowConfiguration(alph, window, std::move(cells));
}

WindowConfiguration load_grid_text(const std::string& text) {
  std::istringstream in(text);
  return load_grid(in);
}

WindowConfiguration load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return load_grid(in);
}

std::string save_grid(const WindowConfiguration& cfg) {
  std::string out = "#origin " + std::to_string(cfg.window().x0) + " " +
                    std::to_string(cfg.window().y0) + "\n";
  for (i64 y = cfg.window().y1() - 1; y >= cfg.window().y0; --y) {
    for (i64 x = cfg.window().x0; x < cfg.window().x1(); ++x)
      out.push_back(cfg.symbol_at({x, y}));
    out.push_back('\n');
  }
  return out;
}

namespace {

i64 parse_i64(const std::string& s) {
  std::size_t pos = 0;
  i64 v = std::stoll(s, &pos);
  if (pos != s.size()) fail(Errc::bad_spec, "bad integer: " + s);
  return v;
}

}  // namespace

GeneratorSpec parse_generator_kv(const std::vector<std::string>& kvs) {
  GeneratorSpec g;
  bool saw_kind = false;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) fail(Errc::bad_spec, "expected key=value, got " + kv);
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "kind") {
      saw_kind = true;
      if (val == "constant") g.kind = GeneratorSpec::Kind::constant;
      else if (val == "delta") g.kind = GeneratorSpec::Kind::delta;
      else if (val == "motif" || val == "periodic_motif") g.kind = GeneratorSpec::Kind::periodic_motif;
      else if (val == "product" || val == "product_1d") g.kind = GeneratorSpec::Kind::product_1d;
      else if (val == "mechanical") g.kind = GeneratorSpec::Kind::mechanical;
      else fail(Errc::bad_spec, "unknown generator kind: " + val);
    } else if (key == "symbol") {
      if (val.size() != 1) fail(Errc::bad_spec, "symbol must be one character");
      g.symbol = val[0];
    } else if (key == "at") {
      auto comma = val.find(',');
      if (comma == std::string::npos) fail(Errc::bad_spec, "at=X,Y");
      g.delta_pos = {parse_i64(val.substr(0, comma)), parse_i64(val.substr(comma + 1))};
    } else if (key == "motif") {
      g.motif.clear();
      std::size_t start = 0;
      while (start <= val.size()) {
        auto slash = val.find('/', start);
        if (slash == std::string::npos) {
          g.motif.push_back(val.substr(start));
          break;
        }
        g.motif.push_back(val.substr(start, slash - start));
        start = slash + 1;
      }
    } else if (key == "periods") {
      // "px,py;qx,qy"
      auto semi = val.find(';');
      if (semi == std::string::npos) fail(Errc::bad_spec, "periods=PX,PY;QX,QY");
      auto parse_vec = [&](const std::string& s) -> Vec {
        auto comma = s.find(',');
        if (comma == std::string::npos) fail(Errc::bad_spec, "bad period vector: " + s);
        return {parse_i64(s.substr(0, comma)), parse_i64(s.substr(comma + 1))};
      };
      g.period_p = parse_vec(val.substr(0, semi));
      g.period_q = parse_vec(val.substr(semi + 1));
    } else if (key == "word") {
      g.word = val;
    } else if (key == "axis") {
      if (val != "x" && val != "y") fail(Errc::bad_spec, "axis must be x or y");
      g.axis = val[0];
    } else if (key == "slope") {
      if (val == "golden") {
        g.golden = true;
      } else {
        auto slash = val.find('/');
        if (slash == std::string::npos) fail(Errc::bad_spec, "slope=P/Q or slope=golden");
        g.slope_num = parse_i64(val.substr(0, slash));
        g.slope_den = parse_i64(val.substr(slash + 1));
      }
    } else if (key == "intercept") {
      auto slash = val.find('/');
      if (slash == std::string::npos) {
        g.intercept_num = parse_i64(val);
        g.intercept_den = 1;
      } else {
        g.intercept_num = parse_i64(val.substr(0, slash));
        g.intercept_den = parse_i64(val.substr(slash + 1));
      }
    } else {
      fail(Errc::bad_spec, "unknown generator key: " + key);
    }
  }
  if (!saw_kind) fail(Errc::bad_spec, "generator needs kind=...");
  return g;
}

}  // namespace nivat
