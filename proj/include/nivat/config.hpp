#pragma once

// Finite-window configurations over a finite alphabet: the desk-scale
// stand-in for a total coloring of Z^2.  Includes deterministic generators
// and the line-oriented grid text format.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nivat/geometry.hpp"

namespace nivat {

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols);

  std::size_t size() const { return symbols_.size(); }
  char symbol(std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const { return symbols_; }
  int index_of(char c) const { return index_[static_cast<unsigned char>(c)]; }
  bool has(char c) const { return index_of(c) >= 0; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<int, 256> index_{};
};

struct Rect {
  i64 x0 = 0;
  i64 y0 = 0;
  i64 width = 0;
  i64 height = 0;
  i64 x1() const { return x0 + width; }   // exclusive
  i64 y1() const { return y0 + height; }  // exclusive
  bool contains(const LatticePoint& p) const {
    return p.x >= x0 && p.x < x1() && p.y >= y0 && p.y < y1();
  }
  i64 area() const { return width * height; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// A coloring of a finite rectangular window of Z^2.  Cells store alphabet
/// indices; immutable after construction.
class WindowConfiguration {
 public:
  WindowConfiguration() = default;
  WindowConfiguration(Alphabet alphabet, Rect window, std::vector<std::uint8_t> cells);

  const Alphabet& alphabet() const { return alphabet_; }
  const Rect& window() const { return window_; }
  LatticePoint origin() const { return {window_.x0, window_.y0}; }
  i64 width() const { return window_.width; }
  i64 height() const { return window_.height; }

  std::uint8_t at(const LatticePoint& p) const {
    return cells_[static_cast<std::size_t>((p.y - window_.y0) * window_.width +
                                           (p.x - window_.x0))];
  }
  char symbol_at(const LatticePoint& p) const { return alphabet_.symbol(at(p)); }
  bool in_window(const LatticePoint& p) const { return window_.contains(p); }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

 private:
  Alphabet alphabet_;
  Rect window_;
  std::vector<std::uint8_t> cells_;  // row-major, y varies slowest
};

/// Deterministic configuration generators.
struct GeneratorSpec {
  enum class Kind { constant, delta, periodic_motif, product_1d, mechanical };
  Kind kind = Kind::constant;

  // constant
  char symbol = '0';

  // delta: '1' at `delta_pos`, '0' elsewhere
  LatticePoint delta_pos{0, 0};

  // periodic_motif: motif rows + two independent period vectors.  The motif
  // must tile a fundamental domain of the lattice spanned by the periods.
  std::vector<std::string> motif;
  Vec period_p{1, 0};
  Vec period_q{0, 1};

  // product_1d: an explicit word tiled along `axis`, constant across it
  std::string word;
  char axis = 'x';

  // mechanical: binary word s(t) = floor((t+1)a + r) - floor(t a + r) laid
  // along `axis`.  Slope a is either slope_num/slope_den in (0,1), or the
  // golden-ratio conjugate (sqrt(5)-1)/2 when `golden` is set; the intercept
  // r is intercept_num/intercept_den.  Evaluated exactly.
  bool golden = false;
  i64 slope_num = 1;
  i64 slope_den = 2;
  i64 intercept_num = 0;
  i64 intercept_den = 1;
};

WindowConfiguration materialize(const GeneratorSpec& spec, const Rect& window);

/// Translation action: value at x becomes the old value at x+u, so the
/// stored window shifts by -u.
WindowConfiguration translate(const WindowConfiguration& cfg, const Vec& u);

/// (eta ∘ A) on target_window; requires the A-image of the target window to
/// lie inside cfg's window.
WindowConfiguration recoordinatize(const WindowConfiguration& cfg, const UnimodularMap& a,
                                   const Rect& target_window);

WindowConfiguration load_grid(std::istream& in);
WindowConfiguration load_grid_text(const std::string& text);
WindowConfiguration load_grid_file(const std::string& path);
std::string save_grid(const WindowConfiguration& cfg);

/// Exact floor(sqrt(v)).
i64 isqrt(i64 v);

/// Exact floor(m * (sqrt(5)-1)/2).
i64 floor_golden(i64 m);

/// Key=value generator parsing used by the CLI ("kind=delta", "slope=golden",
/// "periods=2,1;0,3", ...).
GeneratorSpec parse_generator_kv(const std::vector<std::string>& kvs);

}  // namespace nivat
