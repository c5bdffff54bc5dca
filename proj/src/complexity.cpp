#include "nivat/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_set>

namespace nivat {

Shape::Shape(std::vector<LatticePoint> pts) : pts_(std::move(pts)) {
  if (pts_.empty()) fail(Errc::invalid_argument, "shape must be nonempty");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  min_ = max_ = pts_.front();
  for (const auto& p : pts_) {
    min_.x = std::min(min_.x, p.x);
    min_.y = std::min(min_.y, p.y);
    max_.x = std::max(max_.x, p.x);
    max_.y = std::max(max_.y, p.y);
  }
}

Shape Shape::rect(i64 n, i64 k) {
  if (n <= 0 || k <= 0) fail(Errc::invalid_argument, "rectangle dimensions must be positive");
  std::vector<LatticePoint> pts;
  pts.reserve(static_cast<std::size_t>(n * k));
  for (i64 x = 0; x < n; ++x)
    for (i64 y = 0; y < k; ++y) pts.push_back({x, y});
  return Shape(std::move(pts));
}

Shape Shape::normalized() const { return translated(-min_); }

Shape Shape::translated(const Vec& v) const {
  std::vector<LatticePoint> pts;
  pts.reserve(pts_.size());
  for (const auto& p : pts_) pts.push_back(p + v);
  return Shape(std::move(pts));
}

bool Shape::contains(const LatticePoint& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::optional<std::size_t> Shape::index_of(const LatticePoint& p) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
  if (it == pts_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pts_.begin());
}

Rect translate_range(const Rect& window, const Shape& shape) {
  Rect r;
  r.x0 = window.x0 - shape.min_corner().x;
  r.y0 = window.y0 - shape.min_corner().y;
  r.width = window.width - (shape.max_corner().x - shape.min_corner().x + 1) + 1;
  r.height = window.height - (shape.max_corner().y - shape.min_corner().y + 1) + 1;
  return r;
}

std::vector<std::string> collect_over(const WindowConfiguration& cfg, const Shape& shape,
                                      const Rect& translates) {
  std::unordered_set<std::string> seen;
  std::string buf(shape.size(), '\0');
  for (i64 uy = translates.y0; uy < translates.y1(); ++uy)
    for (i64 ux = translates.x0; ux < translates.x1(); ++ux) {
      std::size_t i = 0;
      for (const auto& p : shape.points()) buf[i++] = cfg.symbol_at({p.x + ux, p.y + uy});
      seen.insert(buf);
    }
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

PatternLanguage collect_patterns(const WindowConfiguration& cfg, const Shape& shape) {
  Rect tr = translate_range(cfg.window(), shape);
  if (tr.width <= 0 || tr.height <= 0)
    fail(Errc::shape_too_large, "no translate of the shape fits inside the window");
  PatternLanguage lang;
  lang.shape = shape;
  lang.window = cfg.window();
  lang.translates = tr;
  lang.patterns = collect_over(cfg, shape, tr);
  return lang;
}

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Open-addressing set of single-word keys (exact packed patterns).
class Key64Set {
 public:
  void reset(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, kEmpty);
    has_empty_key_ = false;
    count_ = 0;
  }
  void insert(std::uint64_t key) {
    if (key == kEmpty) {
      if (!has_empty_key_) {
        has_empty_key_ = true;
        ++count_;
      }
      return;
    }
    std::size_t i = mix64(key) & mask_;
    while (true) {
      std::uint64_t s = slots_[i];
      if (s == kEmpty) {
        slots_[i] = key;
        ++count_;
        return;
      }
      if (s == key) return;
      i = (i + 1) & mask_;
    }
  }
  i64 count() const { return count_; }

 private:
  static constexpr std::uint64_t kEmpty = ~0ULL;
  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
  bool has_empty_key_ = false;
  i64 count_ = 0;
};

// Open-addressing set of W-word keys stored in an arena; full keys are
// compared, so counts are exact.
class KeyNSet {
 public:
  void reset(std::size_t expected, std::size_t words) {
    words_ = words;
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    mask_ = cap - 1;
    hashes_.assign(cap, 0);
    refs_.assign(cap, 0);
    arena_.clear();
    arena_.reserve(expected * words);
    count_ = 0;
  }
  void insert(const std::uint64_t* key) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t w = 0; w < words_; ++w) h = mix64(h ^ key[w]);
    if (h == 0) h = 1;
    std::size_t i = h & mask_;
    while (true) {
      if (refs_[i] == 0) {
        refs_[i] = static_cast<std::uint32_t>(arena_.size() / words_ + 1);
        hashes_[i] = h;
        arena_.insert(arena_.end(), key, key + words_);
        ++count_;
        return;
      }
      if (hashes_[i] == h) {
        const std::uint64_t* stored = arena_.data() + (refs_[i] - 1) * words_;
        if (std::equal(stored, stored + words_, key)) return;
      }
      i = (i + 1) & mask_;
    }
  }
  i64 count() const { return count_; }

 private:
  std::size_t words_ = 1;
  std::size_t mask_ = 0;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> refs_;
  std::vector<std::uint64_t> arena_;
  i64 count_ = 0;
};

i64 count_rect_naive(const WindowConfiguration& cfg, i64 n, i64 k) {
  return static_cast<i64>(collect_over(cfg, Shape::rect(n, k),
                                       translate_range(cfg.window(), Shape::rect(n, k)))
                              .size());
}

struct RectCounter {
  const WindowConfiguration& cfg;
  i64 max_n;
  unsigned bits;  // per symbol
  Key64Set set64;
  KeyNSet setn;
  std::vector<std::uint64_t> colw;  // packed k-cell columns, [y*W + x]

  explicit RectCounter(const WindowConfiguration& c, i64 mn) : cfg(c), max_n(mn) {
    bits = 1;
    while ((1u << bits) < cfg.alphabet().size()) ++bits;
  }

  // counts for one k, all n = 1..max_n, written into out[(k-1)*max_n + n-1]
  void run_row(i64 k, std::vector<i64>& out) {
    const i64 w = cfg.width(), h = cfg.height();
    if (k > h) {
      for (i64 n = 1; n <= max_n; ++n) out[static_cast<std::size_t>((k - 1) * max_n + n - 1)] = 0;
      return;
    }
    if (static_cast<unsigned>(k) * bits > 63) {
      for (i64 n = 1; n <= max_n; ++n)
        out[static_cast<std::size_t>((k - 1) * max_n + n - 1)] =
            (n <= w) ? count_rect_naive(cfg, n, k) : 0;
      return;
    }
    const unsigned colbits = static_cast<unsigned>(k) * bits;
    const std::uint64_t cellmask = (bits == 64) ? ~0ULL : ((1ULL << bits) - 1);
    const auto& cells = cfg.cells();
    colw.assign(static_cast<std::size_t>(w * (h - k + 1)), 0);
    // vertical rolling per column
    for (i64 x = 0; x < w; ++x) {
      std::uint64_t acc = 0;
      for (i64 y = 0; y < k; ++y)
        acc = (acc << bits) | (cells[static_cast<std::size_t>(y * w + x)] & cellmask);
      colw[static_cast<std::size_t>(x)] = acc;
      const std::uint64_t dropmask =
          (colbits >= 64) ? ~0ULL : ((1ULL << colbits) - 1);
      for (i64 y = 1; y + k <= h; ++y) {
        acc = ((acc << bits) | (cells[static_cast<std::size_t>((y + k - 1) * w + x)] & cellmask)) &
              dropmask;
        colw[static_cast<std::size_t>(y * w + x)] = acc;
      }
    }
    const i64 rows = h - k + 1;
    for (i64 n = 1; n <= max_n; ++n) {
      std::size_t idx = static_cast<std::size_t>((k - 1) * max_n + n - 1);
      if (n > w) {
        out[idx] = 0;
        continue;
      }
      const i64 cols = w - n + 1;
      const std::size_t translates = static_cast<std::size_t>(rows * cols);
      const unsigned total_bits = static_cast<unsigned>(n) * colbits;
      if (total_bits <= 64) {
        set64.reset(translates);
        const std::uint64_t keep =
            (total_bits == 64) ? ~0ULL : ((1ULL << total_bits) - 1);
        for (i64 y = 0; y < rows; ++y) {
          const std::uint64_t* row = colw.data() + static_cast<std::size_t>(y * w);
          std::uint64_t key = 0;
          for (i64 x = 0; x < n; ++x) key = (key << colbits) | row[x];
          set64.insert(key);
          for (i64 x = n; x < w; ++x) {
            key = ((key << colbits) | row[x]) & keep;
            set64.insert(key);
          }
        }
        out[idx] = set64.count();
      } else {
        const std::size_t words = (total_bits + 63) / 64;
        setn.reset(translates, words);
        std::vector<std::uint64_t> key(words, 0);
        for (i64 y = 0; y < rows; ++y) {
          const std::uint64_t* row = colw.data() + static_cast<std::size_t>(y * w);
          for (i64 x0 = 0; x0 < cols; ++x0) {
            // pack columns x0..x0+n-1 densely
            std::fill(key.begin(), key.end(), 0);
            unsigned pos = 0;
            for (i64 x = x0; x < x0 + n; ++x) {
              std::uint64_t v = row[x];
              unsigned word = pos / 64, off = pos % 64;
              key[word] |= v << off;
              if (off + colbits > 64 && word + 1 < words) key[word + 1] |= v >> (64 - off);
              pos += colbits;
            }
            setn.insert(key.data());
          }
        }
        out[idx] = setn.count();
      }
    }
  }
};

}  // namespace

RectComplexityTable rect_complexity_table(const WindowConfiguration& cfg, i64 max_n, i64 max_k,
                                          unsigned threads) {
  if (max_n < 1 || max_k < 1) fail(Errc::invalid_argument, "table bounds must be positive");
  if (max_n > cfg.width() || max_k > cfg.height())
    fail(Errc::shape_too_large, "R_{max_n,max_k} does not fit inside the window");
  RectComplexityTable table;
  table.max_n = max_n;
  table.max_k = max_k;
  table.window = cfg.window();
  table.p.assign(static_cast<std::size_t>(max_n * max_k), 0);

  if (threads == 0) threads = std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, 8));
  threads = std::min<unsigned>(threads, static_cast<unsigned>(max_k));

  std::atomic<i64> next_k{1};
  auto worker = [&]() {
    RectCounter counter(cfg, max_n);
    while (true) {
      i64 k = next_k.fetch_add(1);
      if (k > max_k) break;
      counter.run_row(k, table.p);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return table;
}

i64 discrepancy(const WindowConfiguration& cfg, const Shape& shape) {
  return collect_patterns(cfg, shape).count() - static_cast<i64>(shape.size());
}

bool point_generated(std::span<const std::string> patterns, const Shape& shape,
                     const LatticePoint& x) {
  auto xi = shape.index_of(x);
  if (!xi) fail(Errc::invalid_argument, "x must belong to the shape");
  std::map<std::string, char> rest_to_value;
  for (const auto& pat : patterns) {
    std::string rest = pat;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*xi));
    auto [it, fresh] = rest_to_value.emplace(rest, pat[*xi]);
    if (!fresh && it->second != pat[*xi]) return false;
  }
  return true;
}

GeneratedCheck is_generated(const WindowConfiguration& cfg, const Shape& shape,
                            const LatticePoint& x) {
  if (shape.size() < 2) fail(Errc::invalid_argument, "shape must have at least two points");
  auto xi = shape.index_of(x);
  if (!xi) fail(Errc::invalid_argument, "x must belong to the shape");
  PatternLanguage lang = collect_patterns(cfg, shape);
  std::map<std::string, std::string> rest_to_pattern;
  GeneratedCheck out;
  out.generated = true;
  for (const auto& pat : lang.patterns) {
    std::string rest = pat;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*xi));
    auto [it, fresh] = rest_to_pattern.emplace(rest, pat);
    if (!fresh && it->second[*xi] != pat[*xi]) {
      out.generated = false;
      out.witness = {it->second, pat};
      return out;
    }
  }
  return out;
}

i64 nonunique_extension_count(const WindowConfiguration& cfg, const Shape& shape,
                              const Shape& subshape) {
  std::vector<std::size_t> sub_idx;
  for (const auto& p : subshape.points()) {
    auto i = shape.index_of(p);
    if (!i) fail(Errc::invalid_argument, "subshape must be contained in the shape");
    sub_idx.push_back(*i);
  }
  if (sub_idx.size() >= shape.size())
    fail(Errc::invalid_argument, "subshape must be a proper subset");
  PatternLanguage lang = collect_patterns(cfg, shape);
  std::map<std::string, std::pair<std::string, bool>> groups;  // sub -> (first ext, >=2?)
  for (const auto& pat : lang.patterns) {
    std::string sub(sub_idx.size(), '\0');
    for (std::size_t i = 0; i < sub_idx.size(); ++i) sub[i] = pat[sub_idx[i]];
    auto [it, fresh] = groups.emplace(sub, std::make_pair(pat, false));
    if (!fresh && it->second.first != pat) it->second.second = true;
  }
  i64 n = 0;
  for (const auto& [sub, g] : groups)
    if (g.second) ++n;
  return n;
}

EntropyBoundReport entropy_bound_check(const WindowConfiguration& cfg, i64 n, i64 k, i64 max_np) {
  if (n < 1 || k < 1 || max_np < 1) fail(Errc::invalid_argument, "parameters must be positive");
  if (cfg.width() < 1 || cfg.height() < 1) fail(Errc::shape_too_large, "window too small");
  EntropyBoundReport report;
  const i64 asize = static_cast<i64>(cfg.alphabet().size());
  i64 limit = std::min({max_np, cfg.width(), cfg.height()});
  RectComplexityTable table = rect_complexity_table(cfg, limit, limit);
  for (i64 np = 1; np <= limit; ++np) {
    EntropyBoundRow row;
    row.np = np;
    row.p = table.at(np, np);
    row.exponent = 2 * n * np + 2 * k * np - 4 * n * k;
    row.in_hypothesis = (np > 2 * n) && (np > 2 * k);
    if (row.exponent < 0) {
      row.holds = false;
    } else {
      // compare P <= asize^exponent without overflow
      i64 pow = 1;
      bool big = false;
      for (i64 e = 0; e < row.exponent; ++e) {
        pow *= asize;
        if (pow > row.p) {
          big = true;
          break;
        }
      }
      row.holds = big || row.p <= pow;
    }
    if (row.in_hypothesis && !row.holds) report.holds_in_hypothesis = false;
    double ratio = std::log(static_cast<double>(row.p)) / (static_cast<double>(np) * np);
    report.max_log_ratio = std::max(report.max_log_ratio, ratio);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace nivat
