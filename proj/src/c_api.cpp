#include "nivat/nivat.h"

#include <cstring>
#include <string>

#include "nivat/analysis.hpp"
#include "nivat/config.hpp"
#include "nivat/errors.hpp"

using namespace nivat;

struct nivat_config {
  WindowConfiguration cfg;
};

namespace {

thread_local std::string g_last_error;

nivat_status status_of(const Error& e) {
  switch (e.code) {
    case Errc::invalid_argument: return NIVAT_EINVAL;
    case Errc::bad_spec:
    case Errc::ragged_rows:
    case Errc::empty_input: return NIVAT_EPARSE;
    case Errc::io_error: return NIVAT_EIO;
    case Errc::hypothesis_fails:
    case Errc::hypothesis_violation:
    case Errc::no_such_subset: return NIVAT_EHYPOTHESIS;
    case Errc::shape_too_large:
    case Errc::frame_too_large:
    case Errc::out_of_window:
    case Errc::degenerate_set:
    case Errc::empty_border: return NIVAT_ETOOLARGE;
    case Errc::internal: return NIVAT_EINTERNAL;
  }
  return NIVAT_EINTERNAL;
}

template <typename Fn>
nivat_status guarded(Fn&& fn) {
  try {
    fn();
    return NIVAT_OK;
  } catch (const Error& e) {
    g_last_error = std::string(errc_name(e.code)) + ": " + e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NIVAT_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NIVAT_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OutputFormat parse_format(const char* format) {
  if (!format) fail(Errc::invalid_argument, "format must not be null");
  std::string f(format);
  if (f == "text") return OutputFormat::text;
  if (f == "json") return OutputFormat::json;
  if (f == "csv") return OutputFormat::csv;
  fail(Errc::invalid_argument, "format must be text, json or csv");
}

nivat_status analyze_impl(const nivat_config* cfg, int64_t max_n, int64_t max_k, int64_t budget_a,
                          int64_t budget_b, const Vec* balanced, const char* format, char** out,
                          int* any_hit) {
  return guarded([&] {
    if (!cfg || !out) fail(Errc::invalid_argument, "null argument");
    AnalysisRequest req;
    req.max_n = max_n;
    req.max_k = max_k;
    req.budget = {budget_a, budget_b};
    if (balanced) req.balanced_direction = *balanced;
    AnalysisReport rep = run_analysis(cfg->cfg, req);
    if (any_hit) *any_hit = rep.any_hit ? 1 : 0;
    *out = dup_string(emit(rep, parse_format(format)));
  });
}

}  // namespace

extern "C" {

nivat_status nivat_config_from_text(const char* text, nivat_config** out) {
  return guarded([&] {
    if (!text || !out) fail(Errc::invalid_argument, "null argument");
    *out = new nivat_config{load_grid_text(text)};
  });
}

nivat_status nivat_config_from_file(const char* path, nivat_config** out) {
  return guarded([&] {
    if (!path || !out) fail(Errc::invalid_argument, "null argument");
    *out = new nivat_config{load_grid_file(path)};
  });
}

nivat_status nivat_config_generate(const char* const* kv, int kv_count, int64_t x0, int64_t y0,
                                   int64_t width, int64_t height, nivat_config** out) {
  return guarded([&] {
    if (!kv || !out || kv_count < 0) fail(Errc::invalid_argument, "null argument");
    std::vector<std::string> kvs;
    for (int i = 0; i < kv_count; ++i) {
      if (!kv[i]) fail(Errc::invalid_argument, "null key=value entry");
      kvs.emplace_back(kv[i]);
    }
    GeneratorSpec spec = parse_generator_kv(kvs);
    *out = new nivat_config{materialize(spec, Rect{x0, y0, width, height})};
  });
}

void nivat_config_free(nivat_config* cfg) { delete cfg; }

nivat_status nivat_config_to_text(const nivat_config* cfg, char** out) {
  return guarded([&] {
    if (!cfg || !out) fail(Errc::invalid_argument, "null argument");
    *out = dup_string(save_grid(cfg->cfg));
  });
}

nivat_status nivat_config_dims(const nivat_config* cfg, int64_t* x0, int64_t* y0, int64_t* width,
                               int64_t* height) {
  return guarded([&] {
    if (!cfg) fail(Errc::invalid_argument, "null argument");
    if (x0) *x0 = cfg->cfg.window().x0;
    if (y0) *y0 = cfg->cfg.window().y0;
    if (width) *width = cfg->cfg.window().width;
    if (height) *height = cfg->cfg.window().height;
  });
}

nivat_status nivat_config_alphabet(const nivat_config* cfg, char** out) {
  return guarded([&] {
    if (!cfg || !out) fail(Errc::invalid_argument, "null argument");
    *out = dup_string(cfg->cfg.alphabet().symbols());
  });
}

nivat_status nivat_analyze(const nivat_config* cfg, int64_t max_n, int64_t max_k,
                           int64_t budget_a, int64_t budget_b, const char* format, char** out,
                           int* any_hit) {
  return analyze_impl(cfg, max_n, max_k, budget_a, budget_b, nullptr, format, out, any_hit);
}

nivat_status nivat_analyze_balanced(const nivat_config* cfg, int64_t max_n, int64_t max_k,
                                    int64_t budget_a, int64_t budget_b, int64_t dx, int64_t dy,
                                    const char* format, char** out, int* any_hit) {
  Vec dir{dx, dy};
  return analyze_impl(cfg, max_n, max_k, budget_a, budget_b, &dir, format, out, any_hit);
}

nivat_status nivat_complexity(const nivat_config* cfg, int64_t max_n, int64_t max_k,
                              const char* format, char** out) {
  return guarded([&] {
    if (!cfg || !out) fail(Errc::invalid_argument, "null argument");
    AnalysisRequest req;
    req.max_n = max_n;
    req.max_k = max_k;
    req.want_trichotomy = false;
    req.want_generating = false;
    AnalysisReport rep = run_analysis(cfg->cfg, req);
    *out = dup_string(emit(rep, parse_format(format)));
  });
}

nivat_status nivat_deduce_demo(const nivat_config* cfg, int64_t n, int64_t k, int64_t seed_w,
                               int64_t seed_h, int trace, const char* format, char** out) {
  return guarded([&] {
    if (!cfg || !out) fail(Errc::invalid_argument, "null argument");
    DeduceDemoReport rep = deduce_demo(cfg->cfg, n, k, seed_w, seed_h, trace != 0);
    *out = dup_string(render_deduce_demo(rep, parse_format(format)));
  });
}

nivat_status nivat_fine_wilf(const char* segment, int64_t p, const char* format, char** out) {
  return guarded([&] {
    if (!segment || !out) fail(Errc::invalid_argument, "null argument");
    FineWilfResult r = fine_wilf_reconstruct(segment, p);
    *out = dup_string(render_fine_wilf(r, parse_format(format)));
  });
}

nivat_status nivat_morse_hedlund(const char* word, int64_t n0, const char* format, char** out) {
  return guarded([&] {
    if (!word || !out) fail(Errc::invalid_argument, "null argument");
    MorseHedlundVerdict v = morse_hedlund_check(word, n0);
    *out = dup_string(render_morse_hedlund(v, parse_format(format)));
  });
}

void nivat_string_free(char* s) { std::free(s); }

const char* nivat_last_error_message(void) { return g_last_error.c_str(); }

int nivat_schema_version(void) { return 1; }

}  // extern "C"
