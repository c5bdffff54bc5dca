// Command-line front end.  Links against the shared C API only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nivat/nivat.h"

namespace {

struct ConfigArgs {
  std::string input;
  std::vector<std::string> gen;
  std::vector<long long> window;  // x0 y0 w h
};

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
  auto* input = cmd->add_option("--input", args.input, "grid file (lines of symbols)");
  auto* gen = cmd->add_option("--gen", args.gen,
                              "generator key=value pairs (kind=constant|delta|motif|product|"
                              "mechanical, symbol=, at=X,Y, motif=ROW/ROW, periods=PX,PY;QX,QY, "
                              "word=, axis=x|y, slope=P/Q|golden, intercept=P/Q)");
  cmd->add_option("--window", args.window, "window X0 Y0 WIDTH HEIGHT (generators only)")
      ->expected(4);
  input->excludes(gen);
}

int die(nivat_status st) {
  std::cerr << "error: " << nivat_last_error_message() << "\n";
  return st == NIVAT_EHYPOTHESIS ? 2 : 1;
}

nivat_config* open_config(const ConfigArgs& args, int& rc) {
  nivat_config* cfg = nullptr;
  nivat_status st;
  if (!args.input.empty()) {
    st = nivat_config_from_file(args.input.c_str(), &cfg);
  } else if (!args.gen.empty()) {
    std::vector<const char*> kv;
    for (const auto& s : args.gen) kv.push_back(s.c_str());
    long long x0 = -32, y0 = -32, w = 65, h = 65;
    if (args.window.size() == 4) {
      x0 = args.window[0];
      y0 = args.window[1];
      w = args.window[2];
      h = args.window[3];
    }
    st = nivat_config_generate(kv.data(), static_cast<int>(kv.size()), x0, y0, w, h, &cfg);
  } else {
    std::cerr << "error: provide --input FILE or --gen KEY=VAL...\n";
    rc = 1;
    return nullptr;
  }
  if (st != NIVAT_OK) {
    rc = die(st);
    return nullptr;
  }
  return cfg;
}

int write_out(const char* text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nivat: periodicity analysis of two-dimensional configurations under "
               "rectangular complexity bounds"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full pipeline: table, hits, generating set, "
                                                "expansiveness certificates, trichotomy verdict");
  ConfigArgs a_cfg;
  add_config_options(analyze, a_cfg);
  long long a_max_n = 8, a_max_k = 8;
  std::vector<long long> a_budget;
  std::vector<long long> a_balanced;
  std::string a_format = "text", a_out;
  analyze->add_option("--max-n", a_max_n, "max n of the complexity table");
  analyze->add_option("--max-k", a_max_k, "max k of the complexity table");
  analyze->add_option("--budget", a_budget, "certificate budget A B")->expected(2);
  analyze->add_option("--balanced", a_balanced, "balanced-set direction DX DY")->expected(2);
  analyze->add_option("--format", a_format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  analyze->add_option("--out", a_out, "write the report to a file");

  // complexity
  auto* complexity = app.add_subcommand("complexity", "P(n,k) table only");
  ConfigArgs c_cfg;
  add_config_options(complexity, c_cfg);
  long long c_max_n = 8, c_max_k = 8;
  std::string c_format = "csv", c_out;
  complexity->add_option("--max-n", c_max_n, "max n");
  complexity->add_option("--max-k", c_max_k, "max k");
  complexity->add_option("--format", c_format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  complexity->add_option("--out", c_out, "write to a file");

  // deduce
  auto* deduce = app.add_subcommand("deduce", "mask-and-reconstruct demonstration");
  ConfigArgs d_cfg;
  add_config_options(deduce, d_cfg);
  long long d_n = 2, d_k = 2, d_seed_w = 0, d_seed_h = 0;
  bool d_trace = false;
  std::string d_format = "text", d_out;
  deduce->add_option("-n", d_n, "generating-set container width");
  deduce->add_option("-k", d_k, "generating-set container height");
  deduce->add_option("--seed-w", d_seed_w, "seed block width (default 4n)");
  deduce->add_option("--seed-h", d_seed_h, "seed block height (default 4k)");
  deduce->add_flag("--trace", d_trace, "emit one `x y symbol ux uy` line per forced cell");
  deduce->add_option("--format", d_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  deduce->add_option("--out", d_out, "write to a file");

  // finewilf
  auto* finewilf = app.add_subcommand("finewilf", "periodic reconstruction from a segment");
  std::string f_segment;
  long long f_p = 1;
  std::string f_format = "text", f_out;
  finewilf->add_option("segment", f_segment, "the observed consecutive entries")->required();
  finewilf->add_option("-p", f_p, "maximum period")->required();
  finewilf->add_option("--format", f_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  finewilf->add_option("--out", f_out, "write to a file");

  // morsehedlund
  auto* mh = app.add_subcommand("morsehedlund", "interval Morse-Hedlund periodicity check");
  std::string m_word;
  long long m_n0 = 1;
  std::string m_format = "text", m_out;
  mh->add_option("word", m_word, "the finite word")->required();
  mh->add_option("--n0", m_n0, "block length n0")->required();
  mh->add_option("--format", m_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  mh->add_option("--out", m_out, "write to a file");

  CLI11_PARSE(app, argc, argv);

  char* text = nullptr;
  nivat_status st = NIVAT_OK;
  int rc = 0;

  if (analyze->parsed()) {
    nivat_config* cfg = open_config(a_cfg, rc);
    if (!cfg) return rc;
    long long ba = a_budget.size() == 2 ? a_budget[0] : 8;
    long long bb = a_budget.size() == 2 ? a_budget[1] : 8;
    int any_hit = 0;
    if (a_balanced.size() == 2)
      st = nivat_analyze_balanced(cfg, a_max_n, a_max_k, ba, bb, a_balanced[0], a_balanced[1],
                                  a_format.c_str(), &text, &any_hit);
    else
      st = nivat_analyze(cfg, a_max_n, a_max_k, ba, bb, a_format.c_str(), &text, &any_hit);
    nivat_config_free(cfg);
    if (st != NIVAT_OK) return die(st);
    rc = write_out(text, a_out);
    nivat_string_free(text);
    return rc != 0 ? rc : (any_hit ? 0 : 2);
  }

  if (complexity->parsed()) {
    nivat_config* cfg = open_config(c_cfg, rc);
    if (!cfg) return rc;
    st = nivat_complexity(cfg, c_max_n, c_max_k, c_format.c_str(), &text);
    nivat_config_free(cfg);
    if (st != NIVAT_OK) return die(st);
    rc = write_out(text, c_out);
    nivat_string_free(text);
    return rc;
  }

  if (deduce->parsed()) {
    nivat_config* cfg = open_config(d_cfg, rc);
    if (!cfg) return rc;
    if (d_seed_w <= 0) d_seed_w = 4 * d_n;
    if (d_seed_h <= 0) d_seed_h = 4 * d_k;
    st = nivat_deduce_demo(cfg, d_n, d_k, d_seed_w, d_seed_h, d_trace ? 1 : 0, d_format.c_str(),
                           &text);
    nivat_config_free(cfg);
    if (st != NIVAT_OK) return die(st);
    rc = write_out(text, d_out);
    nivat_string_free(text);
    return rc;
  }

  if (finewilf->parsed()) {
    st = nivat_fine_wilf(f_segment.c_str(), f_p, f_format.c_str(), &text);
    if (st != NIVAT_OK) return die(st);
    rc = write_out(text, f_out);
    nivat_string_free(text);
    return rc;
  }

  if (mh->parsed()) {
    st = nivat_morse_hedlund(m_word.c_str(), m_n0, m_format.c_str(), &text);
    if (st != NIVAT_OK) return die(st);
    rc = write_out(text, m_out);
    nivat_string_free(text);
    return rc;
  }

  return 0;
}
