// weylkit command line: thin JSON shell over the C API in weylkit.h.
// Every subcommand prints a JSON document to stdout or --out.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "weylkit.h"

namespace {

struct CommonOpts {
  std::string datum = "GL2";
  long long q = 2;
  std::string tau = "id";
  std::string coeff = "qlbar";
  long long ell = 0;
  long long order_bound = 6;
  long long weyl_cap = 51840;
  unsigned long long seed = 0x5eed;
  std::string out;
};

void add_datum_opt(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--datum", o.datum, "builtin name (GL2, SL3, Sp4, ...) or JSON file path");
  cmd->add_option("--out", o.out, "write the JSON output to this path");
}

void add_frobenius_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--q", o.q, "prime power q >= 2");
  cmd->add_option("--tau", o.tau, "tau name (id, swap/unitary) or JSON matrix [[...]]");
  cmd->add_option("--coeff", o.coeff, "coefficient mode: qlbar or zlbar")
      ->check(CLI::IsMember({"qlbar", "zlbar"}));
  cmd->add_option("--ell", o.ell, "the prime ell (zlbar mode)");
  cmd->add_option("--order-bound", o.order_bound, "bound on point orders in sweeps");
  cmd->add_option("--weyl-cap", o.weyl_cap, "cap on |W| during enumeration");
  cmd->add_option("--seed", o.seed, "seed for randomized property checks");
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// The datum/tau flags accept either names or inline JSON; pass JSON through.
std::string name_or_json(const std::string& v) {
  if (!v.empty() && (v[0] == '[' || v[0] == '{')) return v;
  return quote(v);
}

std::string base_params(const CommonOpts& o) {
  std::string j = "{";
  j += "\"datum\":" + name_or_json(o.datum);
  j += ",\"q\":" + std::to_string(o.q);
  j += ",\"tau\":" + name_or_json(o.tau);
  j += ",\"coeff\":" + quote(o.coeff);
  j += ",\"ell\":" + std::to_string(o.ell);
  j += ",\"order_bound\":" + std::to_string(o.order_bound);
  j += ",\"weyl_cap\":" + std::to_string(o.weyl_cap);
  j += ",\"seed\":" + std::to_string(o.seed);
  return j;
}

int emit(const CommonOpts& o, const std::string& command, const std::string& params) {
  char* out = nullptr;
  wk_status st = wk_command(command.c_str(), params.c_str(), &out);
  if (st != WK_OK) {
    std::cerr << "error (" << wk_status_name(st) << "): " << wk_last_error() << "\n";
    return 1;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      wk_string_free(out);
      return 1;
    }
    f << out;
  } else {
    std::cout << out;
  }
  std::string text = out;
  wk_string_free(out);
  // verify reports failure through its payload as well as the exit status.
  if (command == "verify" && text.find("\"ok\": false") != std::string::npos) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylkit: exact dual-side combinatorics for reductive groups over finite fields"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string point = "0", source = "0", target, word, type = "A1";
  bool groupoid = false;

  CLI::App* validate = app.add_subcommand("validate", "validate a root datum");
  add_datum_opt(validate, o);

  CLI::App* dual = app.add_subcommand("dual", "dual root datum");
  add_datum_opt(dual, o);

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group order and longest element");
  add_datum_opt(weyl, o);
  weyl->add_option("--weyl-cap", o.weyl_cap, "cap on |W|");

  CLI::App* endoscopy = app.add_subcommand("endoscopy", "endoscopic datum at a point");
  add_datum_opt(endoscopy, o);
  endoscopy->add_option("--point", point, "semisimple point, e.g. \"1/2,0\"");

  CLI::App* blocks = app.add_subcommand("blocks", "block decomposition of a transporter");
  add_datum_opt(blocks, o);
  blocks->add_option("--source", source, "source point s");
  blocks->add_option("--target", target, "target point s' (default: source)");
  blocks->add_flag("--groupoid", groupoid, "also build and check the orbit groupoid");

  CLI::App* series = app.add_subcommand("series", "geometric and rational series");
  add_datum_opt(series, o);
  add_frobenius_opts(series, o);

  CLI::App* torus = app.add_subcommand("torus", "T^{wF} invariant factors");
  add_datum_opt(torus, o);
  add_frobenius_opts(torus, o);
  torus->add_option("--w", word, "reduced word, 1-based (e.g. \"1,2\"); omit for all w");

  CLI::App* curtis = app.add_subcommand("curtis", "spectral Curtis table and certificates");
  add_datum_opt(curtis, o);
  add_frobenius_opts(curtis, o);

  CLI::App* gg = app.add_subcommand("gg", "Gelfand-Graev restriction shadow (rank, shift)");
  add_datum_opt(gg, o);
  add_frobenius_opts(gg, o);
  gg->add_option("--w", word, "reduced word, 1-based");

  CLI::App* soergel = app.add_subcommand("soergel", "graded bimodule calculus");
  CLI::App* bs = soergel->add_subcommand("bs", "Bott-Samelson bimodule of a word");
  add_datum_opt(bs, o);
  bs->add_option("--word", word, "word in simple reflections, 1-based");
  bs->add_option("--point", point, "base point");
  CLI::App* steinberg = soergel->add_subcommand("steinberg", "Steinberg basis determinant");
  steinberg->add_option("--type", type, "A1, A1A1, A2, or B2")
      ->check(CLI::IsMember({"A1", "A1A1", "A2", "B2"}));
  steinberg->add_option("--out", o.out, "write the JSON output to this path");

  CLI::App* report = app.add_subcommand("report", "full series report for a configuration");
  add_datum_opt(report, o);
  add_frobenius_opts(report, o);

  CLI::App* verify = app.add_subcommand("verify", "run the bounded invariant suites");
  add_datum_opt(verify, o);
  add_frobenius_opts(verify, o);

  CLI11_PARSE(app, argc, argv);

  auto word_field = [&](const std::string& key) {
    if (word.empty()) return std::string();
    return ",\"" + key + "\":" + quote(word);
  };

  if (validate->parsed()) return emit(o, "validate", base_params(o) + "}");
  if (dual->parsed()) return emit(o, "dual", base_params(o) + "}");
  if (weyl->parsed()) return emit(o, "weyl", base_params(o) + "}");
  if (endoscopy->parsed())
    return emit(o, "endoscopy", base_params(o) + ",\"point\":" + quote(point) + "}");
  if (blocks->parsed()) {
    std::string params = base_params(o) + ",\"source\":" + quote(source);
    if (!target.empty()) params += ",\"target\":" + quote(target);
    if (groupoid) params += ",\"groupoid\":true";
    return emit(o, "blocks", params + "}");
  }
  if (series->parsed()) return emit(o, "series", base_params(o) + "}");
  if (torus->parsed()) return emit(o, "torus", base_params(o) + word_field("w") + "}");
  if (curtis->parsed()) return emit(o, "curtis", base_params(o) + "}");
  if (gg->parsed()) return emit(o, "gg", base_params(o) + word_field("w") + "}");
  if (soergel->parsed()) {
    if (bs->parsed()) {
      std::string params = base_params(o) + ",\"point\":" + quote(point) + word_field("word");
      return emit(o, "soergel-bs", params + "}");
    }
    if (steinberg->parsed())
      return emit(o, "soergel-steinberg", "{\"type\":" + quote(type) + "}");
    std::cerr << "soergel requires a subcommand (bs or steinberg)\n";
    return 1;
  }
  if (report->parsed()) return emit(o, "report", base_params(o) + "}");
  if (verify->parsed()) return emit(o, "verify", base_params(o) + "}");
  return 1;
}
