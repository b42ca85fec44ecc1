// polyreg command-line tool. Talks to the library only through polyreg.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "polyreg/polyreg.h"

namespace {

struct Common {
  std::optional<unsigned long> seed;
  std::optional<double> tol;
  std::optional<int> samples, precision, max_k, max_p, max_n;
  bool json = false;
};

struct Specific {
  std::optional<int> n, weight, nodes;
  std::optional<std::string> z, path, element, at, functions, radii, golden_dir;
};

template <class T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

int run(const std::string& command, const Common& c, const Specific& s) {
  nlohmann::json cfg = nlohmann::json::object();
  put(cfg, "seed", c.seed);
  put(cfg, "tol", c.tol);
  put(cfg, "samples", c.samples);
  put(cfg, "precision", c.precision);
  put(cfg, "max_k", c.max_k);
  put(cfg, "max_p", c.max_p);
  put(cfg, "max_n", c.max_n);
  put(cfg, "n", s.n);
  put(cfg, "weight", s.weight);
  put(cfg, "nodes", s.nodes);
  put(cfg, "z", s.z);
  put(cfg, "path", s.path);
  put(cfg, "element", s.element);
  put(cfg, "at", s.at);
  put(cfg, "functions", s.functions);
  put(cfg, "radii", s.radii);
  put(cfg, "golden_dir", s.golden_dir);

  char* out = nullptr;
  int passed = 0;
  const std::string text = cfg.dump();
  const polyreg_status st = polyreg_run(command.c_str(), text.c_str(), c.json ? "json" : "text", &out, &passed);
  if (st != POLYREG_OK) {
    std::cerr << "polyreg " << command << ": " << polyreg_status_name(st) << ": " << polyreg_last_error() << "\n";
    return st == POLYREG_ERR_INVALID_ARGUMENT || st == POLYREG_ERR_PARSE ? 2 : 1;
  }
  std::fputs(out, stdout);
  polyreg_string_free(out);
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-valued polylogarithms and explicit regulator maps: exact and numeric checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  Specific s;
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--tol", c.tol, "tolerance");
  app.add_option("--samples", c.samples, "sample points per check");
  app.add_option("--precision", c.precision, "working precision in bits");
  app.add_option("--max-k", c.max_k, "largest k");
  app.add_option("--max-p", c.max_p, "largest p");
  app.add_option("--max-n", c.max_n, "largest n");
  app.add_flag("--json", c.json, "JSON output");
  app.set_version_flag("--version", std::string(polyreg_version()));

  app.add_subcommand("beta", "table of beta_k (p = 0) and beta_{k,p}");
  app.add_subcommand("verify-identities", "recursions, the beta_{0,p} and beta_{1,p} grid, beta identities");

  auto* svp = app.add_subcommand("sv-polylog", "evaluate the single-valued polylogarithm");
  svp->add_option("-n", s.n, "index")->required();
  svp->add_option("-z", s.z, "argument as \"re,im\"")->required();
  svp->add_option("--path", s.path, "route")->check(CLI::IsMember({"auto", "direct", "path"}));

  auto* sym = app.add_subcommand("polylog-symmetries", "inversion, conjugation, five-term and path checks");
  sym->add_option("-n", s.n, "index");

  auto* res = app.add_subcommand("residue", "residue of an element at a rational point or inf");
  res->add_option("--element", s.element, "element, e.g. \"{(1-t)/t}_2 (x) t\"")->required();
  res->add_option("--at", s.at, "point a or inf")->required();

  auto* chain = app.add_subcommand("chain-check", "d r(e) = r(delta e) at generic points");
  chain->add_option("--weight", s.weight, "weight");
  chain->add_option("--element", s.element, "element (default: built-in shapes)");

  auto* top = app.add_subcommand("top-check", "d r_n(n) + pi_n(dlog f_1 ^ ... ^ dlog f_n) = 0");
  top->add_option("--functions", s.functions, "\"f1;f2;...\" (default: built-in families)");

  auto* loop = app.add_subcommand("loop-check", "loop integrals of r(e) against residues");
  loop->add_option("--weight", s.weight, "weight");
  loop->add_option("--element", s.element, "element (default: built-in cases)");
  loop->add_option("--at", s.at, "center of the loops");
  loop->add_option("--radii", s.radii, "decreasing radii, \"1e-2,3e-3,1e-3\"");
  loop->add_option("--nodes", s.nodes, "trapezoid nodes per loop (>= 64)");

  auto* golden = app.add_subcommand("golden", "regulator formulas against transcribed examples");
  golden->add_option("--golden-dir", s.golden_dir, "directory of golden records");
  auto* all = app.add_subcommand("all", "every suite");
  all->add_option("--golden-dir", s.golden_dir, "directory of golden records");

  for (const char* name : {"beta-values", "sv-polylog-values", "dpolylog", "form-invariants", "residue-check"})
    app.add_subcommand(name, std::string("suite ") + name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(app.get_subcommands().front()->get_name(), c, s);
}
