#include "polyreg/polyreg.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "polyreg/bernoulli.hpp"
#include "polyreg/chain.hpp"
#include "polyreg/checks.hpp"
#include "polyreg/error.hpp"
#include "polyreg/form.hpp"
#include "polyreg/golden.hpp"
#include "polyreg/polylog.hpp"
#include "polyreg/regulator.hpp"
#include "polyreg/suites.hpp"

struct polyreg_function {
  polyreg::RationalFunction value;
};
struct polyreg_element {
  polyreg::ChainElement value;
};
struct polyreg_form {
  polyreg::Form value;
};

namespace {

using nlohmann::json;
using namespace polyreg;

thread_local std::string last_error;

polyreg_status status_of(ErrorKind k) { return static_cast<polyreg_status>(static_cast<int>(k)); }

template <class F>
polyreg_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return POLYREG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const json::exception& e) {
    last_error = std::string("configuration: ") + e.what();
    return POLYREG_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return POLYREG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return POLYREG_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

// ---- polyreg_run ----

std::vector<double> parse_list(const json& v) {
  std::vector<double> out;
  if (v.is_array()) {
    for (auto& x : v) out.push_back(x.get<double>());
    return out;
  }
  std::stringstream ss(v.get<std::string>());
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "not a number: '" + item + "'");
    }
  }
  return out;
}

SuiteOptions options_from(const json& c) {
  SuiteOptions o;
  if (c.contains("seed")) o.seed = c["seed"].get<unsigned long>();
  if (c.contains("tol")) o.tol = c["tol"].get<double>();
  if (c.contains("polylog_tol")) o.polylog_tol = c["polylog_tol"].get<double>();
  if (c.contains("samples")) o.samples = c["samples"].get<int>();
  if (c.contains("precision")) o.precision_bits = c["precision"].get<int>();
  if (c.contains("max_k")) o.max_k = c["max_k"].get<int>();
  if (c.contains("max_p")) o.max_p = c["max_p"].get<int>();
  if (c.contains("max_n")) o.max_n = c["max_n"].get<int>();
  if (c.contains("max_m")) o.max_m = c["max_m"].get<int>();
  if (c.contains("radii")) o.loop_radii = parse_list(c["radii"]);
  if (c.contains("nodes")) o.loop_nodes = c["nodes"].get<int>();
  if (c.contains("golden_dir")) o.golden_dir = c["golden_dir"].get<std::string>();
  if (!(o.tol > 0) || !(o.polylog_tol > 0)) fail(ErrorKind::InvalidArgument, "tolerances must be positive");
  if (o.samples < 1) fail(ErrorKind::InvalidArgument, "samples must be at least 1");
  if (o.precision_bits < 16 || o.precision_bits > 4096) fail(ErrorKind::InvalidArgument, "precision must be in [16, 4096]");
  return o;
}

struct Output {
  std::string text;
  json data;
  bool passed = true;
};

Output report_output(const Report& r) { return {r.to_text(), r.to_json(), r.pass()}; }

std::string require_string(const json& c, const char* key) {
  if (!c.contains(key)) fail(ErrorKind::InvalidArgument, std::string("missing option '") + key + "'");
  return c[key].get<std::string>();
}

void check_weight(const json& c, const ChainElement& e) {
  if (c.contains("weight") && c["weight"].get<int>() != e.weight())
    fail(ErrorKind::InvalidArgument, "element has weight " + std::to_string(e.weight()) + ", not " +
                                         std::to_string(c["weight"].get<int>()));
}

Output run_sv_polylog(const json& c, const SuiteOptions& o) {
  if (!c.contains("n")) fail(ErrorKind::InvalidArgument, "missing option 'n'");
  const int n = c["n"].get<int>();
  const std::string z = require_string(c, "z");
  const auto comma = z.find(',');
  const std::string re = z.substr(0, comma), im = comma == std::string::npos ? "0" : z.substr(comma + 1);
  PolylogOptions po;
  po.precision_bits = o.precision_bits;
  const std::string path = c.value("path", std::string("auto"));
  if (path == "auto")
    po.route = Route::Auto;
  else if (path == "direct")
    po.route = Route::Direct;
  else if (path == "path")
    po.route = Route::Path;
  else
    fail(ErrorKind::InvalidArgument, "path must be auto, direct or path");
  Output out;
  std::string vre, vim;
  Route route;
  if (o.precision_bits > 53) {
    const HighPrecisionValue v = sv_polylog_hp(n, re, im, po);
    vre = v.re;
    vim = v.im;
    route = v.route;
  } else {
    cplx zz;
    try {
      zz = cplx(std::stod(re), std::stod(im));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "z must be \"re,im\"");
    }
    const cplx v = sv_polylog(n, zz, po);
    vre = format_double(v.real());
    vim = format_double(v.imag());
    route = sv_polylog_route(zz, po);
  }
  out.data = {{"n", n}, {"z", {{"re", re}, {"im", im}}}, {"value", {{"re", vre}, {"im", vim}}},
              {"route", to_string(route)}, {"precision", o.precision_bits}};
  out.text = "L" + std::to_string(n) + "(" + re + (im[0] == '-' ? "" : "+") + im + "i) = " + vre + " + (" + vim +
             ")i\nroute: " + to_string(route) + "\n";
  return out;
}

Output run_command(const std::string& cmd, const json& c) {
  const SuiteOptions o = options_from(c);
  if (cmd == "beta") {
    const int k = c.value("max_k", 8), p = c.value("max_p", 8);
    return {beta_table_tsv(k, p), beta_table_json(k, p), true};
  }
  if (cmd == "verify-identities") return report_output(run_suite("verify-identities", o));
  if (cmd == "sv-polylog") return run_sv_polylog(c, o);
  if (cmd == "polylog-symmetries") {
    const int n = c.value("n", 2);
    const int samples = c.value("samples", 25);
    const double tol = c.value("tol", o.polylog_tol);
    Report r;
    r.suite = "polylog-symmetries";
    r.merge(sv_polylog_check_symmetries(n, samples, tol, o.seed));
    r.merge(sv_polylog_check_path_independence(n, samples, tol, o.seed + 1));
    return report_output(r);
  }
  if (cmd == "residue") {
    const ChainElement e = ChainElement::parse(require_string(c, "element"));
    const std::string at = c.contains("at") ? c["at"].get<std::string>() : "0";
    const ChainElement r = residue(e, Valuation::parse(at));
    Output out;
    out.data = {{"element", e.to_string()}, {"at", at}, {"residue", r.to_string()}, {"weight", r.weight()}};
    out.text = r.is_zero() ? "0\n" : r.to_string() + "\n";
    return out;
  }
  if (cmd == "chain-check" && c.contains("element")) {
    const ChainElement e = ChainElement::parse(c["element"].get<std::string>());
    check_weight(c, e);
    return report_output(chain_check(e, o.regulator()));
  }
  if (cmd == "top-check" && c.contains("functions")) {
    std::vector<RationalFunction> fs;
    std::stringstream ss(c["functions"].get<std::string>());
    std::string item;
    while (std::getline(ss, item, ';')) fs.push_back(RationalFunction::parse(item));
    return report_output(top_check(fs, o.regulator()));
  }
  if (cmd == "loop-check" && c.contains("element")) {
    const ChainElement e = ChainElement::parse(c["element"].get<std::string>());
    check_weight(c, e);
    const std::string at = c.contains("at") ? c["at"].get<std::string>() : "0";
    const Valuation v = Valuation::parse(at);
    if (v.kind != Valuation::Kind::Finite) fail(ErrorKind::Unsupported, "loop check needs a finite point");
    return report_output(loop_residue_check(e, v.point, o.regulator()));
  }
  if (cmd == "chain-check" && c.contains("weight")) {
    const int w = c["weight"].get<int>();
    Report r;
    r.suite = "chain-check";
    for (auto& text : chain_check_elements()) {
      const ChainElement e = ChainElement::parse(text);
      if (e.weight() == w) r.merge(chain_check(e, o.regulator()));
    }
    if (r.cases.empty()) fail(ErrorKind::InvalidArgument, "no built-in chain-check elements of weight " + std::to_string(w));
    return report_output(r);
  }
  if (cmd == "all") {
    const json j = run_all(o);
    Output out;
    out.data = j;
    out.passed = j["pass"].get<bool>();
    for (auto& r : j["reports"]) out.text += report_text(r) + "\n";
    out.text += std::string("all: ") + (out.passed ? "PASS" : "FAIL") + "\n";
    return out;
  }
  if (cmd == "residue-check") return report_output(run_suite("residue", o));
  for (auto& name : suite_names())
    if (name == cmd) return report_output(run_suite(cmd, o));
  fail(ErrorKind::InvalidArgument, "unknown command '" + cmd + "'");
}

}  // namespace

extern "C" {

const char* polyreg_version(void) { return "1.0.0"; }

const char* polyreg_last_error(void) { return last_error.c_str(); }

const char* polyreg_status_name(polyreg_status s) {
  switch (s) {
    case POLYREG_OK: return "ok";
    case POLYREG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case POLYREG_ERR_PARSE: return "parse error";
    case POLYREG_ERR_DOMAIN: return "domain error";
    case POLYREG_ERR_POLE: return "pole";
    case POLYREG_ERR_DIVISION_BY_ZERO: return "division by zero";
    case POLYREG_ERR_UNSUPPORTED: return "unsupported";
    case POLYREG_ERR_CONVERGENCE: return "no convergence";
    case POLYREG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void polyreg_string_free(char* s) { std::free(s); }

polyreg_status polyreg_beta(int k, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(beta(k).to_string());
  });
}

polyreg_status polyreg_beta_kp(int k, int p, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(beta_kp(k, p).to_string());
  });
}

polyreg_status polyreg_sv_polylog(int n, double re, double im, const char* route, double* out_re, double* out_im) {
  return guarded([&] {
    need(out_re, "out_re");
    need(out_im, "out_im");
    PolylogOptions po;
    const std::string r = route ? route : "auto";
    if (r == "direct")
      po.route = Route::Direct;
    else if (r == "path")
      po.route = Route::Path;
    else if (r != "auto")
      fail(ErrorKind::InvalidArgument, "route must be auto, direct or path");
    const cplx v = sv_polylog(n, cplx(re, im), po);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

polyreg_status polyreg_function_parse(const char* text, polyreg_function** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new polyreg_function{RationalFunction::parse(text)};
  });
}

void polyreg_function_free(polyreg_function* f) { delete f; }

polyreg_status polyreg_function_to_string(const polyreg_function* f, char** out) {
  return guarded([&] {
    need(f, "function");
    need(out, "out");
    *out = dup(f->value.to_string());
  });
}

polyreg_status polyreg_element_parse(const char* text, polyreg_element** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new polyreg_element{ChainElement::parse(text)};
  });
}

void polyreg_element_free(polyreg_element* e) { delete e; }

polyreg_status polyreg_element_to_string(const polyreg_element* e, char** out) {
  return guarded([&] {
    need(e, "element");
    need(out, "out");
    *out = dup(e->value.is_zero() ? "0" : e->value.to_string());
  });
}

polyreg_status polyreg_element_delta(const polyreg_element* e, polyreg_element** out) {
  return guarded([&] {
    need(e, "element");
    need(out, "out");
    *out = new polyreg_element{delta(e->value)};
  });
}

polyreg_status polyreg_element_residue(const polyreg_element* e, const char* at, polyreg_element** out) {
  return guarded([&] {
    need(e, "element");
    need(at, "at");
    need(out, "out");
    *out = new polyreg_element{residue(e->value, Valuation::parse(at))};
  });
}

polyreg_status polyreg_regulator(const polyreg_element* e, polyreg_form** out) {
  return guarded([&] {
    need(e, "element");
    need(out, "out");
    *out = new polyreg_form{r_map(e->value)};
  });
}

polyreg_status polyreg_form_parse(const char* text, polyreg_form** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new polyreg_form{Form::parse(text)};
  });
}

void polyreg_form_free(polyreg_form* f) { delete f; }

polyreg_status polyreg_form_to_string(const polyreg_form* f, char** out) {
  return guarded([&] {
    need(f, "form");
    need(out, "out");
    *out = dup(f->value.to_string());
  });
}

int polyreg_form_degree(const polyreg_form* f) { return f ? f->value.degree() : -1; }

polyreg_status polyreg_form_derivative(const polyreg_form* f, polyreg_form** out) {
  return guarded([&] {
    need(f, "form");
    need(out, "out");
    *out = new polyreg_form{exterior_derivative(f->value)};
  });
}

polyreg_status polyreg_form_evaluate(const polyreg_form* f, size_t nvar, const char* const* names, const double* point,
                                     size_t nvec, const double* vectors, double* out_re, double* out_im) {
  return guarded([&] {
    need(f, "form");
    need(out_re, "out_re");
    need(out_im, "out_im");
    if (nvar > 0) {
      need(names, "names");
      need(point, "point");
    }
    if (nvec > 0 && nvar > 0) need(vectors, "vectors");
    EvalPoint x;
    for (size_t i = 0; i < nvar; ++i) {
      need(names[i], "variable name");
      x.variables.emplace_back(names[i]);
      x.x.emplace_back(point[2 * i], point[2 * i + 1]);
    }
    std::vector<std::vector<cplx>> vs(nvec);
    for (size_t j = 0; j < nvec; ++j)
      for (size_t i = 0; i < nvar; ++i) vs[j].emplace_back(vectors[2 * (j * nvar + i)], vectors[2 * (j * nvar + i) + 1]);
    const cplx v = evaluate(f->value, x, vs);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

polyreg_status polyreg_run(const char* command, const char* config_json, const char* format, char** out, int* passed) {
  return guarded([&] {
    need(command, "command");
    need(out, "out");
    const std::string fmt = format ? format : "text";
    if (fmt != "text" && fmt != "json") fail(ErrorKind::InvalidArgument, "format must be text or json");
    json cfg = json::object();
    if (config_json && *config_json) cfg = json::parse(config_json);
    if (!cfg.is_object()) fail(ErrorKind::InvalidArgument, "configuration must be a JSON object");
    const Output o = run_command(command, cfg);
    *out = dup(fmt == "json" ? o.data.dump(2) + "\n" : o.text);
    if (passed) *passed = o.passed ? 1 : 0;
  });
}

}  // extern "C"
