#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <string>

#include "polyreg/polyreg.h"

namespace {
std::string take(char* s) {
  std::string r = s ? s : "";
  polyreg_string_free(s);
  return r;
}
}  // namespace

TEST_CASE("exact numbers") {
  char* s = nullptr;
  REQUIRE(polyreg_beta(6, &s) == POLYREG_OK);
  CHECK(take(s) == "2/945");
  REQUIRE(polyreg_beta_kp(0, 2, &s) == POLYREG_OK);
  CHECK(take(s) == "1/3");
  CHECK(polyreg_beta(-1, &s) == POLYREG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(polyreg_last_error()).size() > 0);
  CHECK(std::string(polyreg_status_name(POLYREG_ERR_POLE)) == "pole");
}

TEST_CASE("single-valued polylog") {
  double re = 1, im = 0;
  REQUIRE(polyreg_sv_polylog(2, 0, 1, nullptr, &re, &im) == POLYREG_OK);
  CHECK(std::abs(re) < 1e-15);
  CHECK(std::abs(im - 0.9159655941772190) < 1e-10);
  CHECK(std::string(polyreg_last_error()).empty());
  CHECK(polyreg_sv_polylog(2, 0, 1, "sideways", &re, &im) == POLYREG_ERR_INVALID_ARGUMENT);
  CHECK(polyreg_sv_polylog(1, 1, 0, nullptr, &re, &im) == POLYREG_ERR_DOMAIN);
}

TEST_CASE("elements, residues, regulator") {
  polyreg_element* e = nullptr;
  REQUIRE(polyreg_element_parse("{(2+t)/(1+t)}_3 (x) t", &e) == POLYREG_OK);
  char* s = nullptr;
  REQUIRE(polyreg_element_to_string(e, &s) == POLYREG_OK);
  const std::string text = take(s);
  polyreg_element* again = nullptr;
  REQUIRE(polyreg_element_parse(text.c_str(), &again) == POLYREG_OK);
  REQUIRE(polyreg_element_to_string(again, &s) == POLYREG_OK);
  CHECK(take(s) == text);
  polyreg_element_free(again);

  polyreg_element* res = nullptr;
  REQUIRE(polyreg_element_residue(e, "0", &res) == POLYREG_OK);
  REQUIRE(polyreg_element_to_string(res, &s) == POLYREG_OK);
  CHECK(take(s) == "{2}_3");
  polyreg_element_free(res);

  polyreg_element* d = nullptr;
  REQUIRE(polyreg_element_delta(e, &d) == POLYREG_OK);
  polyreg_element_free(d);

  polyreg_form* r = nullptr;
  REQUIRE(polyreg_regulator(e, &r) == POLYREG_OK);
  CHECK(polyreg_form_degree(r) == 1);
  polyreg_form* dr = nullptr;
  REQUIRE(polyreg_form_derivative(r, &dr) == POLYREG_OK);
  CHECK(polyreg_form_degree(dr) == 2);
  const char* names[] = {"t"};
  const double point[] = {0.3, 0.7}, vec[] = {1, 0};
  double re = 0, im = 0;
  REQUIRE(polyreg_form_evaluate(r, 1, names, point, 1, vec, &re, &im) == POLYREG_OK);
  CHECK(std::abs(re) < 1e-12);  // weight 4: values in i R
  polyreg_form_free(dr);
  polyreg_form_free(r);
  polyreg_element_free(e);

  CHECK(polyreg_element_parse("{t}_2 (x", &e) == POLYREG_ERR_PARSE);
  CHECK(polyreg_element_residue(nullptr, "0", &res) == POLYREG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("forms and functions") {
  polyreg_form* f = nullptr;
  REQUIRE(polyreg_form_parse("log|t|·darg(t+1)", &f) == POLYREG_OK);
  char* s = nullptr;
  REQUIRE(polyreg_form_to_string(f, &s) == POLYREG_OK);
  CHECK(take(s) == "log|t|·darg(t+1)");
  polyreg_form_free(f);
  polyreg_function* g = nullptr;
  REQUIRE(polyreg_function_parse("(t^2-1)/(t-1)", &g) == POLYREG_OK);
  REQUIRE(polyreg_function_to_string(g, &s) == POLYREG_OK);
  CHECK(take(s) == "t+1");
  polyreg_function_free(g);
}

TEST_CASE("run") {
  char* out = nullptr;
  int passed = 0;
  REQUIRE(polyreg_run("beta", R"({"max_k": 8, "max_p": 1})", "text", &out, &passed) == POLYREG_OK);
  CHECK(take(out).find("6\t0\t2\t945") != std::string::npos);
  REQUIRE(polyreg_run("golden", nullptr, "json", &out, &passed) == POLYREG_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(passed == 1);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "golden");
  for (auto& c : j["cases"]) CHECK(c.contains("max_defect"));
  CHECK(polyreg_run("bogus", nullptr, "json", &out, &passed) == POLYREG_ERR_INVALID_ARGUMENT);
  CHECK(polyreg_run("golden", "{not json", "json", &out, &passed) == POLYREG_ERR_PARSE);
}

TEST_CASE("run all twice gives identical bytes") {
  char *a = nullptr, *b = nullptr;
  int pa = 0, pb = 0;
  const char* cfg = R"({"seed": 7, "tol": 1e-6})";
  REQUIRE(polyreg_run("all", cfg, "json", &a, &pa) == POLYREG_OK);
  REQUIRE(polyreg_run("all", cfg, "json", &b, &pb) == POLYREG_OK);
  CHECK(take(a) == take(b));
  CHECK(pa == 1);
}
