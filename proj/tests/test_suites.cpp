#include <doctest.h>

#include "polyreg/checks.hpp"
#include "polyreg/error.hpp"
#include "polyreg/suites.hpp"

using namespace polyreg;

TEST_CASE("report assembly is order independent") {
  Report a, b;
  a.suite = b.suite = "s";
  a.add({"beta", 0, 0, true, {}});
  a.add({"alpha", 0.5, 1, true, {}});
  b.add({"alpha", 0.5, 1, true, {}});
  b.add({"beta", 0, 0, true, {}});
  CHECK(a.to_json().dump() == b.to_json().dump());
  Report other;
  other.suite = "t";
  other.add({"gamma", 2, 1, false, {}});
  a.merge(other);
  CHECK_FALSE(a.pass());
  CHECK(a.to_json()["cases"][2]["input"] == "t: gamma");
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("beta table") {
  const std::string tsv = beta_table_tsv(8, 1);
  CHECK(tsv.find("6\t0\t2\t945\n") != std::string::npos);
  CHECK(tsv.find("5\t1\t-2\t945\n") != std::string::npos);  // β_{5,1} = -β_6
  const auto j = beta_table_json(8, 1);
  CHECK(j["beta"][6] == "2/945");
  CHECK_THROWS_AS(beta_table_tsv(3, 0), Error);
}

TEST_CASE("every suite passes") {
  SuiteOptions o;
  for (const std::string& name : suite_names()) {
    const Report r = run_suite(name, o);
    CHECK_MESSAGE(r.pass(), r.to_text());
    CHECK(!r.cases.empty());
  }
  CHECK_THROWS_AS(run_suite("nope", o), Error);
}

TEST_CASE("run_all is deterministic") {
  SuiteOptions o;
  const std::string a = run_all(o).dump(), b = run_all(o).dump();
  CHECK(a == b);
  o.seed = 8;
  CHECK(run_all(o)["pass"].get<bool>());
}
