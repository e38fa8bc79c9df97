#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "doctest.h"
#include "hyperring/catalog.hpp"
#include "hyperring/fixture.hpp"
#include "hyperring/report.hpp"
#include "hyperring/suite.hpp"

using namespace hyperring;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HYPERRING_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("fixtures round-trip through the serializer") {
  for (const auto& name : bundled_fixture_names()) {
    CAPTURE(name);
    auto doc = load_fixture(name);
    auto again = parse_fixture(serialize_fixture(doc));
    CHECK(again == doc);
    CHECK(parse_fixture(serialize_fixture(again)) == again);
  }
}

TEST_CASE("fixture tables match the built-in catalog") {
  auto ex = to_hyperring(load_fixture("example_3_2"));
  CHECK(ex.same_tables(catalog::example_3_2()));
  CHECK(to_hyperring(load_fixture("z4_classical")).same_tables(catalog::z_mod(4)));
  CHECK(to_hyperring(load_fixture("krasner_k2")).same_tables(catalog::krasner_k2()));
  CHECK(to_hyperring(load_fixture("sign_hyperfield")).same_tables(catalog::sign_hyperfield()));
  auto doc = from_hyperring(catalog::sign_hyperfield());
  CHECK(to_hyperring(doc).same_tables(catalog::sign_hyperfield()));
}

TEST_CASE("malformed fixtures are rejected") {
  CHECK_THROWS_AS(parse_fixture("{"), FixtureError);
  CHECK_THROWS_AS(parse_fixture(R"({"name":"x","elements":["0","1"],"zero":"0"})"),
                  FixtureError);
  CHECK_THROWS_AS(
      parse_fixture(R"({"name":"x","elements":["0","1"],"zero":"0","one":"1",
                      "add":[[["0"],["1"]],[["1"]]],"mul":[["0","0"],["0","1"]]})"),
      FixtureError);
  auto unknown = parse_fixture(R"({"name":"x","elements":["0","1"],"zero":"0","one":"1",
      "add":[[["0"],["q"]],[["1"],["0"]]],"mul":[["0","0"],["0","1"]]})");
  CHECK_THROWS_AS(to_hyperring(unknown), StructuralError);
  CHECK_THROWS_AS(load_fixture("no_such_fixture"), FixtureError);
}

TEST_CASE("reports render deterministically with witnesses on failures") {
  Report r("t");
  r.add("ok", true);
  r.add("bad", false);
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.entries()[1].witness.empty());
  CHECK(r.to_json() == r.to_json());
  CHECK(contains(r.to_text(), "FAIL  bad"));
  Report outer("o");
  outer.merge(r, "inner");
  CHECK(outer.entries()[0].check == "inner.ok");
}

TEST_CASE("verify and classify") {
  auto v = run("verify example_3_2");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "PASS  axioms"));
  auto c = run("classify example_3_2 --format json");
  CHECK(c.code == 0);
  CHECK(contains(c.out, R"("check": "hyperfield")"));
  CHECK(contains(c.out, R"("witness": "false")"));
  auto s = run("classify sign_hyperfield");
  CHECK(s.code == 0);
  CHECK(contains(s.out, "hyperfield  true"));
}

TEST_CASE("exit codes") {
  auto doc = load_fixture("example_3_2");
  doc.add[1][2] = {"a"};
  doc.add[2][1] = {"a"};
  auto broken = temp_file("hyperring_broken.json", serialize_fixture(doc));
  CHECK(run("verify " + broken).code == 1);

  auto ragged = temp_file("hyperring_ragged.json",
                          R"({"name":"x","elements":["0","1"],"zero":"0","one":"1",
                              "add":[[["0"],["1"]],[["1"]]],"mul":[["0","0"],["0","1"]]})");
  CHECK(run("verify " + ragged).code == 2);
  CHECK(run("verify no_such_fixture").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("closure example_3_2 --ideal 0,b,c").code == 2);
  CHECK(run("closure example_3_2 --ideal 0,z").code == 2);
  CHECK(run("quotient example_3_2 --ideal 0,c").code == 2);
  CHECK(run("suite --only nonsense").code == 2);
  CHECK(run("classify example_3_2 --format yaml").code == 2);
}

TEST_CASE("closure and ideals commands") {
  auto b = run("closure example_3_2 --ideal 0,b");
  CHECK(b.code == 0);
  CHECK(contains(b.out, "closure of {0,b} = {0,b}; integrally closed"));
  auto v = run("closure --value-rank 2 --ideal cut:j=2,p=0,5");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "Ī = I; agrees with valuation intersection"));
  auto i = run("ideals example_3_2");
  CHECK(i.code == 0);
  for (const auto& s : {"ideal:{0}", "ideal:{0,b}", "ideal:{0,c}", "ideal:{0,a,b,c}",
                        "note:claimed_ideal:{0,b,c}"}) {
    CHECK(contains(i.out, s));
  }
  auto r = run("radical example_3_2 --ideal 0");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "radical  {0}"));
  auto rv = run("radical --value-rank 2 --ideal cut:j=2,p=1,0");
  CHECK(rv.code == 0);
  CHECK(contains(rv.out, "cut:j=1,p=1"));
  auto q = run("quotient example_3_2 --ideal 0,b");
  CHECK(q.code == 0);
  CHECK(contains(q.out, "{a,c}"));
}

TEST_CASE("suite scopes") {
  auto remark = run("suite example_3_2 --only remark");
  CHECK(remark.code == 0);
  CHECK(contains(remark.out, "remark.example_3_2.prime_closed"));
  auto oracle = run("suite --only oracle --random 25 --seed 7 --format json");
  CHECK(oracle.code == 0);
  CHECK(contains(oracle.out, "random_7_24"));
  auto again = run("suite --only oracle --random 25 --seed 7 --format json");
  CHECK(again.out == oracle.out);
}

TEST_CASE("suite runner scopes in-process") {
  SuiteOptions opts;
  opts.only = {"golden", "divergence", "difference"};
  auto report = run_suite(opts);
  CAPTURE(report.to_text());
  CHECK(report.passed());
  opts.only = {"bogus"};
  CHECK_THROWS_AS(run_suite(opts), PreconditionError);
}
