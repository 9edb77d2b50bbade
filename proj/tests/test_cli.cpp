#include "doctest.h"
#include "support.hpp"
#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>

using namespace hgtest;
using namespace heartglue::cli;

namespace {

std::string data(const std::string& file) { return std::string(HEARTGLUE_TEST_DATA_DIR) + "/" + file; }

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(HEARTGLUE_TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

int error_line(const std::string& path, const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    CHECK(e.file() == path);
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("value lines track JSON pointers") {
  std::string text = "{\n  \"a\": 1,\n  \"b\": [\n    2,\n    {\"c\": 3}\n  ]\n}\n";
  auto lines = value_lines(text);
  CHECK(lines.at("") == 1);
  CHECK(lines.at("/a") == 2);
  CHECK(lines.at("/b") == 3);
  CHECK(lines.at("/b/0") == 4);
  CHECK(lines.at("/b/1/c") == 5);
}

TEST_CASE("corpus loads by name") {
  auto all = load_corpus();
  CHECK(all.size() == 5);
  for (const auto& a : all) CHECK(a.alg->vertices() >= 2);
  CHECK(load_algebra("fork").alg->quiver().arrow_index("f") == 1);
}

TEST_CASE("diagnostics point at the offending line") {
  std::string bad = data("unordered_arrow.json");
  CHECK(error_line(bad, [&] { load_algebra(bad); }) == 5);

  AlgebraPtr k = algebra("kronecker");
  std::string rat = data("bad_rational.json");
  CHECK(error_line(rat, [&] { load_objects(rat, k); }) == 3);

  std::string broken = temp_file("broken.json", "{\n  \"name\": \"x\",\n  \"vertices\": 2,\n  \"arrows\": [\n}\n");
  CHECK(error_line(broken, [&] { load_algebra(broken); }) == 5);

  std::string unknown = temp_file("unknown_arrow.json",
                                  "{\n  \"name\": \"x\",\n  \"vertices\": 2,\n  \"arrows\": [{\"name\": \"a\", "
                                  "\"source\": 1, \"target\": 2}],\n  \"relations\": [\n    [{\"coef\": \"1\", "
                                  "\"path\": [\"a\", \"z\"]}]\n  ]\n}\n");
  CHECK(error_line(unknown, [&] { load_algebra(unknown); }) == 6);

  std::string missing = data("no_such_file.json");
  CHECK(error_line(missing, [&] { load_algebra(missing); }) == 0);
}

TEST_CASE("modules that violate relations are rejected with a line") {
  AlgebraPtr a = algebra("a3_rel");
  std::string f = temp_file("rel_violation.json",
                            "{\n  \"objects\": [\n    {\"module\": {\"dims\": [1, 1, 1], \"arrows\": "
                            "{\"a\": [[\"1\"]], \"b\": [[\"1\"]]}}}\n  ]\n}\n");
  CHECK(error_line(f, [&] { load_objects(f, a); }) == 3);
}

TEST_CASE("object files describe complexes") {
  AlgebraPtr a = algebra("a2");
  std::string f = temp_file("complex.json",
                            "{\"objects\": [{\"name\": \"C\", \"complex\": {\"lo\": -1, \"terms\": "
                            "[{\"projective\": 1}, {\"projective\": 2}], \"differentials\": [[[[\"1\"]], [[]]]]}}],"
                            " \"shifts\": [0]}");
  ObjectSet s = load_objects(f, a);
  REQUIRE(s.objects.size() == 1);
  const Cx& c = s.objects[0].cx;
  CHECK(c.lo == -1);
  // P1 -> P2 is injective with cokernel S2.
  CHECK(heart_cohomology(c, -1).is_zero());
  CHECK(heart_cohomology(c, 0).dims == std::vector<int>{0, 1});
  CHECK(s.shifts == std::vector<int>{0});
}

TEST_CASE("reports are deterministic and carry the headline numbers") {
  Job j;
  j.command = "ext-table";
  j.algebra = "kronecker";
  j.window = 6;
  Report r1 = run_job(j), r2 = run_job(j);
  CHECK(render(r1, Format::Json) == render(r2, Format::Json));
  CHECK(r1.text == r2.text);
  CHECK(r1.status == 0);
  auto round = json::parse(render(r1, Format::Json));
  CHECK(round == r1.data);

  Job d;
  d.command = "dim-formula";
  d.algebra = "a3_rel";
  Report rd = run_job(d);
  CHECK(rd.status == 0);

  Job e;
  e.command = "check-exceptional";
  e.algebra = "a2";
  e.objects = "s1s2";
  CHECK(run_job(e).status == 1);
  e.objects = "s2s1";
  CHECK(run_job(e).status == 1);
  e.weak = true;
  CHECK(run_job(e).status == 0);

  Job rc;
  rc.command = "remark-counterexamples";
  CHECK(run_job(rc).status == 0);
}

TEST_CASE("unknown algebra names are input errors") {
  Job j;
  j.command = "ext-table";
  j.algebra = "no_such_algebra";
  CHECK_THROWS_AS(run_job(j), InputError);
}

}
