#include "oracles.hpp"
#include "ringlab/cache.hpp"
#include "ringlab/harness.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

using namespace ringlab;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ringlab-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = registry();
  CHECK(reg.size() >= 30);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.claim.empty());
    CHECK_FALSE(c.applicability.empty());
  }
  CHECK(find_check("T-m").applicability == "all rings");
  CHECK(find_check("X-1.3").informational);
  CHECK(find_check("G-torsion").doc_only);
  CHECK(find_check("G-exp2").applicability.find("3 in J#") != std::string::npos);
  CHECK_THROWS_AS(find_check("no-such-check"), RingError);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "T-m"));
  CHECK(glob_match("L1.2.*", "L1.2.5"));
  CHECK_FALSE(glob_match("L1.2.*", "L1.5"));
  CHECK(glob_match("G-?grp", "G-2grp"));
  CHECK_FALSE(glob_match("G-?grp", "G-delta"));
  CHECK(glob_match("*grp", "G-3grp"));
}

TEST_CASE("single checks") {
  CHECK(run_check("T-m", "z(8)").status == Status::Pass);
  CHECK(run_check("L-matrix", "m(2,z(2))").status == Status::Pass);
  CHECK(run_check("G-2grp", "group(z(2),s(3))").status == Status::Pass);
  CHECK(run_check("G-delta", "group(z(4),c(2))").status == Status::Pass);
  CHECK(run_check("L-matrix", "z(8)").status == Status::Skip);
  CHECK(run_check("G-torsion", "group(z(2),c(2))").status == Status::Skip);
  CHECK(run_check("O-deep", "z(8)").status == Status::Skip);
  RunOptions deep;
  deep.deep_oracle = true;
  CHECK(run_check("O-deep", "t(2,z(2))", deep).status == Status::Pass);
  CHECK_THROWS_AS(run_check("bogus", "z(2)"), RingError);
}

TEST_CASE("known counterexamples fail reproducibly") {
  CheckResult a = run_check("C1.6", "m(2,z(2))");
  CheckResult b = run_check("C1.6", "m(2,z(2))");
  REQUIRE(a.status == Status::Fail);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->elements == b.witness->elements);
  CHECK(a.witness->text == b.witness->text);

  CheckResult l = run_check("L1.5", "m(2,z(2))");
  REQUIRE(l.status == Status::Fail);
  // e = E11, x = all-ones, exe = E11 is idempotent and not in J#.
  CHECK(l.witness->text.find("[[1,1],[1,1]]") != std::string::npos);
}

TEST_CASE("example audit note") {
  CheckResult r = run_check("X-1.3", "m(2,z(2))");
  CHECK(r.status == Status::Pass);
  CHECK(r.note.find("4 elements") != std::string::npos);
}

TEST_CASE("small suites") {
  SuiteReport r = run_suite({"z(12)"}, "T2.4");
  CHECK(r.pass == 1);
  CHECK(r.fail == 0);
  SuiteReport g = run_suite({"group(z(4),c(2))"}, "G-*");
  CHECK(g.fail == 0);
  bool saw_delta = false;
  for (const auto& c : g.checks) saw_delta |= c.id == "G-delta" && c.results[0].result.status == Status::Pass;
  CHECK(saw_delta);
  CHECK_THROWS_AS(run_suite({}, "*"), RingError);
  try {
    run_suite({"z(2)", "m(0,z(2))"}, "*");
    FAIL("expected an error");
  } catch (const RingError& e) {
    CHECK(std::string(e.what()).find("m(0,z(2))") != std::string::npos);
  }
}

TEST_CASE("default corpus") {
  auto corpus = default_corpus();
  CHECK(corpus.size() >= 25);
  for (const char* must : {"z(32)", "group(z(2),q8)", "group(z(9),c(3))", "corner(m(2,z(2)),1)", "skew(gf(4),frob,2)"}) {
    CHECK(std::find(corpus.begin(), corpus.end(), must) != corpus.end());
  }
}

TEST_CASE("full suite: only the documented counterexamples fail") {
  SuiteReport r = run_suite(default_corpus(), "*");
  std::map<std::string, std::set<std::string>> fails;
  for (const auto& c : r.checks) {
    for (const auto& rr : c.results) {
      if (rr.result.status == Status::Fail) fails[c.id].insert(rr.ring);
    }
  }
  const std::set<std::string> rings_with_m2 = {"m(2,z(2))", "m(2,z(4))", "prod(z(4),m(2,z(2)))",
                                               "corner(m(3,z(2)),17)", "group(z(2),s(3))"};
  std::map<std::string, std::set<std::string>> expected = {{"L1.5", rings_with_m2}, {"C1.6", rings_with_m2}};
  CHECK(fails == expected);
  CHECK(r.fail == 10);
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].rfind("X-1.3 on m(2,z(2))", 0) == 0);
}

TEST_CASE("report JSON schema") {
  SuiteReport r = run_suite({"z(8)", "m(2,z(2))"}, "C1.6");
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["version"] == 1);
  CHECK(j["corpus"].size() == 2);
  CHECK(j["checks"][0]["id"] == "C1.6");
  CHECK(j["checks"][0]["results"][0]["status"] == "pass");
  CHECK(j["checks"][0]["results"][0].contains("millis"));
  CHECK(j["checks"][0]["results"][1]["status"] == "fail");
  CHECK(j["checks"][0]["results"][1]["witness"]["elements"].is_array());
  CHECK(j["summary"]["fail"] == 1);
  CHECK_FALSE(nlohmann::json::parse(report_json(r, false))["checks"][0]["results"][0].contains("millis"));
  CHECK(report_text(r).find("pass: 1, fail: 1, skip: 0") != std::string::npos);
}

TEST_CASE("corpus files") {
  auto dir = scratch_dir("corpus");
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "c.txt");
    out << "# header\n\nz(2)\n  m(2,z(2))  # trailing\n";
  }
  CHECK(read_corpus_file((dir / "c.txt").string()) == std::vector<std::string>{"z(2)", "m(2,z(2))"});
  CHECK_THROWS_AS(read_corpus_file((dir / "missing.txt").string()), RingError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache round trip and transparency") {
  auto dir = scratch_dir("cache");
  Cache cache(dir);
  CHECK(cache.stats().entries == 0);
  RingPtr r = compile(parse("group(z(4),c(2))"));
  InvariantBundle b = compute_bundle(*r);
  CHECK_FALSE(cache.load("group(z(4),c(2))", *r).has_value());
  CHECK(cache.store("group(z(4),c(2))", *r, b));
  auto hit = cache.load("group(z(4),c(2))", *r);
  REQUIRE(hit.has_value());
  CHECK(hit->units == b.units);
  CHECK(hit->jsharp == b.jsharp);
  CHECK(hit->prime_radical == b.prime_radical);
  CHECK(hit->inverse == b.inverse);
  // Same text, different tables: a miss rather than a wrong answer.
  CHECK_FALSE(cache.load("group(z(4),c(2))", *compile(parse("z(16)"))).has_value());
  CHECK(cache.stats().entries == 1);

  // A corrupted entry is a silent miss.
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(e.path(), std::ios::binary | std::ios::trunc);
    out << "RLBC garbage";
  }
  CHECK_FALSE(cache.load("group(z(4),c(2))", *r).has_value());

  RunOptions cold;
  cold.cache = &cache;
  CHECK(cache.clear() == 1);
  std::string first = report_json(run_suite({"z(8)", "m(2,z(2))", "group(z(4),c(2))"}, "*", cold), false);
  CHECK(cache.stats().entries == 3);
  std::string second = report_json(run_suite({"z(8)", "m(2,z(2))", "group(z(4),c(2))"}, "*", cold), false);
  CHECK(first == second);
  CHECK(cache.clear() == 3);
  CHECK(cache.stats().entries == 0);
  std::filesystem::remove_all(dir);
}
