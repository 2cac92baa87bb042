#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is folded into stdout when
// `with_stderr` is set.
Run ring(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string(RING_BIN) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string without_timing(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  for (auto& c : j["checks"]) {
    for (auto& r : c["results"]) r.erase("millis");
  }
  return j.dump(2);
}

struct CacheDir {
  std::filesystem::path dir;
  explicit CacheDir(const std::string& name)
      : dir(std::filesystem::temp_directory_path() / ("ringlab-cli-" + name)) {
    std::filesystem::remove_all(dir);
    setenv("RINGLAB_CACHE", dir.c_str(), 1);
  }
  ~CacheDir() { std::filesystem::remove_all(dir); }
};

}  // namespace

TEST_CASE("inspect") {
  CacheDir cache("inspect");
  Run z8 = ring("inspect 'z(8)'");
  CHECK(z8.code == 0);
  CHECK(z8.out.find("order 8, |U|=4, |J|=4") != std::string::npos);
  CHECK(z8.out.find("UJ#: yes") != std::string::npos);

  Run m = ring("--json inspect 'm(2,z(2))'");
  auto j = nlohmann::json::parse(m.out);
  CHECK(j["order"] == 16);
  CHECK(j["units"] == 6);
  CHECK(j["J"] == 1);
  CHECK(j["predicates"]["UJ#"] == false);

  CHECK(ring("inspect 'group(z(2),c(3))'").out.find("UJ#: no") != std::string::npos);
}

TEST_CASE("sets") {
  CacheDir cache("sets");
  CHECK(ring("sets 'z(8)' J").out == "0\t0\n2\t2\n4\t4\n6\t6\n");
  Run js = ring("sets 'm(2,z(2))' Jsharp");
  CHECK(js.out.find("[[1,1],[1,1]]") != std::string::npos);
  CHECK(std::count(js.out.begin(), js.out.end(), '\n') == 4);
  CHECK(ring("sets 'group(z(2),c(2))' Delta").out == "0\t0\n3\t1+g\n");
  Run bad = ring("sets 'z(8)' Delta", true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("NotAGroupRing") != std::string::npos);
  CHECK(ring("sets 'z(8)' Nope").code == 3);
}

TEST_CASE("elements and corpus") {
  CacheDir cache("elements");
  Run e = ring("elements 'gf(4)'");
  CHECK(e.code == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 4);
  Run c = ring("corpus");
  CHECK(c.out.find("group(z(2),q8)\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CacheDir cache("exit");
  CHECK(ring("check T-m 'z(8)'").code == 0);
  CHECK(ring("check C1.6 'm(2,z(2))'").code == 1);
  CHECK(ring("check no-such 'z(8)'").code == 3);
  Run syntax = ring("inspect 'prod(z(2),'", true);
  CHECK(syntax.code == 2);
  CHECK(syntax.out.find("offset 10") != std::string::npos);
  CHECK(syntax.out.find("^") != std::string::npos);
  CHECK(ring("inspect 'm(0,z(2))'").code == 2);
  CHECK(ring("").code == 3);
  CHECK(ring("frobnicate").code == 3);
  CHECK(ring("verify --corpus /nonexistent/corpus.txt").code == 3);

  auto bad = cache.dir.parent_path() / "ringlab-bad-corpus.txt";
  {
    std::ofstream out(bad);
    out << "z(2)\nm(0,z(2))\n";
  }
  Run b = ring("verify --corpus " + bad.string(), true);
  CHECK(b.code == 2);
  CHECK(b.out.find("m(0,z(2))") != std::string::npos);
  std::filesystem::remove(bad);

  auto good = cache.dir.parent_path() / "ringlab-good-corpus.txt";
  {
    std::ofstream out(good);
    out << "# comment\nz(8)\n\ngroup(z(2),c(4))\n";
  }
  CHECK(ring("verify --corpus " + good.string()).code == 0);
  std::filesystem::remove(good);
}

TEST_CASE("order cap") {
  CacheDir cache("cap");
  CHECK(ring("--max-order 8 inspect 'z(16)'").code == 2);
  setenv("RINGLAB_MAX_ORDER", "8", 1);
  CHECK(ring("inspect 'z(16)'").code == 2);
  CHECK(ring("--max-order 16 inspect 'z(16)'").code == 0);
  unsetenv("RINGLAB_MAX_ORDER");
}

TEST_CASE("verify filter and text summary") {
  CacheDir cache("filter");
  Run r = ring("verify --filter 'L1.2.*'");
  CHECK(r.code == 0);
  CHECK(r.out.find("L1.2.8") != std::string::npos);
  CHECK(r.out.find("T-m") == std::string::npos);
  CHECK(r.out.find("fail: 0") != std::string::npos);
  Run full = ring("verify");
  CHECK(full.code == 1);
  CHECK(full.out.find("note: X-1.3") != std::string::npos);
}

TEST_CASE("cache management and transparency") {
  CacheDir cache("manage");
  CHECK(ring("cache path").out == cache.dir.string() + "\n");
  CHECK(ring("cache stats").out.find("entries: 0") != std::string::npos);

  Run cold = ring("inspect 'group(z(4),c(2))'");
  Run warm = ring("inspect 'group(z(4),c(2))'");
  CHECK(cold.out == warm.out);

  Run v1 = ring("--json verify");
  auto stats = nlohmann::json::parse(ring("--json cache stats").out);
  CHECK(stats["entries"].get<int>() >= 39);
  Run v2 = ring("--json verify");
  CHECK(without_timing(v1.out) == without_timing(v2.out));

  CHECK(ring("cache clear").code == 0);
  CHECK(ring("cache stats").out.find("entries: 0") != std::string::npos);
  CHECK(ring("cache bogus").code == 3);
}
