#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* bin = std::getenv("YBR_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("dims csv and json") {
  auto r = run("dims --N 2 --max-cells 4");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("partition,cells,qdim", 0) == 0);
  auto j = run("dims --N 2 --max-cells 4 --json --float 8");
  CHECK(j.code == 0);
  CHECK(nlohmann::json::accept(j.out));
}

TEST_CASE("graph dot") {
  auto r = run("graph --N 2 --dot");
  CHECK(r.code == 0);
  CHECK(r.out.find("graph YL {") != std::string::npos);
  CHECK(nlohmann::json::accept(run("graph --N 3 --json").out));
}

TEST_CASE("verify suites") {
  CHECK(run("verify yang-baxter").code == 0);
  CHECK(run("verify r-squared").code == 0);
  CHECK(run("verify local --corrected").code == 0);
  auto printed = run("verify local");
  CHECK(printed.code != 0);
  CHECK(printed.out.find("FAIL L10") != std::string::npos);
  CHECK(run("verify all --boxes 3 --N 2").code == 0);
}

TEST_CASE("errors are json") {
  auto r = run("skein trace --boxes 3 \"h1 h3\"");
  CHECK(r.code != 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"] == "IndexOutOfRange");
  auto bad = nlohmann::json::parse(run("dims --N -1").out);
  CHECK(bad["error"] == "UsageError");
  auto cut = nlohmann::json::parse(run("tower build --boxes 5").out);
  CHECK(cut["error"] == "BoxesAboveCutoff");
  auto div = nlohmann::json::parse(run("fusion simples --N 3 --k 0 --l 0").out);
  CHECK(div.contains("error"));
}

TEST_CASE("fusion verbs") {
  auto s = run("fusion simples --N 3 --k 1 --l 0");
  CHECK(s.code == 0);
  CHECK(lines(s.out) == 12);
  auto b = run("fuse branch --N 3 --k 1 --l 0");
  CHECK(b.out.find("[1] x [1] = e + [1]e^2 + [1]e^5") != std::string::npos);
  auto q = nlohmann::json::parse(run("fusion simples --N 3 --k 1 --l 1 --json").out);
  CHECK(q["simples"].size() == 20);
  CHECK(run("fusion group --N 4").code == 0);
  CHECK(run("fusion equivariant --N 2").out.find("graph") != std::string::npos);
}

TEST_CASE("skein and tower") {
  auto e = run("skein eval \"circles=2;\"");
  CHECK(e.code == 0);
  auto t = run("tower bratteli --boxes 3 --N 2");
  CHECK(t.code == 0);
  CHECK(t.out.find("3,\"1\",3,") != std::string::npos);
  auto c = nlohmann::json::parse(run("tower certify --boxes 3 --N 2").out);
  CHECK(c["positive_definite"] == true);
  CHECK(c["kernel_dim"] == 6);
}

TEST_CASE("gram cache directory") {
  std::string dir = "ybr_cache_test";
  std::string plain = run("skein gram --boxes 2").out;
  setenv("YBR_CACHE_DIR", dir.c_str(), 1);
  CHECK(run("skein gram --boxes 2").out == plain);
  CHECK(run("skein gram --boxes 2").out == plain);
  unsetenv("YBR_CACHE_DIR");
  FILE* f = std::fopen((dir + "/gram-2.json").c_str(), "r");
  CHECK(f != nullptr);
  if (f) std::fclose(f);
  std::remove((dir + "/gram-2.json").c_str());
  std::remove(dir.c_str());
}
