#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "xlag/exactnum/serialize.hpp"
#include "xlag/laguerre.hpp"

using namespace xlag;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

struct ScratchDir {
  fs::path path = fs::temp_directory_path() / ("xlag_cli_test_" + std::to_string(::getpid()));
  ScratchDir() { fs::create_directories(path); }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

fs::path scratch() {
  static const ScratchDir dir;
  return dir.path;
}

Run run(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch() / ("out" + std::to_string(counter++));
  const std::string cmd = std::string(XLAG_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("gen") {
  Run r = run("gen --k 2 --m1 1 --m2 2 --n 2..6");
  REQUIRE(r.code == 0);
  const json d = json::parse(r.out);
  REQUIRE(d["records"].size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(d["records"][i]["degree"] == i + 2);

  r = run("gen --k 1 --m1 0 --m2 1 --n 0..4");
  REQUIRE(r.code == 0);
  const json c = json::parse(r.out);
  for (int n = 0; n <= 4; ++n) CHECK(c["records"][n]["coeffs"] == poly_to_json(laguerre_poly(n, Rat(1))));

  r = run("gen --k 2 --m1 1 --m2 2 --n 2..3 --format csv");
  const auto csv = lines(r.out);
  REQUIRE(csv.size() == 4);
  CHECK(csv[0].rfind("# ", 0) == 0);
  CHECK(csv[1] == "n,degree,leading,coeffs");
}

TEST_CASE("parameter errors exit with 2") {
  CHECK(run("gen --k 2 --m1 2 --m2 2").code == 2);
  CHECK(run("gen --k 2.5 --m1 1 --m2 2").code == 2);
  CHECK(run("gen --k 2 --m1 1 --m2 2 --n 1..3").code == 2);
  CHECK(run("gen --k 2 --n 5..3").code == 2);
  CHECK(run("gram --k 0 --m1 1 --m2 2").code == 2);
  CHECK(run("potential --k 2 --grid 1:0:10").code == 2);
  CHECK(run("spectrum --count 11").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("verify") {
  Run r = run("verify");
  CHECK(r.code == 0);
  for (const auto& c : json::parse(r.out)) CHECK(c["status"] != "failed");

  r = run("verify --k 5/2 --m1 1 --m2 3 --n 3..8");
  CHECK(r.code == 0);

  r = run("verify --inject-fault");
  CHECK(r.code == 1);
  bool found = false;
  for (const auto& c : json::parse(r.out))
    if (c["status"] == "failed" && c["identity"] == "exceptional-eigen-equation") {
      found = true;
      CHECK_FALSE(c["residual"].empty());
    }
  CHECK(found);
}

TEST_CASE("gram") {
  const Run r = run("gram --k 2 --m1 1 --m2 2 --nmax 6");
  REQUIRE(r.code == 0);
  const json g = json::parse(r.out)["gram"];
  REQUIRE(g["matrix"].size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(std::abs(g["matrix"][i][j].get<double>()) < 1e-8);
}

TEST_CASE("potential") {
  const Run r = run("potential --k 2 --m1 1 --m2 2 --grid 0.05:20:400 --format csv");
  REQUIRE(r.code == 0);
  const auto csv = lines(r.out);
  REQUIRE(csv.size() == 402);
  CHECK(csv[0].rfind("# ", 0) == 0);
  CHECK(csv[1] == "x,U0,U2");
  for (std::size_t i = 2; i < csv.size(); ++i) {
    std::istringstream row(csv[i]);
    std::string cell;
    while (std::getline(row, cell, ',')) CHECK(std::isfinite(std::stod(cell)));
  }
}

TEST_CASE("spectrum and roots") {
  Run r = run("spectrum --k 2 --m1 1 --m2 2");
  REQUIRE(r.code == 0);
  const json s = json::parse(r.out);
  CHECK(s["U0"]["eigenvalues"].size() == 5);
  CHECK(s["max_discrepancy"].get<double>() <= s["bound"].get<double>());

  r = run("roots --k 2 --m1 1 --m2 2");
  REQUIRE(r.code == 0);
  const json roots = json::parse(r.out);
  CHECK(roots["roots"].size() == 2);
  CHECK(roots["nonneg_real_roots"] == 0);
  r = run("roots --target xlaguerre --n 4");
  CHECK(json::parse(r.out)["roots"].size() == 4);
}

TEST_CASE("output is byte-identical across runs") {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  for (const std::string cmd : {"verify --seed 7", "gram", "spectrum --format csv", "potential"}) {
    CHECK(run(cmd + " --out " + a.string()).code == 0);
    CHECK(run(cmd + " --out " + b.string()).code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(!sa.str().empty());
    CHECK(sa.str() == sb.str());
  }
}
