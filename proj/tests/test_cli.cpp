#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "fanar/harness.hpp"
#include "fanar/report_json.hpp"

using namespace fanar;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FANAR_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  r.status = pclose(pipe);
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("fanar_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("construct commands round-trip") {
  fs::path dir = scratch();
  const std::pair<std::string, Graph> cases[] = {
      {"construct complete --n 6", complete(6)},
      {"construct turan --n 11 --p 3", turan(11, 3)},
      {"construct fan --k 3 --r 4", fan(FanSpec(3, 4))},
      {"construct extremal-fan-free --n 13 --k 3 --r 3", construct_extremal_fan_free(13, FanSpec(3, 3))},
      {"construct bounded-max --nu 3 --delta 4", construct_bounded_max({3, 4})},
  };
  int i = 0;
  for (const auto& [args, expect] : cases) {
    fs::path file = dir / ("g" + std::to_string(i++) + ".txt");
    auto r = run(args + " --out " + file.string());
    CHECK(r.status == 0);
    std::string text = slurp(file);
    Graph back = graph_from_text(text);
    CHECK(back == expect);
    CHECK(to_text(back) == text);
  }

  fs::path col = dir / "c.txt";
  CHECK(run("color lower-bound --n 9 --k 2 --r 3 --out " + col.string()).status == 0);
  std::string ctext = slurp(col);
  auto parsed = coloring_from_text(ctext, true);
  CHECK(parsed == lower_bound_coloring(9, FanSpec(2, 3)));
  CHECK(to_text(parsed) == ctext);
  fs::remove_all(dir);
}

TEST_CASE("formula and detect commands") {
  CHECK(run("formula turan --n 7 --p 3").out == "16\n");
  CHECK(run("formula f --nu 3 --delta 3").out == "10\n");
  auto ex = json::parse(run("--json formula ex-fan --n 9 --k 3 --r 4").out);
  CHECK(ex["value"] == 33);
  CHECK(ex["parity_branch"] == "odd");
  auto ar = json::parse(run("--json formula ar-fan --n 9 --k 4 --r 4").out);
  CHECK(ar["value"] == 35);
  CHECK(ar["below_threshold"] == true);

  fs::path dir = scratch();
  fs::path g = dir / "g.txt";
  run("construct extremal-fan-free --n 9 --k 2 --r 3 --out " + g.string());
  auto absent = json::parse(run("--json detect fan --graph " + g.string() + " --k 2 --r 3").out);
  CHECK(absent["found"] == false);
  auto present = json::parse(run("--json detect fan --graph " + g.string() + " --k 1 --r 3").out);
  CHECK(present["found"] == true);
  CHECK(present["witness"]["center"] == 0);
  auto clique = json::parse(run("--json detect clique --graph " + g.string() + " --r 3").out);
  CHECK(clique["found"] == true);

  fs::path c = dir / "c.txt";
  run("color lower-bound --n 9 --k 1 --r 3 --out " + c.string());
  auto rainbow = json::parse(run("--json detect rainbow-fan --coloring " + c.string() + " --k 2 --r 3").out);
  CHECK(rainbow["found"] == false);
  fs::remove_all(dir);
}

TEST_CASE("oracle and verify commands") {
  fs::path dir = scratch();
  fs::path w = dir / "w.txt";
  auto rec = json::parse(run("--json oracle ex --n 6 --clique 3 --witness " + w.string()).out);
  CHECK(rec["value"] == 9);
  CHECK(rec["witness_file"] == w.string());
  CHECK(graph_from_text(slurp(w)).edge_count() == 9);
  auto f = json::parse(run("--json oracle f --nu 2 --delta 3").out);
  CHECK(f["value"] == 7);
  auto ar = json::parse(run("--json oracle ar --n 5 --k 2 --r 3").out);
  CHECK(ar["value"] == 8);
  CHECK(run("oracle ar --n 6 --k 1 --r 3 --budget 5").status != 0);

  auto lb = json::parse(run("--json verify lower-bound --n 12 --k 3 --r 4").out);
  CHECK(lb["fan_free"] == true);
  CHECK(lb["rainbow_free"] == true);
  CHECK(lb["colors_used"] == 50);
  auto grid = json::parse(run("--json verify grid --k-max 3 --r-max 4 --n-max 30").out);
  CHECK(grid["failures"].empty());
  CHECK(grid["cells"].get<int>() > 0);

  fs::path g = dir / "g.txt";
  fs::path p = dir / "p.txt";
  run("construct extremal-fan-free --n 9 --k 2 --r 3 --out " + g.string());
  std::ofstream(p) << "0 1 2 3 4\n5 6 7 8\n";
  auto part = json::parse(run("--json verify partition --graph " + g.string() + " --partition " + p.string() + " --k 2").out);
  CHECK(part["properties"]["all"] == true);
  CHECK(part["deficit"]["deficit"] == 1);
  auto l28 = json::parse(run("--json verify lemma28 --graph " + g.string() + " --k 2 --r 3").out);
  CHECK(l28["fan_free"] == true);
  CHECK(l28["bound_holds"] == true);
  fs::remove_all(dir);
}

TEST_CASE("bad input is reported") {
  CHECK(run("formula ar-fan --n 9 --k 1 --r 3").status != 0);
  CHECK(run("detect fan --graph /nonexistent --k 1 --r 3").status != 0);
  CHECK(run("nonsense").status != 0);
}
