#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "sfvs/cli.hpp"

using namespace sfvs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sfvs");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("sfvs_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string put(const fs::path& dir, const std::string& name, const std::string& text) {
  auto p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kK4 =
    "GRAPH 4 6\nV 0 1 1\nV 1 1 0\nV 2 1 0\nV 3 1 0\n"
    "E 0 1\nE 0 2\nE 0 3\nE 1 2\nE 1 3\nE 2 3\n";
const char* kTriangleS = "GRAPH 3 3\nV 0 1 1\nV 1 1 1\nV 2 1 1\nE 0 1\nE 1 2\nE 0 2\n";

std::string solution_lines(const std::string& out) {
  std::string body, line;
  std::istringstream in(out);
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') body += line + "\n";
  return body;
}

}  // namespace

TEST_CASE("solve K4 with the oracle") {
  auto dir = scratch();
  auto g = put(dir, "k4.txt", kK4);
  auto r = cli({"solve", "--graph", g, "--algo", "oracle"});
  CHECK(r.code == kExitOk);
  CHECK(solution_lines(r.out) == "SOLUTION 1 3\nREMOVED 1 0\n");
  for (const char* algo : {"auto", "leafage", "rooted-path"}) {
    auto s = cli({"solve", "--graph", g, "--algo", algo});
    CHECK(s.code == kExitOk);
    CHECK(solution_lines(s.out) == "SOLUTION 1 3\nREMOVED 1 0\n");
  }
}

TEST_CASE("solve rejects a non-chordal graph") {
  auto dir = scratch();
  auto g = put(dir, "c4.txt", "GRAPH 4 4\nV 0 1 1\nV 1 1 0\nV 2 1 0\nV 3 1 0\nE 0 1\nE 1 2\nE 2 3\nE 0 3\n");
  auto r = cli({"solve", "--graph", g});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.err.find("not chordal") != std::string::npos);
  // the oracle does not need chordality
  CHECK(cli({"solve", "--graph", g, "--algo", "oracle"}).code == kExitOk);
}

TEST_CASE("verify") {
  auto dir = scratch();
  auto g = put(dir, "tri.txt", kTriangleS);
  auto none = put(dir, "none.txt", "SOLUTION 0 3\nREMOVED 0\n");
  auto r = cli({"verify", "--graph", g, "--solution", none});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.out.find("infeasible") != std::string::npos);
  auto one = put(dir, "one.txt", "SOLUTION 1 2\nREMOVED 1 2\n");
  CHECK(cli({"verify", "--graph", g, "--solution", one}).code == kExitOk);
  auto lie = put(dir, "lie.txt", "SOLUTION 5 2\nREMOVED 1 2\n");
  CHECK(cli({"verify", "--graph", g, "--solution", lie}).code == kExitBadInput);
}

TEST_CASE("gen random is byte-identical per seed") {
  std::vector<std::string> args{"gen", "random", "--n", "14", "--leafage", "3",
                                "--vertex-leafage", "2", "--seed", "7"};
  auto a = cli(args), b = cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# gen random seed=7", 0) == 0);
}

TEST_CASE("gen random to a directory, validate, solve, expand") {
  auto dir = scratch() / "rand";
  CHECK(cli({"gen", "random", "--n", "12", "--leafage", "3", "--vertex-leafage", "1",
             "--seed", "3", "--out-dir", dir.string()})
            .code == kExitOk);
  auto g = (dir / "graph.txt").string(), m = (dir / "model.txt").string();
  auto v = cli({"validate", "--graph", g, "--model", m});
  CHECK(v.code == kExitOk);
  CHECK(v.out == "ok\n");
  auto rp = cli({"solve", "--graph", g, "--model", m, "--algo", "rooted-path"});
  auto lf = cli({"solve", "--graph", g, "--model", m, "--algo", "leafage"});
  auto au = cli({"solve", "--graph", g, "--model", m});
  auto orc = cli({"solve", "--graph", g, "--algo", "oracle"});
  CHECK(au.out.find("algo=rooted-path") != std::string::npos);
  auto first = [](const std::string& s) {
    auto body = solution_lines(s);
    return body.substr(0, body.find('\n'));
  };
  CHECK(first(rp.out) == first(orc.out));
  CHECK(first(lf.out) == first(orc.out));
  auto e = cli({"expand", "--model", m});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("TREEMODEL") != std::string::npos);
}

TEST_CASE("validate reports violations") {
  auto dir = scratch();
  auto g = put(dir, "p3.txt", "GRAPH 3 2\nV 0 1 0\nV 1 1 0\nV 2 1 0\nE 0 1\nE 1 2\n");
  auto m = put(dir, "star.txt",
               "TREEMODEL 3 3\nNODE 0 -1\nNODE 1 0\nNODE 2 0\nSUBTREE 0 2 0 1\nSUBTREE 1 2 0 2\nSUBTREE 2 1 0\n");
  auto r = cli({"validate", "--graph", g, "--model", m});
  CHECK(r.code == kExitBadInput);
  CHECK(r.out.find("extra edge 0 2") != std::string::npos);
  CHECK(cli({"solve", "--graph", g, "--model", m}).code == kExitBadInput);
}

TEST_CASE("gadgets and certificates") {
  auto dir = scratch();
  auto tri = put(dir, "tri_plain.txt", "GRAPH 3 3\nV 0 1 0\nV 1 1 0\nV 2 1 0\nE 0 1\nE 1 2\nE 0 2\n");
  auto mc = (dir / "maxcut").string();
  CHECK(cli({"gen", "maxcut", "--graph", tri, "--out-dir", mc}).code == kExitOk);
  auto cert = cli({"cert", "maxcut", "--gadget-dir", mc, "--aside", "0"});
  CHECK(cert.code == kExitOk);
  CHECK(solution_lines(cert.out).rfind("SOLUTION 43 83\n", 0) == 0);
  auto sol = put(dir, "mc_sol.txt", cert.out);
  CHECK(cli({"verify", "--graph", mc + "/graph.txt", "--solution", sol}).code == kExitOk);

  auto mccf = put(dir, "one.mcc", "MCC 2 2 1\nEDGE 1 1 2 2\n");
  auto mm = (dir / "mcc").string();
  CHECK(cli({"gen", "mcc", "--mcc", mccf, "--out-dir", mm}).code == kExitOk);
  auto c2 = cli({"cert", "mcc", "--gadget-dir", mm, "--clique", "1,2"});
  CHECK(c2.code == kExitOk);
  CHECK(solution_lines(c2.out).rfind("SOLUTION 16 ", 0) == 0);
  CHECK(cli({"cert", "mcc", "--gadget-dir", mm, "--clique", "1,1"}).code == kExitBadInput);
}

TEST_CASE("usage and resource errors") {
  CHECK(cli({}).code == kExitBadInput);
  CHECK(cli({"solve"}).code == kExitBadInput);
  CHECK(cli({"solve", "--graph", "/nonexistent/file"}).code == kExitBadInput);
  CHECK(cli({"--help"}).code == kExitOk);
  auto dir = scratch();
  auto g = put(dir, "k4b.txt", kK4);
  CHECK(cli({"solve", "--graph", g, "--algo", "oracle", "--oracle-budget", "1"}).code ==
        kExitBudget);
  CHECK(cli({"solve", "--graph", g, "--max-table", "1"}).code == kExitBudget);
  CHECK(cli({"solve", "--graph", g, "--algo", "magic"}).code == kExitBadInput);
}

TEST_CASE("bench rows come back in suite order") {
  auto a = cli({"bench", "--suite", "cross", "--jobs", "3"});
  CHECK(a.code == kExitOk);
  auto b = cli({"bench", "--suite", "cross"});
  auto strip = [](const std::string& s) {
    // drop the millis column
    std::string out, line;
    std::istringstream in(s);
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::istringstream ls(line);
      std::string x;
      while (std::getline(ls, x, '\t')) f.push_back(x);
      if (f.size() == 7) f[5].clear();
      for (auto& y : f) out += y + "|";
      out += "\n";
    }
    return out;
  };
  CHECK(strip(a.out) == strip(b.out));
  CHECK(cli({"bench", "--suite", "nope"}).code == kExitBadInput);
}
