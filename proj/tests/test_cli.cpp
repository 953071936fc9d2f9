#include <doctest.h>

#include <filesystem>
#include <map>
#include <fstream>
#include <sstream>

#include "scimap/cli.hpp"
#include "scimap/corpus.hpp"
#include "scimap/synthetic.hpp"

namespace fs = std::filesystem;
using namespace scimap;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Fresh scratch directory holding registry.csv and edges.csv for `m`.
struct Workspace {
  fs::path dir;
  explicit Workspace(const std::string& name, const CitationMatrix& m) {
    dir = fs::temp_directory_path() / ("scimap_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream reg(dir / "registry.csv"), edges(dir / "edges.csv");
    write_registry(reg, m.journals());
    write_edges(edges, m);
  }
  std::vector<std::string> inputs() const {
    return {"--registry", (dir / "registry.csv").string(), "--edges", (dir / "edges.csv").string()};
  }
  std::vector<std::string> args(const std::string& cmd, const std::string& out,
                                std::vector<std::string> extra = {}) const {
    std::vector<std::string> a{cmd};
    for (auto& s : inputs()) a.push_back(s);
    a.push_back("--out");
    a.push_back((dir / out).string());
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  }
};

/// Every file in a directory, by name.
std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = slurp(e.path());
  return files;
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(cli::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("density on the published counts") {
  Workspace ws("density", synthetic::counts_fixture(991, 55'774, 28'454));
  const auto r = run(ws.args("density", "out"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("density            5.7%") != std::string::npos);
  CHECK(r.out.find("corrected density  2.8%") != std::string::npos);
  const auto json = slurp(ws.dir / "out" / "density.json");
  CHECK(json.find("\"provenance\"") != std::string::npos);
  CHECK(json.find(cli::sha256_hex(slurp(ws.dir / "edges.csv"))) != std::string::npos);
}

TEST_CASE("density of an empty edge file") {
  Workspace ws("empty", synthetic::counts_fixture(3, 0, 0));
  const auto r = run(ws.args("density", "out"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("density            0.0%") != std::string::npos);
}

TEST_CASE("missing input names the path") {
  const auto r = run({"density", "--registry", "/nonexistent/reg.csv", "--edges", "/nonexistent/e.csv"});
  CHECK(r.code != 0);
  CHECK(r.err.find("/nonexistent/reg.csv") != std::string::npos);
}

TEST_CASE("bad option values are rejected") {
  Workspace ws("bad", synthetic::counts_fixture(3, 2, 0));
  CHECK(run(ws.args("sweep", "out", {"--step", "0"})).code != 0);
  CHECK(run(ws.args("correlate", "out", {"--axis", "sideways"})).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("sweep finds the planted blocks") {
  const auto planted = synthetic::planted_blocks();
  Workspace ws("sweep", planted.matrix);
  REQUIRE(run(ws.args("sweep", "out", {"--threads", "2"})).code == 0);
  const auto summary = slurp(ws.dir / "out" / "sweep_summary.txt");
  CHECK(summary.starts_with("# scimap"));
  CHECK(summary.find("r >= 0.8: 24 journals, 3 components") != std::string::npos);

  REQUIRE(run(ws.args("sweep", "high", {"--threshold-start", "0.999", "--step", "0.001", "--threshold-stop", "1"})).code == 0);
  const auto high = slurp(ws.dir / "high" / "sweep_summary.csv");
  CHECK(high.find("0.999,0,0\n") != std::string::npos);
  CHECK(high.find("1,0,0\n") != std::string::npos);
}

TEST_CASE("forced ten-factor table lists ten components") {
  Workspace ws("factors", synthetic::random_sparse(60, 0.2, 4));
  REQUIRE(run(ws.args("factors", "out", {"--k", "10"})).code == 0);
  const auto csv = slurp(ws.dir / "out" / "factors_loadings.csv");
  CHECK(csv.find("journal_id,1,2,3,4,5,6,7,8,9,10\n") != std::string::npos);
  const auto text = slurp(ws.dir / "out" / "factors_loadings.txt");
  CHECK(text.find("Rotated Component Matrix") != std::string::npos);
}

TEST_CASE("local with an unknown seed names it") {
  Workspace ws("local", synthetic::planted_blocks().matrix);
  const auto r = run(ws.args("local", "out", {"--seed", "NOSUCH"}));
  CHECK(r.code != 0);
  CHECK(r.err.find("NOSUCH") != std::string::npos);
  REQUIRE(run(ws.args("local", "ok", {"--seed", "B1-01"})).code == 0);
  CHECK(fs::exists(ws.dir / "ok" / "environment.json"));
  CHECK(fs::exists(ws.dir / "ok" / "complexity.csv"));
}

TEST_CASE("mds on three equidistant journals") {
  // Pairwise r = -0.5 for each pair of these citing rows.
  JournalRegistry reg({{"X", "", false}, {"Y", "", false}, {"Z", "", false}});
  std::istringstream edges("citing_id,cited_id,count\nX,X,2\nX,Y,1\nX,Z,1\nY,X,1\nY,Y,2\nY,Z,1\nZ,X,1\nZ,Y,1\nZ,Z,2\n");
  Workspace ws("mds", ingest_edges(edges, reg));
  REQUIRE(run(ws.args("mds", "out", {"--letters"})).code == 0);
  const auto svg = slurp(ws.dir / "out" / "layout.svg");
  CHECK(svg.starts_with("<!--"));
  std::size_t circles = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  CHECK(circles == 3);

  std::istringstream csv(slurp(ws.dir / "out" / "layout.csv"));
  std::string line;
  double sx = 0, sy = 0;
  int rows = 0;
  while (std::getline(csv, line)) {
    if (line.starts_with("#") || line.starts_with("journal_id")) continue;
    const auto a = line.find(','), b = line.rfind(',');
    sx += std::stod(line.substr(a + 1, b - a - 1));
    sy += std::stod(line.substr(b + 1));
    ++rows;
  }
  CHECK(rows == 3);
  CHECK(std::abs(sx) <= 1e-8);
  CHECK(std::abs(sy) <= 1e-8);
}

TEST_CASE("config file supplies options and flags win") {
  const auto planted = synthetic::planted_blocks();
  Workspace ws("config", planted.matrix);
  {
    std::ofstream cfg(ws.dir / "run.ini");
    cfg << "threshold-start=0.8\nthreshold-stop=0.8\nmin-size=3\n";
  }
  REQUIRE(run(ws.args("sweep", "a", {"--config", (ws.dir / "run.ini").string()})).code == 0);
  auto summary = slurp(ws.dir / "a" / "sweep_summary.csv");
  CHECK(summary.find("0.8,3,24\n") != std::string::npos);
  CHECK(summary.find("0.2,") == std::string::npos);

  REQUIRE(run(ws.args("sweep", "b",
                      {"--config", (ws.dir / "run.ini").string(), "--threshold-start", "0.7"}))
              .code == 0);
  summary = slurp(ws.dir / "b" / "sweep_summary.csv");
  CHECK(summary.find("0.7,") != std::string::npos);
}

TEST_CASE("every command is byte-identical across reruns and thread counts") {
  const auto planted = synthetic::planted_blocks();
  Workspace ws("determinism", planted.matrix);
  const std::vector<std::vector<std::string>> commands = {
      {"density"},
      {"correlate"},
      {"sweep"},
      {"factors"},
      {"local", "--seed", "B2-03"},
      {"mds", "--seed", "B2-03", "--factor-plot", "--letters", "--k", "2"},
      {"mds", "--factor-plot"},
      {"export-pajek", "--threshold", "0.8"},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> extra(cmd.begin() + 1, cmd.end());
    auto with_threads = [&](const std::string& t) {
      auto e = extra;
      e.push_back("--threads");
      e.push_back(t);
      return e;
    };
    REQUIRE(run(ws.args(cmd[0], cmd[0] + "_1", with_threads("1"))).code == 0);
    REQUIRE(run(ws.args(cmd[0], cmd[0] + "_1b", with_threads("1"))).code == 0);
    REQUIRE(run(ws.args(cmd[0], cmd[0] + "_4", with_threads("4"))).code == 0);
    // Output directories differ in name only; the provenance echoes no paths of outputs.
    const auto a = snapshot(ws.dir / (cmd[0] + "_1"));
    CHECK(!a.empty());
    CHECK(a == snapshot(ws.dir / (cmd[0] + "_1b")));
    CHECK(a == snapshot(ws.dir / (cmd[0] + "_4")));
  }
}
