#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sigdef/io/sg_format.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  nlohmann::json report() const { return nlohmann::json::parse(out); }
  nlohmann::json result() const { return report().at("result"); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = sigdef::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string worked = SIGDEF_TEST_DATA "/worked_example.sg";
const std::string fig1 = SIGDEF_TEST_DATA "/fig1.sg";

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("cli maxdef") {
  auto r = run({"maxdef", worked, "--assume-chromatic-3", "--trace"});
  CHECK(r.code == 0);
  auto rep = r.report();
  CHECK(rep["schema"] == "sigdef/1");
  CHECK(rep["command"] == "maxdef");
  CHECK(rep["result"]["value"] == 1);
  CHECK(rep["result"]["cover"] == nlohmann::json({"b1", "a2", "b3", "a4", "a5", "a6", "a7"}));
  CHECK(rep["elapsed_ms"].is_number());
  CHECK_FALSE(rep.contains("seed"));
  auto trace = rep["result"]["trace"];
  REQUIRE(trace.size() == 9);
  CHECK(trace[2]["step"] == 8);
  CHECK(trace[2]["merges"] == nlohmann::json::array({nlohmann::json::array({"a6", "a7"}), nlohmann::json::array({"b6", "b7"})}));
  CHECK(trace[6]["S_delta"] == nlohmann::json({"b1"}));
  CHECK(trace[6]["B_delta"] == nlohmann::json({"b5"}));
  for (const auto &e : trace) CHECK(e.contains("pairs_removed"));

  auto refused = run({"maxdef", worked});
  CHECK(refused.code == 1);
  CHECK(refused.result()["chi"] == 2);

  auto fig = run({"maxdef", fig1});
  CHECK(fig.code == 0);
  CHECK(fig.result()["cover"] == nlohmann::json({"u"}));
  CHECK_FALSE(fig.result().contains("trace"));
}

TEST_CASE("cli oracle commands") {
  CHECK(run({"chromatic", fig1}).result()["chi"] == 3);

  auto d = run({"deficiency", fig1}).result();
  CHECK(d["range"] == nlohmann::json({0, 1}));
  CHECK(d["M"] == 1);
  CHECK(d["m"] == 0);
  CHECK(d["witnesses"]["0"]["w"] == 0);

  auto big = temp_file("sigdef_big.sg", [] {
    std::string s;
    for (int i = 0; i < 13; ++i) s += "e x" + std::to_string(i) + " y" + std::to_string(i) + " -\n";
    return s;
  }());
  CHECK(run({"chromatic", big.string()}).code == 3);
  CHECK(run({"deficiency", big.string()}).code == 3);

  auto range = run({"switching-range", fig1}).result();
  CHECK(range["range"] == nlohmann::json({0, 1}));
}

TEST_CASE("cli classify2") {
  auto path = temp_file("sigdef_two.sg", "e a b -\ne c d -\n");
  auto r = run({"classify2", path.string()});
  CHECK(r.code == 0);
  CHECK(r.result()["case"] == "M1m0");
  CHECK(r.result()["M"] == 1);
  CHECK(r.result()["m"] == 0);
  CHECK(run({"classify2", fig1}).code == 1);
}

TEST_CASE("cli switch and cover-check") {
  auto s = run({"switch", fig1, "--set", "w"});
  CHECK(s.code == 0);
  auto g = sigdef::io::parse_sg(s.out).graph;
  CHECK(g.positive_edge_count() == 3);

  auto ok = run({"cover-check", worked, "--cover", "b1,a2,b3,a4,a5,a6,a7"});
  CHECK(ok.code == 0);
  CHECK(ok.result()["valid"] == true);

  auto bad = run({"cover-check", worked, "--cover", "a1,a2"});
  CHECK(bad.code == 1);
  CHECK(bad.result()["stable"] == false);
  CHECK(bad.result()["internal_edges"] == nlohmann::json({"a1-a2"}));

  CHECK(run({"cover-check", worked, "--cover", "nope"}).code == 2);
}

TEST_CASE("cli gen and dot") {
  auto a = run({"gen", "--pairs", "5", "--neg-prob", "0.2", "--seed", "9"});
  auto b = run({"gen", "--pairs", "5", "--neg-prob", "0.2", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(sigdef::io::parse_sg(a.out).graph.vertex_count() == 10);

  auto general = run({"gen", "--general", "--vertices", "6", "--pos-prob", "0.5", "--neg-prob", "0.2", "--seed", "1"});
  CHECK(general.code == 0);
  CHECK(sigdef::io::parse_sg(general.out).graph.labels().front() == "v0");

  auto out = std::filesystem::temp_directory_path() / "sigdef_gen.sg";
  auto written = run({"gen", "--pairs", "3", "--seed", "2", "--out", out.string()});
  CHECK(written.code == 0);
  CHECK(written.report()["seed"] == 2);
  CHECK(written.result()["vertices"] == 6);
  CHECK(std::filesystem::exists(out));

  CHECK(run({"gen", "--pairs", "3"}).code == 2);
  CHECK(run({"gen", "--seed", "3"}).code == 2);

  auto dot = run({"dot", worked, "--cover", "b1,a2,b3,a4,a5,a6,a7"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph sigdef {", 0) == 0);
}

TEST_CASE("cli crosscheck") {
  auto r = run({"crosscheck", "--count", "200", "--max-pairs", "8", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.result()["mismatch_count"] == 0);
  CHECK(r.report()["seed"] == 7);
  CHECK(run({"crosscheck", "--count", "5"}).code == 2);
}

TEST_CASE("cli usage and parse errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"maxdef"}).code == 2);
  CHECK(run({"maxdef", "/nonexistent/file.sg"}).code == 2);
  auto bad = temp_file("sigdef_bad.sg", "e u v +\ne u u -\n");
  auto r = run({"chromatic", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
