#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support.hpp"

#ifndef CONCENTRIC_CLI_PATH
#error "CONCENTRIC_CLI_PATH must name the command-line binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string(CONCENTRIC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string stderr_of(const std::string& args) {
  const std::string cmd = std::string(CONCENTRIC_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("concentric_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string radii_arg(const std::vector<double>& d) {
  std::string s;
  char buf[40];
  for (double v : d) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (!s.empty()) s += ',';
    s += buf;
  }
  return s;
}

}  // namespace

TEST_CASE("check") {
  Run r = run("check --radii 1,1,2 --json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["format"] == "concentric-gons/1");
  CHECK(j["report"]["feasible"] == true);
  CHECK(j["circumradii"]["degenerate"] == true);
  CHECK(std::fabs(j["circumradii"]["r1"].get<double>() - 1.0) <= 1e-9);
  CHECK(std::fabs(j["circumradii"]["r2"].get<double>() - 1.0) <= 1e-9);
  CHECK(j["triangle"]["degenerate"] == true);

  r = run("check --radii 1,2,3,4 --json");
  CHECK(r.code == 2);
  j = json::parse(r.out);
  CHECK(j["report"]["condition2"]["failing_m"] == json::array({3}));
  CHECK(j["square"]["rejection"] == "sum_condition");
  CHECK(j["circumradii"].is_null());

  r = run("check --radii 1,1,1,1 --json");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(std::fabs(j["circumradii"]["r1"].get<double>() - 1.0) <= 1e-12);
  CHECK(j["circumradii"]["r2"].get<double>() == 0.0);

  r = run("check --radii 1,2,3,4");
  CHECK(r.out.find("m=3") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("check").code == 1);
  CHECK(run("check --radii 1,x,2").code == 1);
  CHECK(run("check --radii 1,2").code == 1);
  CHECK(run("check --radii 1,2,3 --tol 0.5").code == 1);
  CHECK(run("check --radii 1,2,3 --max-n 2").code == 1);
  CHECK(run("check --radii 1,2,3,4,5 --max-n 4").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("check --input /nonexistent.json").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("reconstruct") {
  const fs::path dir = scratch();
  const fs::path svg = dir / "worked.svg";
  Run r = run("reconstruct --json --radii " + radii_arg(testref::worked_triangle()) + " --svg " +
              svg.string());
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  const auto& polys = j["reconstruction"]["polygons"];
  CHECK(std::fabs(polys[0]["circumradius"].get<double>() - 2.0) <= 1e-12);
  CHECK(std::fabs(polys[1]["circumradius"].get<double>() - 1.0) <= 1e-12);
  const std::string drawing = read(svg);
  int circles = 0, polygons = 0;
  for (std::size_t p = drawing.find("<circle cx"); p != std::string::npos; p = drawing.find("<circle cx", p + 1)) ++circles;
  for (std::size_t p = drawing.find("<polygon "); p != std::string::npos; p = drawing.find("<polygon ", p + 1)) ++polygons;
  CHECK(circles == 3);
  CHECK(polygons == 2);

  r = run("reconstruct --json --radii 1,1,1,1");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["reconstruction"]["second_is_point"] == true);

  CHECK(stderr_of("reconstruct --radii 3,1,2").find("warning") != std::string::npos);
  CHECK(run("reconstruct --radii 3,1,2").code == 0);

  r = run("reconstruct --json --radii 1,2,3,4");
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["reconstruction"].is_null());
  fs::remove_all(dir);
}

TEST_CASE("pair") {
  const fs::path dir = scratch();
  write(dir / "shared.json", R"({"format": "concentric-gons/1", "kind": "polygon_pair",
    "polygons": [{"n": 3, "center": [0, 0], "circumradius": 1, "phase": 0},
                 {"n": 3, "center": [2, 0], "circumradius": 1, "phase": 3.141592653589793}]})");
  Run r = run("pair --json --input " + (dir / "shared.json").string());
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["results"].size() >= 1);
  CHECK(std::fabs(j["results"][0]["m_point"][0].get<double>() - 1.0) <= 1e-12);
  CHECK(j["results"][0]["circle_radii"][0].get<double>() <= 1e-12);

  write(dir / "far.json", R"({"format": "concentric-gons/1", "kind": "polygon_pair",
    "polygons": [{"n": 4, "center": [0, 0], "circumradius": 1},
                 {"n": 4, "center": [9, 0], "circumradius": 1}]})");
  r = run("pair --json --input " + (dir / "far.json").string());
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["results"].empty());

  write(dir / "mixed.json", R"({"format": "concentric-gons/1", "kind": "polygon_pair",
    "polygons": [{"n": 4, "center": [0, 0], "circumradius": 1},
                 {"n": 3, "center": [1, 0], "circumradius": 1}]})");
  CHECK(run("pair --input " + (dir / "mixed.json").string()).code == 1);

  write(dir / "same.json", R"({"format": "concentric-gons/1", "kind": "polygon_pair",
    "polygons": [{"n": 4, "center": [0, 0], "circumradius": 1},
                 {"n": 4, "center": [0, 0], "circumradius": 1}]})");
  r = run("pair --json --input " + (dir / "same.json").string());
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["degenerate_continuum"] == true);

  // worked placement: R1 = 2 at the origin, R2 = 1 placed so the auxiliary
  // circles cross at (cos 30°, ±sin 30°), both 30° off vertex 0
  write(dir / "worked.json", R"({"format": "concentric-gons/1", "kind": "polygon_pair",
    "polygons": [{"n": 3, "center": [0, 0], "circumradius": 2, "phase": 0},
                 {"n": 3, "center": [2.8025170768881473, 0], "circumradius": 1, "phase": 0}]})");
  r = run("pair --json --input " + (dir / "worked.json").string());
  CHECK(r.code == 0);
  j = json::parse(r.out);
  std::set<std::pair<long, long>> points;
  const auto worked = testref::worked_triangle();
  for (const auto& res : j["results"]) {
    points.insert({std::lround(res["m_point"][0].get<double>() * 1e6),
                   std::lround(res["m_point"][1].get<double>() * 1e6)});
    for (int i = 0; i < 3; ++i) {
      CHECK(std::fabs(res["circle_radii"][i].get<double>() - worked[i]) <= 1e-9);
    }
  }
  CHECK(points.size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  const fs::path dir = scratch();
  const fs::path inst = dir / "inst.json";
  CHECK(run("generate --n 4 --seed 2 --output " + inst.string()).code == 0);
  Run r = run("verify --json --input " + inst.string());
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  for (const auto& entry : j["distance_identity"]) {
    for (const auto& res : entry["residuals"]) CHECK(res["residual"].get<double>() <= 1e-10);
  }
  for (const auto& entry : j["family_identity"]) {
    for (const auto& res : entry["residuals"]) CHECK(res["residual"].get<double>() <= 1e-10);
  }

  // corrupt one digit of one radius: the order-3 identity flags it
  json doc = json::parse(read(inst));
  auto& radii = doc["circles"]["radii"];
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", radii[2].get<double>());
  std::string digits(buf);
  const std::size_t at = digits.find('.') + 4;
  digits[at] = digits[at] == '9' ? '0' : static_cast<char>(digits[at] + 1);
  radii[2] = std::stod(digits);
  write(dir / "bad.json", doc.dump());
  r = run("verify --json --input " + (dir / "bad.json").string());
  CHECK(r.code == 2);
  j = json::parse(r.out);
  CHECK(j["pass"] == false);
  bool flagged_three = false;
  for (const auto& entry : j["family_identity"]) {
    for (const auto& m : entry["failing_m"]) flagged_three = flagged_three || m == 3;
  }
  CHECK(flagged_three);

  write(dir / "circles.json", R"({"format": "concentric-gons/1", "kind": "circles",
    "circles": {"center": [0, 0], "radii": [)" + radii_arg(testref::worked_triangle()) + "]}}");
  r = run("verify --json --input " + (dir / "circles.json").string());
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.contains("angle_sweep"));
  CHECK_FALSE(j.contains("distance_identity"));
  CHECK_FALSE(j.contains("family_identity"));

  r = run("verify --json --n 6 --seed 11");
  CHECK(r.code == 0);
  fs::remove_all(dir);
}

TEST_CASE("render and determinism") {
  const fs::path dir = scratch();
  const std::string args = "render --radii " + radii_arg(testref::worked_square());
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("<?xml", 0) == 0);

  const Run c = run("check --json --radii 1,2,3,4"), d = run("check --json --radii 1,2,3,4");
  CHECK(c.out == d.out);

  CHECK(run("generate --n 5 --seed 3 --output " + (dir / "g.json").string()).code == 0);
  const std::string pair_args = "pair --json --input " + (dir / "g.json").string();
  CHECK(run(pair_args).out == run(pair_args).out);
  fs::remove_all(dir);
}
