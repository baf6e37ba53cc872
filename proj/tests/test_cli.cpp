#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "afp/plane_io.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

Result run(const std::string& args) {
  const std::string cmd = std::string(AFP_CLI_PATH) + " " + args + " > cli_out.txt 2> cli_err.txt";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), slurp("cli_out.txt"), slurp("cli_err.txt")};
}

const json* find_check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"]) {
    if (c["name"] == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("verify-skewfield on AG(2,3) with the oracle") {
  const auto r = run("verify-skewfield --q 3 --oracle");
  CHECK(r.code == 0);
  const auto report = json::parse(r.out);
  CHECK(report["tool"] == "afp");
  CHECK(report["config"]["command"] == "verify-skewfield");
  CHECK(report["config"]["q"] == 3);
  CHECK(report["config"]["oracle"] == true);
  CHECK(report["size"] == 3);
  CHECK(report["tables"]["add"] == json::parse("[[0,1,2],[1,2,0],[2,0,1]]"));
  CHECK(report["tables"]["mul"] == json::parse("[[0,0,0],[0,1,2],[0,2,1]]"));
  for (const auto& c : report["checks"]) CHECK(c["status"] == "pass");
  CHECK(find_check(report, "oracle_equivalence") != nullptr);
  CHECK(find_check(report, "no_zero_divisors") != nullptr);
}

TEST_CASE("check-axioms on the triangle exits 1 with a witness") {
  write("triangle.json", R"({"num_points": 3, "lines": [[0,1],[1,2],[0,2]]})");
  const auto r = run("check-axioms --plane triangle.json --report triangle_report.json");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL playfair_parallel") != std::string::npos);
  const auto report = json::parse(slurp("triangle_report.json"));
  const auto* playfair = find_check(report, "playfair_parallel");
  REQUIRE(playfair != nullptr);
  CHECK((*playfair)["status"] == "fail");
  CHECK((*playfair)["witness"]["point"] == 0);
  CHECK((*playfair)["witness"]["line_points"] == json::array({1, 2}));
  for (const auto& c : report["checks"]) {
    if (c["status"] == "fail") CHECK(c["witness"].is_object());
  }
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run("check-axioms --plane does_not_exist.json").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("check-axioms").code == 2);
  CHECK(run("check-axioms --q 3 --plane triangle.json").code == 2);
  CHECK(run("check-axioms --q 6").code == 2);
  CHECK(run("check-axioms --q 4 --poly 1,0,1").code == 2);
  CHECK(run("check-axioms --q 4 --poly one,two").code == 2);
  CHECK(run("enumerate --q 3 --what planes").code == 2);
  CHECK(run("verify-skewfield --q 3 --base-point 9").code == 2);
  CHECK(run("verify-skewfield --q 8 --oracle").code == 2);
  CHECK(run("build-plane --q 3 --out no_such_dir/plane.json").code == 2);
  write("broken.json", "{\"num_points\": 2, \"lines\": [[0]]}");
  const auto r = run("check-axioms --plane broken.json");
  CHECK(r.code == 2);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("build-plane output feeds the other commands") {
  const auto built = run("build-plane --q 4 --out ag24.json");
  REQUIRE(built.code == 0);
  const auto plane = json::parse(slurp("ag24.json"));
  CHECK(plane["num_points"] == 16);
  CHECK(plane["lines"].size() == 20);

  CHECK(run("check-axioms --plane ag24.json").code == 0);
  CHECK(run("verify-group --plane ag24.json --report group.json").code == 0);
  CHECK(json::parse(slurp("group.json"))["group_order"] == 16);

  const auto stdout_plane = run("build-plane --q 4");
  CHECK(json::parse(stdout_plane.out) == plane);
}

TEST_CASE("enumerate") {
  const auto r = run("enumerate --q 4 --what dilations --out dil.json");
  REQUIRE(r.code == 0);
  const auto doc = json::parse(slurp("dil.json"));
  CHECK(doc["count"] == 48);
  CHECK(doc["config"]["what"] == "dilations");
  CHECK(json::parse(run("enumerate --q 5").out)["count"] == 25);
}

TEST_CASE("--endo checks and inverts an endomorphism") {
  write("doubling5.json", json::parse(run("verify-skewfield --q 5").out)["elements"][2].dump());
  const auto r = run("verify-skewfield --q 5 --endo doubling5.json");
  CHECK(r.code == 0);
  const auto report = json::parse(r.out);
  CHECK(find_check(report, "endomorphism.inverse_verified") != nullptr);
  CHECK(report["endomorphism"]["inverse"]["image"].size() == 25);

  write("bad_endo.json", R"({"group_order": 9, "image": [0, 2, 1, 3, 4, 5, 6, 7, 8]})");
  CHECK(run("verify-skewfield --q 3 --endo bad_endo.json").code == 1);
  CHECK(run("verify-skewfield --q 3 --endo missing_endo.json").code == 2);
}

TEST_CASE("a plane without enough translations fails verification") {
  write("hall.json", afp::plane_to_json(afp::test::derived_hall_plane()).dump());
  CHECK(run("check-axioms --plane hall.json").code == 0);
  const auto group = run("verify-group --plane hall.json");
  CHECK(group.code == 1);
  const auto report = json::parse(group.out);
  CHECK(report["group_order"] == 1);
  CHECK((*find_check(report, "point_transitive"))["status"] == "fail");
  CHECK(run("verify-skewfield --plane hall.json").code == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = run("verify-skewfield --q 4 --oracle");
  const auto b = run("verify-skewfield --q 4 --oracle");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("--version") {
  const auto r = run("--version");
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
}
