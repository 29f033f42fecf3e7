#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "toricres-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path path = work_dir() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path err_file =
      work_dir() / ("stderr-" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(TORICRES_BIN) + " " + args + " 2>" + err_file.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.err = slurp(err_file);
  return result;
}

std::string data(const char* name) {
  return (fs::path(TORICRES_DATA) / name).string();
}

}  // namespace

TEST_CASE("classify") {
  RunResult r = run("classify --cone " + data("a1.cone.json"));
  REQUIRE(r.status == 0);
  CHECK(r.err.empty());
  Json j = Json::parse(r.out);
  CHECK(j.at("multiplicity") == 2);
  CHECK(j.at("rank") == 2);
  CHECK(j.at("simplicial") == true);
  CHECK(j.at("smooth") == false);
  CHECK(j.at("singular_codim") == 2);
}

TEST_CASE("classify normalizes non-primitive rays with a note") {
  fs::path cone = write_file("scaled.cone.json",
                             R"({"rank": 2, "rays": [[2, 0], [1, 1]]})");
  RunResult r = run("classify --cone " + cone.string());
  REQUIRE(r.status == 0);
  CHECK(r.err.find("scaled by 1/2") != std::string::npos);
  Json j = Json::parse(r.out);
  CHECK(j.at("smooth") == true);
}

TEST_CASE("resolve emits the subdivided fan deterministically") {
  RunResult first = run("resolve --cone " + data("a1.cone.json") + " --strong");
  REQUIRE(first.status == 0);
  Json fan = Json::parse(first.out);
  CHECK(fan.at("rank") == 2);
  CHECK(fan.at("rays").size() == 3);
  CHECK(fan.at("rays")[2] == Json::array({1, 1}));
  CHECK(fan.at("max_cones") == Json::parse("[[1,3],[2,3]]"));

  RunResult second = run("resolve --cone " + data("a1.cone.json") + " --strong");
  CHECK(second.out == first.out);  // byte-identical

  fs::path out_file = work_dir() / "a1.resolved.json";
  RunResult to_file = run("resolve --cone " + data("a1.cone.json") + " -o " +
                          out_file.string());
  REQUIRE(to_file.status == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(out_file) == first.out);
}

TEST_CASE("cohomology tables") {
  const std::string pair =
      " --cone " + data("a1.cone.json") + " --fan " + data("a1.fan.json");
  RunResult r =
      run("cohomology" + pair + " --kind residue --p 2 --bound 6");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("kind") == "residue");
  CHECK(j.at("p") == 2);
  CHECK(j.at("bound") == 6);
  CHECK(j.at("entries") == Json::parse(R"({"[0,0]": {"1": 1}})"));
  CHECK(j.at("totals") == Json::parse(R"({"1": 1})"));

  RunResult table =
      run("cohomology" + pair + " --kind residue --p 2 --bound 6 --format table");
  REQUIRE(table.status == 0);
  CHECK(table.out.find("degree  i  dim") != std::string::npos);
  CHECK(table.out.find("[0,0]  1  1") != std::string::npos);
  CHECK(table.out.find("totals  1:1") != std::string::npos);

  RunResult threaded =
      run("cohomology" + pair + " --kind residue --p 2 --bound 6 --threads 4");
  CHECK(threaded.out == r.out);
}

TEST_CASE("cohomology at a single degree") {
  const std::string pair =
      " --cone " + data("a1.cone.json") + " --fan " + data("a1.fan.json");
  RunResult r =
      run("cohomology" + pair + " --kind residue --p 2 --degree 0,0");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("terms") == Json::array({1, 2}));
  CHECK(j.at("cohomology") == Json::parse(R"({"1": 1})"));
  CHECK(j.at("support") == Json::array({1, 2}));
  CHECK(j.at("degree") == Json::array({0, 0}));
}

TEST_CASE("closed-formula tables ignore --p with a note") {
  fs::path quadric_fan = work_dir() / "quadric.fan.json";
  RunResult resolved =
      run("resolve --cone " + data("quadric.cone.json") + " --strong -o " +
          quadric_fan.string());
  REQUIRE(resolved.status == 0);

  RunResult r = run("cohomology --cone " + data("quadric.cone.json") +
                    " --fan " + quadric_fan.string() +
                    " --kind p1 --p 2 --bound 4");
  REQUIRE(r.status == 0);
  CHECK(r.err.find("ignored") != std::string::npos);
  Json j = Json::parse(r.out);
  CHECK(j.at("kind") == "p1");
  CHECK(j.at("totals") == Json::parse(R"({"1": 1})"));
  CHECK(j.at("entries") == Json::parse(R"({"[0,0,0]": {"1": 1}})"));
}

TEST_CASE("verify resolves when no fan is given") {
  RunResult r = run("verify --cone " + data("a1.cone.json") + " --bound 6");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("p_max") == 2);
  CHECK(j.at("entries").size() == 6);
  CHECK(j.at("mop").at("ok") == true);
  CHECK(j.at("refinement").at("strong") == true);

  RunResult with_fan = run("verify --cone " + data("a1.cone.json") + " --fan " +
                           data("a1.fan.json") + " --bound 6");
  CHECK(with_fan.out == r.out);
}

TEST_CASE("koszul sweep") {
  RunResult r = run("koszul-sweep --n-max 3");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("n_max") == 3);
  CHECK(!j.at("entries").empty());
  for (const Json& e : j.at("entries")) CHECK(e.at("bottom_dim") >= 0);
}

TEST_CASE("degenerate cone input fails with a structured error") {
  fs::path cone = write_file("flat.cone.json",
                             R"({"rank": 3, "rays": [[1, 0, 0], [0, 1, 0]]})");
  RunResult r = run("classify --cone " + cone.string());
  CHECK(r.status == 3);
  CHECK(r.out.empty());
  Json err = Json::parse(r.err);
  CHECK(err.at("code") == "not_full_dimensional");
}

TEST_CASE("non-refinement fan fails with a structured error") {
  fs::path fan = write_file(
      "outside.fan.json",
      R"({"rank": 2, "rays": [[1, 0], [1, 2], [0, -1]], "max_cones": [[1, 2], [1, 3]]})");
  RunResult r = run("cohomology --cone " + data("a1.cone.json") + " --fan " +
                    fan.string() + " --kind residue --p 1");
  CHECK(r.status == 3);
  Json err = Json::parse(r.err);
  CHECK(err.at("code") == "not_a_refinement");
}

TEST_CASE("degree outside the dual cone fails with a structured error") {
  RunResult r = run("cohomology --cone " + data("a1.cone.json") + " --fan " +
                    data("a1.fan.json") + " --kind residue --p 2 --degree -1,0");
  CHECK(r.status == 3);
  Json err = Json::parse(r.err);
  CHECK(err.at("code") == "degree_outside_dual_cone");
}

TEST_CASE("malformed inputs exit with code two") {
  fs::path junk = write_file("junk.json", "not json {");
  RunResult bad_json = run("classify --cone " + junk.string());
  CHECK(bad_json.status == 2);
  CHECK(Json::parse(bad_json.err).at("code") == "malformed_input");

  RunResult missing = run("classify --cone " + (work_dir() / "nope.json").string());
  CHECK(missing.status == 2);

  fs::path zero = write_file("zero.cone.json",
                             R"({"rank": 2, "rays": [[0, 0], [1, 2]]})");
  RunResult zero_ray = run("classify --cone " + zero.string());
  CHECK(zero_ray.status == 2);
  CHECK(Json::parse(zero_ray.err).at("code") == "malformed_input");

  RunResult no_p = run("cohomology --cone " + data("a1.cone.json") + " --fan " +
                       data("a1.fan.json") + " --kind residue");
  CHECK(no_p.status == 2);

  RunResult bad_flag = run("classify --cone x --no-such-flag");
  CHECK(bad_flag.status == 2);
}
