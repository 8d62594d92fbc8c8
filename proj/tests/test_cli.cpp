#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mono/a3.hpp"
#include "mono/chambers.hpp"
#include "mono/g24.hpp"

using namespace mono;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string binary() {
  const char* p = std::getenv("MONOCTL_BIN");
  REQUIRE_MESSAGE(p != nullptr, "MONOCTL_BIN must point at the executable");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("monoctl_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << text;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify accepts both built-in datasets") {
  RunResult a3 = run("verify a3");
  CHECK(a3.exit_code == 0);
  CHECK(a3.output.find("pass") != std::string::npos);
  RunResult g24 = run("verify g24");
  CHECK(g24.exit_code == 0);
  CHECK(g24.output.find("parameter_value_is_six") != std::string::npos);
}

TEST_CASE("verify distinguishes failure from bad input") {
  fs::path good = write_file("good.json", g24_reference().to_json());
  CHECK(run("verify " + good.string()).exit_code == 0);

  MonodromyData tampered = g24_reference();
  tampered.c = SymExpr(2) * tampered.c;
  fs::path bad = write_file("tampered.json", tampered.to_json());
  RunResult r = run("verify " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);

  CHECK(run("verify " + (scratch_dir() / "missing.json").string()).exit_code == 2);
  fs::path mal = write_file("malformed.json", "{ not json");
  CHECK(run("verify " + mal.string()).exit_code == 2);
}

TEST_CASE("verify emits parseable json") {
  RunResult r = run("--format json verify a3");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.contains("checks"));
  CHECK(j["pass"].get<bool>());
  // check names arrive sorted for stable diffs
  std::string prev;
  for (const auto& c : j["checks"]) {
    std::string name = c["name"].get<std::string>();
    CHECK(prev <= name);
    prev = name;
  }
}

TEST_CASE("braid transforms and round trips") {
  fs::path band0 = write_file("band0.json", a3_reference(0, 1).to_json());

  SUBCASE("empty word is byte stable") {
    fs::path out = scratch_dir() / "same.json";
    RunResult r = run("braid " + band0.string() + " --word \"\" --out " +
                      out.string());
    CHECK(r.exit_code == 0);
    CHECK(read_file(out) == read_file(band0));
  }

  SUBCASE("a word followed by its inverse is the identity") {
    fs::path mid = scratch_dir() / "mid.json";
    fs::path back = scratch_dir() / "back.json";
    CHECK(run("braid " + band0.string() + " --word \"1 2\" --out " +
              mid.string()).exit_code == 0);
    CHECK(run("braid " + mid.string() + " --word \"-2 -1\" --out " +
              back.string()).exit_code == 0);
    CHECK(read_file(back) == read_file(band0));
  }

  SUBCASE("moves reach the tabulated band") {
    fs::path out = scratch_dir() / "moved.json";
    RunResult r = run("braid " + band0.string() + " --word \"1 2 1\" --out " +
                      out.string());
    CHECK(r.exit_code == 0);
    MonodromyData moved = MonodromyData::from_json(read_file(out));
    MonodromyData want = a3_reference(1, 1);
    CHECK(moved.s == want.s);
    CHECK(moved.c == want.c);
  }

  SUBCASE("input errors exit with two") {
    CHECK(run("braid " + band0.string() + " --word \"1 x\"").exit_code == 2);
    CHECK(run("braid " + band0.string() + " --word \"7\"").exit_code == 2);
    fs::path lower = write_file("lower.json", a3_natural().to_json());
    CHECK(run("braid " + lower.string() + " --word \"1\"").exit_code == 2);
    CHECK(run("braid " + (scratch_dir() / "nope.json").string() +
              " --word \"1\"").exit_code == 2);
  }
}

TEST_CASE("track reads words off deformations") {
  fs::path a3t = write_file("a3_track.json",
                            track_input_to_json(a3_split_track()));
  RunResult r = run("track " + a3t.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1 2 1") != std::string::npos);

  fs::path g24t = write_file("g24_track.json",
                             track_input_to_json(g24_band_track(1)));
  RunResult r2 = run("--format json track " + g24t.string());
  CHECK(r2.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r2.output);
  CHECK(j["word"].get<std::string>() == "1 5");

  SUBCASE("apply the tracked word to a dataset") {
    fs::path band0 = write_file("band0b.json", a3_reference(0, 1).to_json());
    fs::path out = scratch_dir() / "applied.json";
    RunResult ra = run("track " + a3t.string() + " --apply " +
                       band0.string() + " --out " + out.string());
    CHECK(ra.exit_code == 0);
    MonodromyData moved = MonodromyData::from_json(read_file(out));
    CHECK(moved.s == a3_reference(1, 1).s);
  }

  SUBCASE("degenerate path exits with one") {
    TrackInput bad;
    bad.phi = 0.0;
    bad.samples = {{{0, 1}, {0, -1}, {5, 0}}, {{0, 1}, {0, -1}, {5, 0}}};
    fs::path p = write_file("bad_track.json", track_input_to_json(bad));
    CHECK(run("track " + p.string()).exit_code == 1);
  }

  CHECK(run("track " + (scratch_dir() / "gone.json").string()).exit_code == 2);
}

TEST_CASE("table export") {
  fs::path csv = scratch_dir() / "table.csv";
  RunResult r = run("a3 table --out " + csv.string());
  CHECK(r.exit_code == 0);
  std::string text = read_file(csv);
  CHECK(text.rfind("band,cell,matrix,i,j,entry", 0) == 0);
  // five bands, two cells, two matrices, nine entries each
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 5 * 2 * 2 * 9);
}

TEST_CASE("point evaluation") {
  RunResult r = run("a3 point --t1 -0.125 --t2 0.01 --t3 1");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["u"].size() == 3);
  REQUIRE(j["psi"].size() == 3);
  std::string u2 = j["u"][1].get<std::string>();
  CHECK(u2.rfind("-0.2499875", 0) == 0);
  CHECK(u2.find("i") != std::string::npos);
  // degenerate input is an input error
  CHECK(run("a3 point --t2 0.01 --t3 0").exit_code == 2);
  CHECK(run("a3 point --t3 1").exit_code == 2);  // missing required option
}

TEST_CASE("grassmannian reports") {
  CHECK(run("g24 verify").exit_code == 0);
  RunResult gamma = run("g24 gamma");
  CHECK(gamma.exit_code == 0);
  CHECK(gamma.output.find("gamma") != std::string::npos);
  RunResult gplus = run("g24 gamma --sign +1");
  CHECK(gplus.exit_code == 0);
  CHECK(run("g24 gram").exit_code == 0);
  CHECK(run("g24 kapranov").exit_code == 0);
  CHECK(run("g24 bands").exit_code == 0);
  CHECK(run("g24 levelt").exit_code == 0);
}

TEST_CASE("usage errors exit with two") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--format yaml verify a3").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}
