#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support.hpp"
#include "symknot/cli/cache.hpp"
#include "symknot/cli/catalog.hpp"
#include "symknot/cli/commands.hpp"
#include "symknot/diagram/pd_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace symknot::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "symknot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SYMKNOT_FIXTURE_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("symknot-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  size_t n = 0;
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

}  // namespace

TEST_CASE("kh of the unknot fixture") {
  auto r = cli({"kh", "--pd", fixture("unknot.pd")});
  REQUIRE(r.code == kExitOk);
  CHECK(r.j()["kh"] == json{{"0,-1", 1}, {"0,1", 1}});
  auto red = cli({"kh", "--pd", fixture("unknot.pd"), "--reduced"});
  REQUIRE(red.code == kExitOk);
  CHECK(red.j()["kh"] == json{{"0,0", 1}});
}

TEST_CASE("tanaka on the trefoil half") {
  auto r = cli({"tanaka", "--spec", fixture("trefoil_half.json"), "--n", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.j()["holds"] == true);
  auto range = cli({"tanaka", "--spec", fixture("trefoil_half.json"), "--range", "-3..3"});
  REQUIRE(range.code == kExitOk);
  CHECK(range.j()["cases"].size() == 7);
}

TEST_CASE("seifert euler number") {
  auto r = cli({"seifert", "euler", "S(0,0;(3,2),(3,-2),(2,1))"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.j()["euler"] == "1/2");
  CHECK(cli({"seifert", "h1", "S(0,0;(2,1),(2,-1),(1,1))"}).j()["odd"] == false);
  CHECK(cli({"seifert", "lens", "S(0,0;(3,2),(5,1),(7,1))"}).j()["lens"].is_null());
  CHECK(cli({"seifert", "iso", "S(0,0;(3,1),(1,1))", "S(0,0;(3,4))"}).j()["isomorphic"] == true);
  CHECK(cli({"seifert", "powers", "5", "20"}).code == kExitOk);
}

TEST_CASE("every subcommand succeeds on valid input") {
  const std::vector<std::vector<std::string>> ok = {
      {"build", "--spec", fixture("trefoil_half.json"), "--n", "3"},
      {"jones", "--pd", fixture("figure8.pd")},
      {"alexander", "--pd", fixture("trefoil.pd")},
      {"kh", "--spec", fixture("trefoil_half.json")},
      {"lee", "--spec", fixture("trefoil_half.json")},
      {"tanaka", "--spec", fixture("trefoil_half.json")},
      {"les", "--spec", fixture("trefoil_half.json")},
      {"les", "--pd", fixture("trefoil.pd"), "--crossing", "0"},
      {"family", "--spec", fixture("unknot_partial_half.json"), "--range", "1..3"},
      {"symmetry", "--pd", fixture("figure8.pd")},
      {"seifert", "normalize", "S(0,0;(2,1),(2,-1))"},
      {"lens", "L(9,7)", "L(9,4)"},
      {"slopes", "--bound", "3"},
      {"catalog", fixture("")},
  };
  for (const auto& args : ok) {
    auto r = cli(args);
    CHECK_MESSAGE(r.code == kExitOk, args[0], " ", r.err);
    auto j = r.j();
    CHECK(j["command"] == args[0]);
    CHECK(j["verified"] == true);
  }
}

TEST_CASE("input errors exit with 2") {
  TempDir tmp("bad");
  write(tmp.path / "bad.pd", "PD[X[1,2,3]]");
  write(tmp.path / "bad.json", "{\"half\": 3");
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"bogus"},
      {"kh"},
      {"kh", "--pd", (tmp.path / "missing.pd").string()},
      {"kh", "--pd", (tmp.path / "bad.pd").string()},
      {"jones", "--spec", (tmp.path / "bad.json").string()},
      {"kh", "--pd", fixture("trefoil.pd"), "--spec", fixture("trefoil_half.json")},
      {"tanaka", "--spec", fixture("trefoil_half.json"), "--range", "3..1"},
      {"tanaka", "--spec", fixture("figure8_two_slot_half.json"), "--n", "1"},
      {"lee", "--pd", fixture("trefoil.pd"), "--n", "2"},
      {"les", "--pd", fixture("trefoil.pd")},
      {"les", "--pd", fixture("trefoil.pd"), "--crossing", "9"},
      {"family", "--spec", fixture("trefoil_half.json")},
      {"seifert", "euler", "S(0,0;(0,1))"},
      {"seifert", "frobnicate", "S(0,0)"},
      {"seifert", "powers", "4"},
      {"lens", "L(6,4)", "L(6,1)"},
      {"lens", "L(6,1)"},
      {"slopes", "--bound", "0"},
      {"catalog", (tmp.path / "nowhere").string()},
      {"kh", "--pd", fixture("trefoil.pd"), "--max-crossings", "x"},
  };
  for (const auto& args : bad) {
    auto r = cli(args);
    CHECK_MESSAGE(r.code == kExitInputError, (args.empty() ? std::string("<none>") : args[0]), " ", r.out, r.err);
  }
}

TEST_CASE("resource limits exit with 3") {
  for (const char* cmd : {"kh", "lee", "symmetry", "jones"}) {
    auto r = cli({cmd, "--spec", fixture("figure8_two_slot_half.json"), "--max-crossings", "8"});
    CHECK_MESSAGE(r.code == kExitResourceLimit, cmd, " ", r.err);
  }
  CHECK(cli({"family", "--spec", fixture("unknot_partial_half.json"), "--max-crossings", "10"}).code ==
        kExitResourceLimit);
  CHECK(cli({"les", "--spec", fixture("unknot_partial_half.json"), "--max-crossings", "10"}).code ==
        kExitResourceLimit);
}

TEST_CASE("catalog counts and idempotent re-ingest") {
  TempDir empty("empty");
  TempDir cache("cache");
  auto r0 = cli({"--cache-dir", cache.path.string(), "catalog", empty.path.string()});
  REQUIRE(r0.code == kExitOk);
  CHECK(r0.j()["count"] == 0);

  size_t files = 0;
  for (const auto& e : fs::directory_iterator(SYMKNOT_FIXTURE_DIR)) {
    const auto ext = e.path().extension();
    files += ext == ".pd" || ext == ".json";
  }
  auto r1 = cli({"--cache-dir", cache.path.string(), "catalog", SYMKNOT_FIXTURE_DIR});
  REQUIRE(r1.code == kExitOk);
  CHECK(r1.j()["count"] == files);
  CHECK(r1.j()["appended"] == files);
  CHECK(r1.j()["errors"].empty());
  const fs::path db = cache.path / "invariants.jsonl";
  const size_t lines = line_count(db);
  CHECK(lines == files);

  auto r2 = cli({"--cache-dir", cache.path.string(), "catalog", SYMKNOT_FIXTURE_DIR});
  REQUIRE(r2.code == kExitOk);
  CHECK(r2.j()["count"] == files);
  CHECK(r2.j()["appended"] == 0);
  CHECK(r2.j()["cache_records"] == files);
  CHECK(line_count(db) == lines);
}

TEST_CASE("cache hits return the stored record unchanged") {
  TempDir cache("hit");
  InvariantCache c(cache.path);
  const auto d = symknot::diagram::read_pd_file(fixture("figure8.pd"));
  const auto rec = compute_record(d, "figure8", 16);
  CHECK(c.put(rec));
  const auto line = c.get_line(rec.key);
  REQUIRE(line);
  CHECK_FALSE(c.put(rec));

  InvariantCache reopened(cache.path);
  CHECK(reopened.get_line(rec.key) == line);
  CHECK(reopened.size() == 1);

  auto first = cli({"--cache-dir", cache.path.string(), "jones", "--pd", fixture("figure8.pd")});
  auto second = cli({"--cache-dir", cache.path.string(), "jones", "--pd", fixture("figure8.pd")});
  REQUIRE(first.code == kExitOk);
  CHECK(first.j()["cached"] == true);
  CHECK(first.out == second.out);
  auto fresh = cli({"jones", "--pd", fixture("figure8.pd")});
  CHECK(fresh.j()["jones"] == first.j()["jones"]);
}

TEST_CASE("cache directory falls back to the environment") {
  TempDir cache("env");
  ::setenv("SYMKNOT_CACHE_DIR", cache.path.string().c_str(), 1);
  auto r = cli({"catalog", fixture("trefoil.pd")});
  ::unsetenv("SYMKNOT_CACHE_DIR");
  REQUIRE(r.code == kExitOk);
  CHECK(r.j()["appended"] == 1);
  CHECK(line_count(cache.path / "invariants.jsonl") == 1);
}

TEST_CASE("pretty output is aligned text") {
  auto r = cli({"--pretty", "kh", "--pd", fixture("unknot.pd")});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("command") != std::string::npos);
  CHECK(r.out.find("j\\i") != std::string::npos);
  CHECK(r.out.front() != '{');
}

TEST_CASE("errors go to stderr with their kind") {
  auto r = cli({"lens", "L(6,4)", "L(6,1)"});
  CHECK(r.out.empty());
  CHECK(r.err.rfind("symknot lens: ", 0) == 0);
}
