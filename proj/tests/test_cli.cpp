#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "magicfiber/render.hpp"

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the installed binary through the shell; `prefix` can set environment
// variables or change directory first.
RunResult run(const std::string& args, const std::string& prefix = "") {
  static int counter = 0;
  std::string errfile = "cli-stderr-" + std::to_string(getpid()) + "-" +
                        std::to_string(counter++) + ".txt";
  std::string cmd = prefix + std::string(MAGICFIBER_BIN) + " " + args + " 2>" +
                    fs::absolute(errfile).string();
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream ef(errfile);
  std::stringstream ss;
  ss << ef.rdbuf();
  r.err = ss.str();
  std::remove(errfile.c_str());
  return r;
}

ordered_json parse(const RunResult& r) {
  CAPTURE(r.out);
  CAPTURE(r.err);
  REQUIRE(r.code == 0);
  return ordered_json::parse(r.out);
}

double lo_of(const ordered_json& interval) {
  return std::stod(interval.at("decimal_lo").get<std::string>());
}
double hi_of(const ordered_json& interval) {
  return std::stod(interval.at("decimal_hi").get<std::string>());
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      lines.push_back(cur);
      cur.clear();
      ++i;
    } else {
      cur += text[i];
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::absolute("cli-scratch-" + std::to_string(getpid()) + "-" +
                        std::to_string(rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string prefix() const { return "cd " + path.string() + " && "; }
};

}  // namespace

TEST_CASE("class report for a sporadic non-orientable class") {
  RunResult r = run("--no-cache class 18 17 7");
  ordered_json j = parse(r);
  CHECK(j["class"]["x"] == 18);
  CHECK(j["class"]["y"] == 17);
  CHECK(j["class"]["z"] == 7);
  CHECK(j["thurston_norm"] == 28);
  CHECK(j["fiber"]["genus"] == 8);
  CHECK(j["fiber"]["boundary_components"] == 14);
  CHECK(j["singularities"]["data"] == "(1^6, 15, 1^7)");
  CHECK(j["orientable"] == false);
  CHECK(j["orientability_identity_agrees"] == true);
  CHECK(j["polynomial"] == "t^28 - t^18 - t^17 - t^11 - t^10 + 1");
  CHECK(lo_of(j["dilatation"]) <= 1.1040392647);
  CHECK(hi_of(j["dilatation"]) >= 1.1040392646);
  CHECK(j["dilatation"]["level"].get<long>() >= 40);
  CHECK(j["dilatation"]["sign_change"] == true);
}

TEST_CASE("class report for the norm-minimizing class") {
  RunResult r = run("--no-cache class 1 1 0");
  ordered_json j = parse(r);
  CHECK(j["fiber"]["genus"] == 0);
  CHECK(j["singularities"]["data"] == "(-1, -1, -1^2)");
  CHECK(j["polynomial"] == "t^2 - 4t + 1");
  CHECK(lo_of(j["dilatation"]) <= 3.7320508076);
  CHECK(hi_of(j["dilatation"]) >= 3.7320508075);
}

TEST_CASE("negative coordinates parse as positionals") {
  RunResult r = run("--no-cache class 4 2 -3");
  ordered_json j = parse(r);
  CHECK(j["class"]["z"] == -3);
  CHECK(j["fiber"]["genus"] == 3);
  CHECK(j["slopes"]["alpha"] == "1/4");
  CHECK(j["slopes"]["beta"] == "-1/2");
  CHECK(j["slopes"]["gamma"] == "2");
  CHECK(j["orientable"] == true);
  CHECK(j["singularities"]["data"] == "(2, 0, 2^3)");
}

TEST_CASE("class domain errors exit with code 2") {
  RunResult r = run("--no-cache class 1 0 0");
  CHECK(r.code == 2);
  CHECK(r.err.find("y > 0 violated") != std::string::npos);
  CHECK(r.out.empty());

  r = run("--no-cache class 2 2 0");
  CHECK(r.code == 2);
  CHECK(r.err.find("class must be primitive") != std::string::npos);

  r = run("--no-cache --format=csv class 1 1 0");
  CHECK(r.code == 2);
  CHECK(r.err.find(
            "csv output is only available for min-table, bounds, and "
            "ent-face") != std::string::npos);
}

TEST_CASE("family reports") {
  RunResult r = run("--no-cache family A 9 2");
  ordered_json j = parse(r);
  CHECK(j["family"] == "A");
  CHECK(j["filled_slope"] == "-3/2");
  CHECK(j["filled_cusp"] == "beta");
  CHECK(j["closed_genus"] == 7);
  CHECK(j["capped_orientable"] == true);
  CHECK(j["has_one_prong"] == false);
  CHECK(j["hyperbolicity"]["status"] == "hyperbolic");
  CHECK(j["polynomial"] == "t^18 - t^11 - t^9 - t^7 + 1");
  CHECK(lo_of(j["dilatation"]) <= 1.1154811095);
  CHECK(hi_of(j["dilatation"]) >= 1.1154811094);

  r = run("--no-cache family A 2 1");
  j = parse(r);
  CHECK(j["has_one_prong"] == true);
  CHECK(j["hyperbolicity"]["status"] == "non-hyperbolic");
  CHECK(j["hyperbolicity"]["witness"] == "-2");
  CHECK(j["closed_genus"] == 0);

  r = run("--no-cache family A 2 -1");
  j = parse(r);
  CHECK(j["hyperbolicity"]["status"] == "non-hyperbolic");
  CHECK(j["hyperbolicity"]["witness"] == "inf");

  r = run("--no-cache family R 4 1");
  j = parse(r);
  CHECK(j["filled_slope"] == "2");
  CHECK(j["filled_cusp"] == "gamma");
  CHECK(j["closed_genus"] == 4);
  CHECK(lo_of(j["dilatation"]) <= 1.2806381563);
  CHECK(hi_of(j["dilatation"]) >= 1.2806381562);

  r = run("--no-cache family X 1 0");
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown family (expected A, P, or R)") !=
        std::string::npos);

  r = run("--no-cache family A 4 2");
  CHECK(r.code == 2);
  CHECK(r.err.find("coprime") != std::string::npos);
}

TEST_CASE("min-table csv output") {
  RunResult r = run(
      "--no-cache --format=csv min-table --fill=-3/2 --genus-from=5 "
      "--genus-to=7");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\r\n") != std::string::npos);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "g,fill,family,k,l,lambda_lo,lambda_hi,orientable,"
        "candidates_examined");
  CHECK(lines[1].rfind("5,-3/2,A,7,1,1.1487946926", 0) == 0);
  CHECK(lines[2].rfind("6,-3/2,A,8,1,1.1287608680", 0) == 0);
  CHECK(lines[3].rfind("7,-3/2,A,9,2,1.1154811094", 0) == 0);
  for (size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].find(",false,") != std::string::npos);
  }
}

TEST_CASE("min-table csv renders empty rows with blank fields") {
  RunResult r = run(
      "--no-cache --format=csv min-table --fill=-3/2 --genus-from=4 "
      "--genus-to=4 --orientable");
  REQUIRE(r.code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "4,-3/2,,,,,,true,0");
}

TEST_CASE("min-table json output") {
  RunResult r = run(
      "--no-cache min-table --fill=-1/2 --genus-from=2 --genus-to=3");
  ordered_json j = parse(r);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["g"] == 2);
  CHECK(j["rows"][0]["empty"] == false);
  REQUIRE(j["rows"][0]["argmins"].size() == 1);
  CHECK(j["rows"][0]["argmins"][0]["k"] == 2);
  CHECK(j["rows"][0]["argmins"][0]["l"] == 1);
  CHECK(lo_of(j["rows"][0]["lambda"]) <= 1.7220838058);
  CHECK(hi_of(j["rows"][0]["lambda"]) >= 1.7220838057);
  CHECK(j["rows"][1]["argmins"][0]["k"] == 4);
  CHECK(j["rows"][1]["argmins"][0]["l"] == 3);
}

TEST_CASE("min-table genus validation") {
  CHECK(run("--no-cache min-table --fill=2 --genus-from=5 --genus-to=3")
            .code == 2);
  CHECK(run("--no-cache min-table --fill=2 --genus-from=3 --genus-to=201")
            .code == 2);
  CHECK(run("--no-cache min-table --fill=2 --genus-from=1").code == 2);
  CHECK(run("--no-cache min-table --fill=5 --genus-from=3").code == 2);
}

TEST_CASE("bounds output and csv quoting round trip") {
  RunResult r = run("--no-cache bounds --genus-from=8 --genus-to=8");
  ordered_json j = parse(r);
  REQUIRE(j["rows"].size() == 1);
  const auto& row = j["rows"][0];
  CHECK(row["g"] == 8);
  CHECK(row["empty"] == false);
  REQUIRE(row["sources"].size() == 1);
  CHECK(row["sources"][0] == "class (18,17,7)");
  CHECK(row["special_class"]["x"] == 18);
  CHECK(lo_of(row["lambda"]) <= 1.1040392647);

  RunResult c =
      run("--no-cache --format=csv bounds --genus-from=8 --genus-to=8");
  REQUIRE(c.code == 0);
  auto table = magicfiber::csv_parse(c.out);
  REQUIRE(table.size() == 2);
  CHECK(table[0] == std::vector<std::string>(
                        {"g", "orientable", "lambda_lo", "lambda_hi",
                         "sources"}));
  CHECK(table[1][0] == "8");
  CHECK(table[1][4] == "class (18,17,7)");
  // the sources field contains commas, so the raw line must be quoted
  auto lines = split_lines(c.out);
  CHECK(lines[1].find('"') != std::string::npos);
  // re-rendering the parsed fields reproduces the raw line exactly
  CHECK(magicfiber::csv_line(table[1]) == lines[1] + "\r\n");
}

TEST_CASE("ent-face scans") {
  RunResult r = run("--no-cache ent-face --max-denominator=6");
  ordered_json j = parse(r);
  CHECK(j["fill"] == "-3/2");
  CHECK(j["minimum"]["k"] == 1);
  CHECK(j["minimum"]["l"] == 0);
  REQUIRE(j["points"].size() == 23);
  int mins = 0;
  for (const auto& p : j["points"]) {
    if (p["minimum"].get<bool>()) {
      ++mins;
      CHECK(p["s"] == "0/1");
    }
  }
  CHECK(mins == 1);

  r = run("--no-cache ent-face --fill=magic --max-coordinate=3");
  j = parse(r);
  CHECK(j["fill"] == "magic");
  CHECK(j["minimum"]["x"] == 1);
  CHECK(j["minimum"]["y"] == 1);
  CHECK(j["minimum"]["z"] == 0);

  CHECK(run("--no-cache ent-face --fill=bogus").code == 2);
  CHECK(run("--no-cache ent-face --max-denominator=65").code == 2);
  CHECK(run("--no-cache ent-face --fill=magic --max-coordinate=13").code == 2);
}

TEST_CASE("verify equalities suite") {
  RunResult r = run("--no-cache verify --suite=equalities");
  ordered_json j = parse(r);
  CHECK(j["suite"] == "equalities");
  CHECK(j["counts"]["passed"] == 2);
  CHECK(j["counts"]["failed"] == 0);
  CHECK(j["counts"]["flagged"] == 0);
  CHECK(j["flags"].empty());
  CHECK(r.err.empty());
}

TEST_CASE("verify inequalities suite flags the internally inconsistent row") {
  RunResult r = run("--no-cache verify --suite=inequalities");
  ordered_json j = parse(r);
  CHECK(r.code == 0);  // flags are not failures
  CHECK(j["counts"]["failed"] == 0);
  CHECK(j["counts"]["flagged"] == 1);
  REQUIRE(j["flags"].size() == 1);
  CHECK(j["flags"][0] == "cmp-9-7-vs-8-1");
  CHECK(r.err.find("FLAG: cmp-9-7-vs-8-1 -- ") != std::string::npos);
}

TEST_CASE("verify suite validation") {
  RunResult r = run("--no-cache verify --suite=bogus");
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown suite") != std::string::npos);
  CHECK(run("--no-cache verify --suite=congruences --genus-to=2").code == 2);
}

TEST_CASE("width controls the bracket level and decimal digits") {
  RunResult r = run("--no-cache class 1 1 0 --width=1e-9");
  ordered_json j = parse(r);
  CHECK(j["dilatation"]["level"].get<long>() >= 30);
  std::string lo = j["dilatation"]["decimal_lo"].get<std::string>();
  auto dot = lo.find('.');
  REQUIRE(dot != std::string::npos);
  CHECK(lo.size() - dot - 1 == 11);  // digits printed for level 30

  CHECK(run("--no-cache class 1 1 0 --width=bogus").code == 2);
  CHECK(run("--no-cache class 1 1 0 --width=0.75").code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
  for (const std::string& args :
       {std::string("--no-cache class 18 17 7"),
        std::string("--no-cache family A 7 4"),
        std::string("--no-cache min-table --fill=-1/2 --genus-from=2"),
        std::string("--no-cache verify --suite=equalities"),
        std::string("--no-cache ent-face --max-denominator=3")}) {
    RunResult r = run(args);
    REQUIRE(r.code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("cache file reuse is byte-identical and validated") {
  TempDir dir;
  std::string cmd =
      "--cache=warm.json min-table --fill=2 --genus-from=3 --genus-to=5";
  RunResult cold = run(cmd, dir.prefix());
  REQUIRE(cold.code == 0);
  CHECK(fs::exists(dir.path / "warm.json"));
  RunResult warm = run(cmd, dir.prefix());
  REQUIRE(warm.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(warm.err.empty());

  // corrupt cache: warn on stderr, recompute, still succeed
  {
    std::ofstream bad(dir.path / "warm.json");
    bad << "{ not json at all";
  }
  RunResult fixed = run(cmd, dir.prefix());
  REQUIRE(fixed.code == 0);
  CHECK(fixed.out == cold.out);
  CHECK(fixed.err.find("warning:") != std::string::npos);
}

TEST_CASE("cache location resolution") {
  TempDir dir;
  // --no-cache writes nothing
  RunResult r = run("--no-cache class 1 1 0", dir.prefix());
  REQUIRE(r.code == 0);
  CHECK(!fs::exists(dir.path / "magicfiber-cache.json"));

  // default file name in the working directory
  r = run("class 1 1 0", dir.prefix());
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir.path / "magicfiber-cache.json"));

  // environment variable overrides the default
  r = run("class 1 1 0", dir.prefix() + "MAGICFIBER_CACHE=env.json ");
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir.path / "env.json"));

  // an explicit --cache beats the environment
  r = run("--cache=flag.json class 1 1 0",
          dir.prefix() + "MAGICFIBER_CACHE=ignored.json ");
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir.path / "flag.json"));
  CHECK(!fs::exists(dir.path / "ignored.json"));
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  RunResult help = run("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("min-table") != std::string::npos);
}
