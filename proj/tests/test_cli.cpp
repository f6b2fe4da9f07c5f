#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "signrank/commands.hpp"
#include "signrank/serialize.hpp"
#include "signrank/svg.hpp"
#include "support/structures.hpp"

using namespace signrank;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("signrank_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p.parent_path());
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

int run(const std::string& args) {
  const std::string cmd = std::string(SIGNRANK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kGolden = R"({"context":"poly:q","rows":1,"cols":2,"entries":[[["0","1"],["-1","-1","1"]]]})";
}  // namespace

TEST_CASE("perles build writes the bundle and is deterministic") {
  const fs::path a = scratch("bundle_a"), b = scratch("bundle_b");
  const auto ra = cli::cmd_perles_build(a.string());
  CHECK(ra.exit_code == cli::kOk);
  CHECK(ra.artifacts_written.size() == cli::kBundleFiles.size());
  for (const char* f : cli::kBundleFiles) CHECK(fs::exists(a / f));
  CHECK(cli::cmd_perles_build(b.string()).exit_code == cli::kOk);
  for (const char* f : cli::kBundleFiles) CHECK(slurp(a / f) == slurp(b / f));
  CHECK(cli::cmd_perles_verify(a.string()).exit_code == cli::kOk);

  const std::string svg = slurp(a / "figure.svg");
  CHECK(count(svg, "<circle") == 9);
  CHECK(count(svg, "<line ") == 9);
  CHECK(count(svg, "data-line=\"ABEF\"") == 1);
  for (const char* label : {">A<", ">B<", ">C<", ">D<", ">E<", ">F<", ">G<", ">H<", ">I<"}) CHECK(count(svg, label) == 1);
}

TEST_CASE("perles verify catches tampering and malformed files") {
  const fs::path dir = scratch("tamper");
  REQUIRE(cli::cmd_perles_build(dir.string()).exit_code == cli::kOk);
  auto d = json::parse(slurp(dir / "D.json"));
  d["entries"][0][0] = "12345";
  spit(dir / "D.json", json::dump(d));
  CHECK(cli::cmd_perles_verify(dir.string()).exit_code == cli::kVerificationFailed);

  REQUIRE(cli::cmd_perles_build(dir.string()).exit_code == cli::kOk);
  auto p = json::parse(slurp(dir / "patterns.json"));
  p["A"][0] = std::string(24, '+');
  spit(dir / "patterns.json", json::dump(p));
  CHECK(cli::cmd_perles_verify(dir.string()).exit_code == cli::kVerificationFailed);

  REQUIRE(cli::cmd_perles_build(dir.string()).exit_code == cli::kOk);
  spit(dir / "C.json", "{ not json");
  CHECK(cli::cmd_perles_verify(dir.string()).exit_code == cli::kUsage);
  CHECK(cli::cmd_perles_verify((dir / "missing").string()).exit_code == cli::kUsage);
}

TEST_CASE("perles build reports IO errors") {
  CHECK(cli::cmd_perles_build("/dev/null/cannot").exit_code == cli::kUsage);
}

TEST_CASE("realize") {
  const fs::path dir = scratch("realize");
  fs::create_directories(dir);
  spit(dir / "perles.json", json::dump(json::to_json(perles_structure())));
  spit(dir / "fano.json", json::dump(json::to_json(testdata::fano())));
  const auto q = cli::cmd_realize((dir / "perles.json").string(), "q", (dir / "q.json").string());
  CHECK(q.exit_code == cli::kOk);
  CHECK(json::parse(slurp(dir / "q.json"))["verdict"] == "NonRealizable");
  const auto q5 = cli::cmd_realize((dir / "perles.json").string(), "qsqrt:5", (dir / "q5.json").string());
  CHECK(q5.exit_code == cli::kOk);
  CHECK(json::parse(slurp(dir / "q5.json"))["verdict"] == "Realizable");
  const auto f = cli::cmd_realize((dir / "fano.json").string(), "qsqrt:5", (dir / "f.json").string());
  CHECK(f.exit_code == cli::kOk);
  CHECK(json::parse(slurp(dir / "f.json"))["verdict"] == "NonRealizable");

  spit(dir / "bad.json", R"({"points":["A","B"],"lines":[["A","Q"]]})");
  CHECK(cli::cmd_realize((dir / "bad.json").string(), "q", (dir / "x.json").string()).exit_code == cli::kUsage);
  CHECK(cli::cmd_realize((dir / "perles.json").string(), "reals", (dir / "x.json").string()).exit_code == cli::kUsage);
}

TEST_CASE("rationalize") {
  const fs::path dir = scratch("rationalize");
  fs::create_directories(dir);
  spit(dir / "m.json", kGolden);
  const auto ok = cli::cmd_rationalize((dir / "m.json").string(), "3/2", "8/5", (dir / "o.json").string());
  CHECK(ok.exit_code == cli::kOk);
  const auto out = json::parse(slurp(dir / "o.json"));
  CHECK(out["certificate"]["beta"] == "31/20");
  const auto refine = cli::cmd_rationalize((dir / "m.json").string(), "8/5", "5/3", (dir / "r.json").string());
  CHECK(refine.exit_code == cli::kInconclusive);
  const auto r = json::parse(slurp(dir / "r.json"));
  CHECK(r["entries"][0]["row"] == 1);
  CHECK(r["entries"][0]["col"] == 2);

  spit(dir / "zero.json", R"({"context":"poly:q","rows":2,"cols":2,"entries":[[[],[]],[[],[]]]})");
  CHECK(cli::cmd_rationalize((dir / "zero.json").string(), "0", "1", (dir / "z.json").string()).exit_code == cli::kOk);
  CHECK(json::parse(slurp(dir / "z.json"))["certificate"]["rank_after"] == 0);

  spit(dir / "rf.json",
       R"({"context":"poly:q","rows":1,"cols":2,"entries":[[{"num":["0","1"],"den":["-3","1"]},["1"]]]})");
  const auto rf = cli::cmd_rationalize((dir / "rf.json").string(), "1/4", "1", (dir / "rf_out.json").string());
  CHECK(rf.exit_code == cli::kOk);
  CHECK(json::parse(slurp(dir / "rf_out.json"))["multiplier"]["coeffs"] == json::parse(R"(["3","-1"])"));

  CHECK(cli::cmd_rationalize((dir / "m.json").string(), "2", "1", (dir / "x.json").string()).exit_code == cli::kUsage);
  CHECK(cli::cmd_rationalize((dir / "m.json").string(), "a", "1", (dir / "x.json").string()).exit_code == cli::kUsage);
  spit(dir / "bad.json", R"({"context":"poly:q","rows":1,"cols":1,"entries":[[{"num":["1"],"den":[]}]]})");
  CHECK(cli::cmd_rationalize((dir / "bad.json").string(), "0", "1", (dir / "x.json").string()).exit_code == cli::kUsage);
}

TEST_CASE("minrank") {
  const fs::path dir = scratch("minrank");
  fs::create_directories(dir);
  spit(dir / "id.json", R"(["+00","0+0","00+"])");
  spit(dir / "plus.json", R"(["++++","++++","++++","++++"])");
  const auto id = cli::cmd_minrank((dir / "id.json").string(), {}, (dir / "w.json").string());
  CHECK(id.exit_code == cli::kOk);
  CHECK(id.summary.find("lower: 3") != std::string::npos);
  CHECK(id.summary.find("exact: 3") != std::string::npos);
  const auto plus = cli::cmd_minrank((dir / "plus.json").string(), {}, "");
  CHECK(plus.summary.find("exact: 1") != std::string::npos);
  CHECK(plus.artifacts_written.empty());
  spit(dir / "bad.json", R"(["+-", "+"])");
  CHECK(cli::cmd_minrank((dir / "bad.json").string(), {}, "").exit_code == cli::kUsage);
}

TEST_CASE("minrank on sgn(B) never claims exactness it cannot prove") {
  const fs::path dir = scratch("minrank_b");
  REQUIRE(cli::cmd_perles_build(dir.string()).exit_code == cli::kOk);
  const auto pats = json::parse(slurp(dir / "patterns.json"));
  spit(dir / "b.json", json::dump(pats["B"]));
  SearchBudget budget;
  budget.iterations = 300;
  const auto out = cli::cmd_minrank((dir / "b.json").string(), budget, (dir / "w.json").string());
  CHECK(out.exit_code == cli::kOk);
  const auto w = json::parse(slurp(dir / "w.json"));
  CHECK(w["lower_bound"].get<int>() <= 3);
  if (w["lower_bound"] != w["rank"]) CHECK(out.summary.find("exact") == std::string::npos);
}

TEST_CASE("render") {
  const fs::path dir = scratch("render");
  fs::create_directories(dir);
  const auto s = testdata::triangle();
  const Realization r{FieldContext::rationals(),
                      {{"A", {Scalar(1), Scalar(0), Scalar(0)}}, {"B", {Scalar(0), Scalar(1), Scalar(0)}},
                       {"C", {Scalar(0), Scalar(0), Scalar(1)}}},
                      {{Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}}};
  spit(dir / "s.json", json::dump(json::to_json(s)));
  spit(dir / "r.json", json::dump(json::to_json(r)));
  CHECK(cli::cmd_render((dir / "s.json").string(), (dir / "r.json").string(), (dir / "t.svg").string()).exit_code ==
        cli::kOk);
  const std::string svg = slurp(dir / "t.svg");
  CHECK(count(svg, "<circle") == 3);
  CHECK(count(svg, "<line ") == 3);
  CHECK(cli::cmd_render((dir / "s.json").string(), (dir / "s.json").string(), (dir / "t.svg").string()).exit_code ==
        cli::kUsage);
}

TEST_CASE("executable exit codes") {
  const fs::path dir = scratch("exe");
  fs::create_directories(dir);
  spit(dir / "m.json", kGolden);
  CHECK(run("perles build --out " + (dir / "bundle").string()) == 0);
  CHECK(run("perles verify --dir " + (dir / "bundle").string()) == 0);
  CHECK(run("rationalize --matrix " + (dir / "m.json").string() + " --lo 8/5 --hi 5/3 --out " +
            (dir / "o.json").string()) == 3);
  CHECK(run("realize --incidence " + (dir / "nope.json").string() + " --out " + (dir / "o.json").string()) == 2);
  CHECK(run("no-such-command") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("seed from the environment") {
  ::setenv("SIGNRANK_SEED", "42", 1);
  CHECK(cli::default_seed() == 42);
  ::setenv("SIGNRANK_SEED", "junk", 1);
  CHECK(cli::default_seed(7) == 7);
  ::unsetenv("SIGNRANK_SEED");
  CHECK(cli::default_seed(5) == 5);
}
