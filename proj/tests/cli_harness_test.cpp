#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "voamat/cache.hpp"
#include "voamat/serialize.hpp"

using namespace voamat;
namespace fs = std::filesystem;

namespace {

std::string cli_bin() {
  const char* p = std::getenv("VOAMAT_CLI_BIN");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args, const std::string& extra_env = "") {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / "voamat-cli-test";
  fs::create_directories(dir);
  fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = extra_env + " " + cli_bin() + " " + args + " > " + out.string() + " 2> " +
                    err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "voamat-cli-test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("serialization round-trips are bit-exact") {
  State s = State::monomial({2, 1}, rat(-7, 3)) + State::vacuum();
  CHECK(state_from_json(json_of(s)) == s);
  CHECK(json_of(rat(-7, 3)).get<std::string>() == "-7/3");

  UMatrix m(2);
  m.set(0, 1, s);
  m.set(2, 2, State::monomial({1}, rat(1, 2)));
  CHECK(umatrix_from_json(json_of(m)) == m);
  // Round-trip through text as well.
  CHECK(umatrix_from_json(Json::parse(json_of(m).dump())) == m);

  ReducedBasis rb;
  rb.insert({{0, rat(2)}, {3, rat(5)}});
  rb.insert({{1, rat(1)}, {3, rat(-1, 7)}});
  ReducedBasis back = reduced_basis_from_json(json_of(rb));
  CHECK(back.rows() == rb.rows());
  CHECK(json_of(back).dump() == json_of(rb).dump());

  Report rep;
  rep.suite = "demo";
  rep.meta["cutoff"] = "4";
  rep.add("ok-check", true);
  rep.add("bad-check", false, "witness 1/2*[1]");
  Report rep2 = report_from_json(json_of(rep));
  CHECK(rep2.suite == rep.suite);
  CHECK(rep2.pass == rep.pass);
  CHECK(rep2.checks.size() == rep.checks.size());
  CHECK(rep2.checks[1].detail == "witness 1/2*[1]");
  CHECK(json_of(rep2).dump() == json_of(rep).dump());
}

TEST_CASE("cache hit, miss, and corruption") {
  fs::path dir = fs::temp_directory_path() / "voamat-cache-unit";
  fs::remove_all(dir);
  BlockCache cache(dir.string(), "config-A");
  CHECK(cache.enabled());
  CHECK_FALSE(cache.load("blk").has_value());
  Json payload{{"rows", {1, 2, 3}}};
  cache.store("blk", payload);
  auto hit = cache.load("blk");
  REQUIRE(hit.has_value());
  CHECK(*hit == payload);

  // Different config key: miss.
  BlockCache other(dir.string(), "config-B");
  CHECK_FALSE(other.load("blk").has_value());

  // Corrupt the payload in place: hash check must reject and warn.
  fs::path entry = fs::path(dir) / ("blk-" + cache.config_hash() + ".json");
  REQUIRE(fs::exists(entry));
  Json j = Json::parse(std::ifstream(entry));
  j["payload"]["rows"][0] = 99;
  std::ofstream(entry) << j.dump();
  std::string warning;
  CHECK_FALSE(cache.load("blk", &warning).has_value());
  CHECK(warning.find("content hash") != std::string::npos);

  // Truncated file: parse failure is also a warned miss.
  std::ofstream(entry) << "{ not json";
  warning.clear();
  CHECK_FALSE(cache.load("blk", &warning).has_value());
  CHECK_FALSE(warning.empty());

  // Disabled cache is inert.
  BlockCache off("", "config-A");
  CHECK_FALSE(off.enabled());
  off.store("blk", payload);
  CHECK_FALSE(off.load("blk").has_value());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("dims --bogus-flag").exit_code == 2);
  CHECK(run_cli("dims --algebra nonsense").exit_code == 2);
  CHECK(run_cli("diamond --left /nonexistent.json --right /nonexistent.json").exit_code == 2);
  CHECK(run_cli("diamond").exit_code == 2);  // missing required flags
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("selftest emits a passing report") {
  RunResult r = run_cli("selftest --weight-cutoff 4 --seed 7");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("command") == "selftest");
  CHECK(j.at("report").at("pass").get<bool>());
}

TEST_CASE("diamond command matches the library product") {
  UMatrix A = UMatrix::elementary(1, 0, 1, State::monomial({1}));
  UMatrix B = UMatrix::elementary(1, 1, 1, State::monomial({1}));
  auto pa = write_temp("A.json", json_of(A).dump());
  auto pb = write_temp("B.json", json_of(B).dump());
  RunResult r = run_cli("diamond --left " + pa.string() + " --right " + pb.string());
  REQUIRE(r.exit_code == 0);
  UMatrix got = umatrix_from_json(Json::parse(r.out).at("product"));
  VertexAlgebra alg({AlgebraKind::Heisenberg, Rational(1), 6});
  CHECK(got == diamond(alg, A, B));
}

TEST_CASE("dims output and cross-format value equality") {
  RunResult js = run_cli("dims --algebra heisenberg --N 0 --weight-cutoff 3");
  REQUIRE(js.exit_code == 0);
  Json j = Json::parse(js.out);
  for (int w = 0; w <= 3; ++w) {
    CHECK(j.at("quotient_dims").at("(0,0)").at(w).get<int>() == 1);
    CHECK(j.at("c2_dims").at(w).get<int>() == 1);
  }

  RunResult csv = run_cli("dims --algebra heisenberg --N 0 --weight-cutoff 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  // Every scalar leaf of the JSON document appears as one CSV row.
  std::function<int(const Json&)> leaves = [&](const Json& v) -> int {
    if (v.is_object() || v.is_array()) {
      int n = 0;
      for (const auto& c : v) n += leaves(c);
      return n;
    }
    return 1;
  };
  int rows = 0;
  std::istringstream is(csv.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "path,value");
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows == leaves(j));
  CHECK(csv.out.find("c2_dims[3],1") != std::string::npos);
}

TEST_CASE("cold and warm cache runs are byte-identical, corruption recovers") {
  fs::path dir = fs::temp_directory_path() / "voamat-cache-cli";
  fs::remove_all(dir);
  std::string args = "dims --algebra heisenberg --N 1 --weight-cutoff 3 --cache-dir " +
                     dir.string();
  RunResult cold = run_cli(args);
  REQUIRE(cold.exit_code == 0);
  auto files = std::vector<fs::path>();
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  CHECK(files.size() == 4);  // one block per slot

  RunResult warm = run_cli(args);
  REQUIRE(warm.exit_code == 0);
  CHECK(warm.out == cold.out);

  // Corrupt one entry: the run warns, recomputes, and output is unchanged.
  std::ofstream(files[0]) << "garbage";
  RunResult rec = run_cli(args);
  REQUIRE(rec.exit_code == 0);
  CHECK(rec.out == cold.out);
  CHECK(rec.err.find("warning") != std::string::npos);

  // Environment variable supplies the cache directory.
  fs::path dir2 = fs::temp_directory_path() / "voamat-cache-env";
  fs::remove_all(dir2);
  RunResult env = run_cli("dims --algebra heisenberg --N 0 --weight-cutoff 3",
                          "VOAMAT_CACHE_DIR=" + dir2.string());
  REQUIRE(env.exit_code == 0);
  CHECK(fs::exists(dir2));
  CHECK_FALSE(fs::is_empty(dir2));
}

TEST_CASE("zhu and act commands run clean") {
  RunResult z = run_cli("zhu --N 0 --weight-cutoff 2");
  REQUIRE(z.exit_code == 0);
  Json jz = Json::parse(z.out);
  CHECK(jz.at("reports").size() >= 2);
  for (const auto& r : jz.at("reports")) CHECK(r.at("pass").get<bool>());

  RunResult a = run_cli("act --N 1 --depth-cutoff 3 --weight-cutoff 2");
  REQUIRE(a.exit_code == 0);
  Json ja = Json::parse(a.out);
  CHECK(ja.at("gr_dims").at("gr_0").at(0).get<int>() == 1);
  CHECK_FALSE(ja.at("actions").empty());
}
