#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "repstab/serialize.hpp"

using namespace repstab;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + REPSTAB_BIN " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path fresh_dir(const std::string& tag) {
  auto p = std::filesystem::temp_directory_path() /
           (tag + "." + std::to_string(static_cast<long>(getpid())));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("cli: pieri emits padded decompositions") {
  RunResult r = run("--format json pieri --lambda 2.1 --m 1");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["dim"] == 8);
  REQUIRE(j["decomposition"].size() == 3);
  CHECK(j["decomposition"][0]["lambda"] == Json::array({2, 1, 1}));
  CHECK(j["decomposition"][1]["lambda"] == Json::array({2, 2}));
  CHECK(j["decomposition"][2]["lambda"] == Json::array({3, 1}));

  // the format option falls through to subcommands
  RunResult r2 = run("pieri --lambda 2.1 --m 1 --format json");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == r.out);
}

TEST_CASE("cli: pieri csv is exact") {
  RunResult r = run("--format csv pieri --lambda 1 --m 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "lambda,mult\n1 1,1\n2,1\n");
}

TEST_CASE("cli: kuenneth uses stable labels") {
  RunResult r = run("--format json kuenneth --betti 1,1 --q 2 --n 8");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["betti"] == Json::array({1, 1}));
  CHECK(j["q"] == 2);
  CHECK(j["n"] == 8);
  CHECK(j["dim"] == 28);
  REQUIRE(j["decomposition"].size() == 2);
  CHECK(j["decomposition"][0]["lambda"] == Json::array({1}));
  CHECK(j["decomposition"][1]["lambda"] == Json::array({1, 1}));
}

TEST_CASE("cli: stable forms") {
  RunResult r = run("--format json induce --a 1:1 --stable");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["stable_from"] == 2);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["lambda"] == Json::array());
  CHECK(j["entries"][1]["lambda"] == Json::array({1}));

  RunResult k = run("--format json kuenneth --betti 1,1 --q 1 --stable");
  REQUIRE(k.exit_code == 0);
  Json kj = Json::parse(k.out);
  CHECK(kj["stable_from"] == 2);
}

TEST_CASE("cli: decompose named characters") {
  RunResult r = run("--format json decompose --n 4 --character permutation");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["dim"] == 4);
  REQUIRE(j["decomposition"].size() == 2);
  CHECK(j["decomposition"][0]["lambda"] == Json::array({3, 1}));
  CHECK(j["decomposition"][0]["mult"] == 1);
  CHECK(j["decomposition"][1]["lambda"] == Json::array({4}));
}

TEST_CASE("cli: stability verdicts set the exit code") {
  RunResult pass = run("--format json stability --generator kuenneth --betti 1,1 --q 3 --guarantee 6");
  REQUIRE(pass.exit_code == 0);
  Json pj = Json::parse(pass.out);
  CHECK(pj["verdict"] == "PASS");
  CHECK(pj["observed_onset"] == 4);
  CHECK(pj["guaranteed"] == 6);
  CHECK(pj["window"] == Json::array({1, 10}));

  RunResult fail = run("--format json stability --generator kuenneth --betti 1,1 --q 3 --guarantee 2");
  CHECK(fail.exit_code == 3);
  Json fj = Json::parse(fail.out);
  CHECK(fj["verdict"] == "FAIL");

  RunResult induced = run("--format json stability --generator induced --lambda 2 --guarantee 4");
  REQUIRE(induced.exit_code == 0);
  Json ij = Json::parse(induced.out);
  CHECK(ij["observed_onset"] == 4);
  CHECK(ij["verdict"] == "PASS");

  // without --guarantee the verdict stays null and the exit code is zero
  RunResult plain = run("--format json stability --generator kuenneth --betti 1,1 --q 2");
  REQUIRE(plain.exit_code == 0);
  Json qj = Json::parse(plain.out);
  CHECK(qj["verdict"].is_null());
  CHECK(qj["observed_onset"] == 3);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run("pieri --lambda 2.1 --m 1 --bogus").exit_code == 2);
  CHECK(run("pieri --lambda 1.3 --m 1").exit_code == 2);
  CHECK(run("pieri --lambda 2.1").exit_code == 2);  // missing required --m
  CHECK(run("decompose --n 3").exit_code == 2);     // neither --character nor --values
  CHECK(run("decompose --n 3 --character trivial --values 1,1,1").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("stability --generator wrong --q 1").exit_code == 2);
  CHECK(run("kuenneth --betti 1,1 --q 2").exit_code == 2);  // needs --n or --stable
}

TEST_CASE("cli: domain errors exit with 1") {
  CHECK(run("decompose --n 2 --values 1,0").exit_code == 1);  // not a character
  CHECK(run("--format json kuenneth --betti 1,1 --q 2 --stable --horizon 4").exit_code == 1);
  CHECK(run("arnold --n 12 --q 1").exit_code == 1);  // beyond the feasibility guard
}

TEST_CASE("cli: arnold single degree and scans") {
  RunResult r = run("--format json arnold --n 5 --q 2");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["q"] == 2);
  CHECK(j["dim"] == 35);

  RunResult scan = run("--format csv arnold --q 1 --scan --n-min 3 --n-max 5");
  REQUIRE(scan.exit_code == 0);
  CHECK(scan.out ==
        "n,lambda,mult\n"
        "3,2 1,1\n"
        "3,3,1\n"
        "4,2 2,1\n"
        "4,3 1,1\n"
        "4,4,1\n"
        "5,3 2,1\n"
        "5,4 1,1\n"
        "5,5,1\n");

  RunResult sj = run("--format json arnold --q 1 --scan --n-min 3 --n-max 4");
  REQUIRE(sj.exit_code == 0);
  Json arr = Json::parse(sj.out);
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["n"] == 3);
  CHECK(arr[0]["dim"] == 3);
  CHECK(arr[1]["n"] == 4);
  CHECK(arr[1]["dim"] == 6);
}

TEST_CASE("cli: equivariant complexes from files") {
  auto dir = fresh_dir("repstab_cli_eq");
  AlgebraElement gm1 = AlgebraElement::gen(0) - AlgebraElement::one();
  ExplicitRep fixed = ExplicitRep::permutation(3).with_g_action({identityQ(3)});
  EquivariantComplex c = complex_from_resolution({1, 1}, {{{gm1}}}, fixed);
  auto cpath = dir / "complex.json";
  std::ofstream(cpath) << complex_to_json(c).dump(2);

  RunResult r = run("--format json equivariant --complex " + cpath.string() + " --p 0");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["p"] == 0);
  CHECK(j["dim"] == 3);
  CHECK(j["decomposition"][0]["lambda"] == Json::array({2, 1}));
  CHECK(j["decomposition"][1]["lambda"] == Json::array({3}));

  RunResult all = run("--format json equivariant --complex " + cpath.string());
  REQUIRE(all.exit_code == 0);
  Json arr = Json::parse(all.out);
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["dim"] == 3);
  CHECK(arr[1]["dim"] == 3);

  // invariants of a representation file
  ExplicitRep negated =
      ExplicitRep::permutation(3).with_g_action({Rational(-1) * identityQ(3)});
  auto rpath = dir / "rep.json";
  std::ofstream(rpath) << rep_to_json(negated).dump(2);
  RunResult inv = run("--format json equivariant --rep " + rpath.string() + " --invariants");
  REQUIRE(inv.exit_code == 0);
  Json ij = Json::parse(inv.out);
  CHECK(ij["dim"] == 0);
  CHECK(ij["decomposition"].empty());

  // a complex whose differentials fail to commute is rejected
  Json bad = complex_to_json(c);
  bad["differentials"][0][0][1] = "1";
  auto bpath = dir / "bad.json";
  std::ofstream(bpath) << bad.dump(2);
  CHECK(run("equivariant --complex " + bpath.string() + " --p 0").exit_code == 1);

  std::filesystem::remove_all(dir);
}

TEST_CASE("cli: on-disk caches are reused and survive corruption") {
  auto dir = fresh_dir("repstab_cli_cache");
  const std::string env = "REPSTAB_CACHE=" + dir.string();
  const std::string args = "--format json arnold --n 5 --q 2";

  RunResult cold = run(args, env);
  REQUIRE(cold.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "arnold_rel" / "5_2.json"));
  CHECK(std::filesystem::exists(dir / "chartab" / "5.json"));

  RunResult warm = run(args, env);
  REQUIRE(warm.exit_code == 0);
  CHECK(warm.out == cold.out);

  // corrupt entries are recomputed, not trusted
  std::ofstream(dir / "chartab" / "5.json") << "{\"version\": 1, \"garbage\": true}";
  std::ofstream(dir / "arnold_rel" / "5_2.json") << "not json at all";
  RunResult healed = run(args, env);
  REQUIRE(healed.exit_code == 0);
  CHECK(healed.out == cold.out);

  // the bad character table entry was replaced by a valid one
  std::ifstream back(dir / "chartab" / "5.json");
  Json t = Json::parse(back, nullptr, false);
  REQUIRE(!t.is_discarded());
  CHECK(character_table_from_json(t).has_value());

  std::filesystem::remove_all(dir);
}

TEST_CASE("cli: table output is the default") {
  RunResult r = run("pieri --lambda 1 --m 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.substr(0, 12) == "lambda  mult");
  CHECK(r.out.find("(1,1)") != std::string::npos);
  CHECK(r.out.find("(2)") != std::string::npos);
}
