#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(MFA1_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("verdict command") {
  auto r1 = run("verdict A 2 1,1 3");
  CHECK(r1.exit_code == 0);
  auto j1 = json::parse(r1.out);
  CHECK(j1["schema"] == 1);
  CHECK(j1["verdict"] == "MF");
  CHECK(j1["branch"] == "ii");
  CHECK(j1["r"] == 4);
  CHECK(j1["factors"] == json::array({4, 2}));

  auto r2 = run("verdict B 2 2,0 5");
  CHECK(r2.exit_code == 0);
  auto j2 = json::parse(r2.out);
  CHECK(j2["verdict"] == "MF");
  CHECK(j2["factors"] == json::array({8, 4}));

  auto r3 = run("verdict A 2 0,0 5");
  CHECK(r3.exit_code == 0);
  auto j3 = json::parse(r3.out);
  CHECK(j3["factors"] == json::array({0}));

  auto r4 = run("verdict G 2 0,1 7");
  CHECK(r4.exit_code == 1);
  auto j4 = json::parse(r4.out);
  CHECK(j4["verdict"] == "NotMF");

  // non-restricted weights run through the p-adic layers
  auto r5 = run("verdict A 2 10,10 3");
  CHECK(r5.exit_code == 0);
  CHECK(json::parse(r5.out)["branch"] == "ii");

  // usage problems exit 2 with a diagnostic on stderr
  CHECK(run("verdict A 2 1,1 4").exit_code == 2);   // not prime
  CHECK(run("verdict G 2 1,1 5").exit_code == 2);   // below the Coxeter number
  CHECK(run("verdict A 2 1").exit_code != 0);       // missing arguments
}

TEST_CASE("restrict command") {
  auto r1 = run("restrict A 2 1,1 3 --source irreducible");
  CHECK(r1.exit_code == 0);
  auto j1 = json::parse(r1.out);
  CHECK(j1["factors"] == json::array({4, 2}));

  auto r2 = run("restrict A 2 1,1 3 --source weyl");
  auto j2 = json::parse(r2.out);
  CHECK(j2["factors"] == json::array({4, 2, 0}));

  auto r3 = run("restrict B 2 2,0 0");
  auto j3 = json::parse(r3.out);
  CHECK(j3["factors"] == json::array({8, 4}));
  CHECK(j3["p"] == 0);

  // restriction table carries the full multiplicity profile
  auto r4 = run("restrict B 2 2,0 5 --source weyl");
  auto j4 = json::parse(r4.out);
  bool found = false;
  for (const auto& row : j4["restriction"])
    if (row["weight"] == 0) {
      CHECK(row["mult"] == "2");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("certify command") {
  auto r1 = run("certify B 2 0,2 5");
  CHECK(r1.exit_code == 1);
  auto j1 = json::parse(r1.out);
  CHECK(j1["certificate"]["kind"] == "Tilting");
  CHECK(j1["verified"] == true);

  auto r2 = run("certify B 2 0,3 5");
  CHECK(r2.exit_code == 1);
  auto j2 = json::parse(r2.out);
  CHECK(j2["certificate"]["kind"] == "DimBoundOmega");

  auto r3 = run("certify B 2 2,0 5");  // multiplicity-free: nothing to certify
  CHECK(r3.exit_code == 2);
  CHECK(json::parse(r3.out)["certificate"].is_null());
}

TEST_CASE("jantzen command") {
  auto r = run("jantzen A 2 1,1 3");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["weyl_irreducible"] == false);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["mu"] == json::array({0, 0}));
  CHECK(j["terms"][0]["coeff"] == 1);
  REQUIRE(j["composition_factors"].size() == 2);
}

TEST_CASE("table sweeps") {
  auto r1 = run("table1 --max-rank 4 --max-coeff 3 --max-r 40");
  CHECK(r1.exit_code == 0);
  auto j1 = json::parse(r1.out);
  CHECK(j1["diff"].empty());
  CHECK(j1["checked"].get<long>() > 100);

  auto r2 = run("rvalues --max-rank 5 --max-coeff 2");
  CHECK(r2.exit_code == 0);
  CHECK(json::parse(r2.out)["diff"].empty());
}

TEST_CASE("ingest command and round-trip") {
  std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  std::string tsv = dir + "/mfa1_cli_roundtrip.tsv";

  auto r1 = run("restrict A 2 1,1 3 --source irreducible --dump-tsv " + tsv);
  REQUIRE(r1.exit_code == 0);

  auto r2 = run("ingest " + tsv);
  CHECK(r2.exit_code == 0);
  auto j2 = json::parse(r2.out);
  CHECK(j2["dimension"] == "7");

  // re-ingesting reproduces the identical verdict and factors
  auto direct = run("verdict A 2 1,1 3");
  auto via_file = run("verdict A 2 1,1 3 --source " + tsv);
  CHECK(via_file.exit_code == direct.exit_code);
  CHECK(json::parse(via_file.out)["factors"] == json::parse(direct.out)["factors"]);

  auto r3 = run("restrict A 2 1,1 3 --source file:" + tsv);
  CHECK(json::parse(r3.out)["factors"] == json::array({4, 2}));

  std::remove(tsv.c_str());
  CHECK(run("ingest /nonexistent.tsv").exit_code == 2);
}

TEST_CASE("output is deterministic") {
  auto a = run("verdict G 2 2,2 11");
  auto b = run("verdict G 2 2,2 11");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
}
