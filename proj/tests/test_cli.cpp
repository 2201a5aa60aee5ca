#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "virtstring/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = virtstring::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("bounds for M") {
  const Run r = run({"bounds", "--example", "M"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["schema"] == "virtstring/1");
  CHECK(j["command"] == "bounds");
  CHECK(j["bounds"]["rho"] == 4);
  CHECK(j["bounds"]["t_mu_half"] == 5);
  CHECK(j["bounds"]["t_nu_half"] == 0);
  CHECK(j["bounds"]["exact"] == true);
  CHECK(j["bounds"]["m"] == 5);
  CHECK(j["bounds"]["O"] == 1);
  CHECK(j["bounds"]["orbit"]["orbit_size"] == 1);
}

TEST_CASE("matrix for alpha_{1,2}") {
  const Run r = run({"matrix", "--example", "alpha:1,2"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["primitive"] == true);
  CHECK(j["rho"] == 3);
  CHECK(j["matrix"]["labels"] == nlohmann::json::array({"s", "A", "B", "C"}));
}

TEST_CASE("matrix for M prints the golden rows") {
  const auto j = run({"matrix", "--example", "M"}).json();
  CHECK(j["matrix"]["rows"][1] == nlohmann::json::array({2, 0, 0, 0, 1, 3}));
  CHECK(j["primitive"] == false);
  CHECK(j["primitive_matrix"]["labels"] == nlohmann::json::array({"s", "A", "B", "D", "E"}));
}

TEST_CASE("empty diagram gives zeros") {
  const Run r = run({"bounds", ""});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["bounds"]["arrows"] == 0);
  CHECK(j["bounds"]["rho"] == 0);
  CHECK(j["bounds"]["t_mu_half"] == 0);
  CHECK(j["bounds"]["t_nu_half"] == 0);
  CHECK(j["bounds"]["m"] == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"mu", "--example", "M"}, {"nu", "--example", "alpha:2,3"}, {"bounds", "--example", "M"},
        {"orbit", "T0 T1 H0 H1"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("rho, nu and orbit subcommands") {
  CHECK(run({"rho", "--example", "alpha:2,2"}).json()["rho"] == 4);
  const auto nu = run({"nu", "--example", "M"}).json();
  CHECK(nu["nu"]["t"] == 0);
  CHECK(nu["factorization_holds"] == true);
  const auto orbit = run({"orbit", "--example", "M"}).json();
  CHECK(orbit["orbit"]["irreducible"] == true);
  const auto mu = run({"mu", "--example", "M"}).json();
  CHECK(mu["mu"]["t_mu_half"] == 5);
  CHECK(mu["mu"]["terms"].size() == 10);
}

TEST_CASE("exit codes") {
  CHECK(run({"rho", "T0 H7"}).code == virtstring::cli::kExitParse);
  CHECK(run({"rho", "--example", "K"}).code == virtstring::cli::kExitParse);
  CHECK(run({"rho", "--example", "alpha:0,2"}).code == virtstring::cli::kExitParse);
  CHECK(run({"rho"}).code == virtstring::cli::kExitParse);
  CHECK(run({"nonsense"}).code == virtstring::cli::kExitParse);
  CHECK(run({"rho", "T0 H0", "--format", "xml"}).code == virtstring::cli::kExitParse);
  CHECK(run({"--help"}).code == virtstring::cli::kExitOk);

  // A Type 3 orbit with more than one member cannot fit in a single state.
  const Run orbit = run({"orbit", "H2 T0 H0 T1 H1 T2", "--max-states", "1"});
  CHECK(orbit.code == virtstring::cli::kExitBudget);
  CHECK(orbit.json()["orbit"]["status"] == "budget_exceeded");

  const Run equiv = run({"equiv", "M", "", "--max-states", "5"});
  CHECK(equiv.code == virtstring::cli::kExitOk);  // the matrices already differ
  CHECK(equiv.json()["verdict"] == "not_homotopic");
  const Run stuck = run({"equiv", "T0 T1 H0 H1", "T0 H0", "--max-states", "2"});
  CHECK(stuck.code == virtstring::cli::kExitBudget);
  CHECK(stuck.json()["verdict"] == "unknown");
}

TEST_CASE("equiv finds a path") {
  const Run r = run({"equiv", "T0 H1 H0 T1", ""});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["verdict"] == "homotopic");
  CHECK(j["path_verified"] == true);
  CHECK(j["search"]["status"] == "yes");
  CHECK(j["search"]["path"].size() == 1);
  CHECK(j["search"]["path"][0]["kind"] == "T2Remove");
}

TEST_CASE("corpus files") {
  const std::string path = std::string(VIRTSTRING_TEST_TMP) + "/corpus.txt";
  {
    std::ofstream f(path);
    f << "# three strings\n"
      << "H0 H1 H2 T0 H3 T1 H4 T2 T3 T4   # M\n"
      << "\n"
      << "T0 H0\n"
      << "T0 T1 H0 H1\n";
  }
  const Run r = run({"rho", "--corpus", path});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][0]["rho"] == 4);
  CHECK(j["results"][1]["rho"] == 0);
  CHECK(j["results"][2]["diagram"] == "T0 T1 H0 H1");

  {
    std::ofstream f(path);
    f << "T0 H0\nT0 Q1\n";
  }
  const Run bad = run({"rho", "--corpus", path});
  CHECK(bad.code == virtstring::cli::kExitParse);
  CHECK(bad.err.find(":2:") != std::string::npos);
  CHECK(run({"rho", "--corpus", path + ".missing"}).code == virtstring::cli::kExitParse);
  CHECK(run({"rho", "T0 H0", "--example", "M"}).code == virtstring::cli::kExitParse);
}

TEST_CASE("text output") {
  const Run m = run({"matrix", "--example", "M", "--format", "text"});
  CHECK(m.out.find("T_bullet") != std::string::npos);
  CHECK(m.out.find("rho                   4") != std::string::npos);
  // Term primitives mark the distinguished element and show the sign.
  const Run mu = run({"mu", "--example", "M", "--format", "text"});
  CHECK(mu.out.find("A*") != std::string::npos);
  CHECK(mu.out.find("⁺") != std::string::npos);
  CHECK(mu.out.find("⁻") != std::string::npos);
}

TEST_CASE("paper-check") {
  const Run r = run({"paper-check", "--format", "text"});
  CHECK(r.code == virtstring::cli::kExitOk);
  int pass = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) pass += line.rfind("PASS", 0) == 0;
  CHECK(pass == 10);
  const auto j = run({"paper-check"}).json();
  CHECK(j["all_passed"] == true);
  CHECK(j["criteria"].size() == 10);
}
