#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "run_cli.hpp"

using galois::testing::fixture;
using galois::testing::run_cli;

TEST_CASE("validate accepts a valid space") {
  auto r = run_cli("validate " + fixture("chain2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "valid: yes\n");
}

TEST_CASE("validate flags a non-moore family with a witness") {
  auto r = run_cli("validate --strict " + fixture("invalid_family.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("valid: no") != std::string::npos);
  CHECK(r.output.find("{}") != std::string::npos);  // the missing intersection
}

TEST_CASE("validate auto-inserts the universe with a notice") {
  auto r = run_cli("validate " + fixture("invalid_family.json"));
  CHECK(r.exit_code == 1);  // still invalid: {a} and {b} meet in the missing {}
  CHECK(r.output.find("notice: universe inserted") != std::string::npos);
}

TEST_CASE("validate --json") {
  auto r = run_cli("--json validate " + fixture("chain2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"valid\": true") != std::string::npos);
}

TEST_CASE("empty universe document is valid") {
  auto r = run_cli("validate " + fixture("empty.json"));
  CHECK(r.exit_code == 0);
}

TEST_CASE("parse errors exit 2") {
  CHECK(run_cli("validate " + fixture("no_such_file.json")).exit_code == 2);
  CHECK(run_cli("validate " + fixture("bad_syntax.json")).exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("derive specialization prints sorted relation lines") {
  auto r = run_cli("derive " + fixture("chain2.json") + " --what specialization");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0 <= 0\n0 <= 1\n1 <= 1\n");
}

TEST_CASE("derive lattice prints a hasse digraph") {
  auto r = run_cli("derive " + fixture("discrete2.json") + " --what lattice");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("digraph lattice {") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = r.output.find(" -> ", pos)) != std::string::npos; ++pos)
    ++edges;
  CHECK(edges == 4);
}

TEST_CASE("derive table prints every closure") {
  auto r = run_cli("derive " + fixture("chain2.json") + " --what table");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{} -> {}\n{0} -> {0}\n{1} -> {0,1}\n{0,1} -> {0,1}\n");
}

TEST_CASE("check accepts the chain adjunction") {
  auto r = run_cli("check " + fixture("chain4.json") + " " + fixture("chain2.json") + " " +
                   fixture("phi_floor.json") + " " + fixture("psi_odd.json") +
                   " --method all");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("direct: true") != std::string::npos);
  CHECK(r.output.find("qoset: true") != std::string::npos);
  CHECK(r.output.find("induced: true") != std::string::npos);
  CHECK(r.output.find("agreement: ok") != std::string::npos);
  CHECK(r.output.find("result: true") != std::string::npos);
}

TEST_CASE("check rejects the constant pair with a witness") {
  auto r = run_cli("check " + fixture("chain4.json") + " " + fixture("chain2.json") + " " +
                   fixture("phi_const0.json") + " " + fixture("psi_const0.json") +
                   " --method direct");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("direct: false") != std::string::npos);
  CHECK(r.output.find("witness[direct]:") != std::string::npos);
}

TEST_CASE("check single methods") {
  std::string files = fixture("chain4.json") + " " + fixture("chain2.json") + " " +
                      fixture("phi_floor.json") + " " + fixture("psi_odd.json");
  CHECK(run_cli("check " + files + " --method qoset").exit_code == 0);
  CHECK(run_cli("check " + files + " --method induced").exit_code == 0);
  auto r = run_cli("--json check " + files + " --method all");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"result\": true") != std::string::npos);
}

TEST_CASE("check with mismatched map arities exits 2") {
  auto r = run_cli("check " + fixture("chain2.json") + " " + fixture("chain4.json") + " " +
                   fixture("phi_floor.json") + " " + fixture("psi_odd.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("adjoint synthesizes the right adjoint of floor") {
  auto r = run_cli("adjoint " + fixture("chain4.json") + " " + fixture("chain2.json") + " " +
                   fixture("phi_floor.json") + " --side right");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"0\": \"1\"") != std::string::npos);
  CHECK(r.output.find("\"1\": \"3\"") != std::string::npos);
}

TEST_CASE("adjoint reports none for the swap map") {
  auto r = run_cli("adjoint " + fixture("chain2.json") + " " + fixture("chain2.json") + " " +
                   fixture("swap_chain2.json") + " --side right");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "none\n");
}

TEST_CASE("adjoint left side recovers floor from psi") {
  auto r = run_cli("adjoint " + fixture("chain4.json") + " " + fixture("chain2.json") + " " +
                   fixture("psi_odd.json") + " --side left");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"2\": \"1\"") != std::string::npos);
  CHECK(r.output.find("\"3\": \"1\"") != std::string::npos);
}

TEST_CASE("enumerate counts") {
  CHECK(run_cli("enumerate --kind families -n 2 --count-only").output == "7\n");
  CHECK(run_cli("enumerate --kind families -n 3 --count-only").output == "61\n");
  CHECK(run_cli("enumerate --kind qosets -n 2 --count-only").output == "4\n");
  CHECK(run_cli("enumerate --kind qosets -n 3 --count-only").output == "29\n");
  CHECK(run_cli("enumerate --kind families -n 9 --count-only").exit_code == 2);
}

TEST_CASE("enumerate connections between chain files") {
  auto r = run_cli("enumerate --kind connections " + fixture("chain2.json") + " " +
                   fixture("chain2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "phi={0->0,1->0} psi={0->1,1->1}\n"
        "phi={0->0,1->1} psi={0->0,1->1}\n");
}

TEST_CASE("enumerate output is deterministic") {
  auto a = run_cli("enumerate --kind families -n 3");
  auto b = run_cli("enumerate --kind families -n 3");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("GALOIS_CAP lowers the direct cap") {
  std::string files = fixture("chain4.json") + " " + fixture("chain2.json") + " " +
                      fixture("phi_floor.json") + " " + fixture("psi_odd.json");
  auto r = run_cli("check " + files + " --method direct");
  CHECK(r.exit_code == 0);
  setenv("GALOIS_CAP", "1", 1);
  auto capped = run_cli("check " + files + " --method direct");
  unsetenv("GALOIS_CAP");
  CHECK(capped.exit_code == 2);
}
