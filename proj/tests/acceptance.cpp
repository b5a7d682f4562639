// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "galois/connections.hpp"
#include "galois/enumerate.hpp"
#include "galois/rng.hpp"
#include "run_cli.hpp"
#include "test_util.hpp"

using namespace galois;
using namespace galois::testing;

namespace {

std::string g_detail;

void fail(const std::string& msg) {
  if (g_detail.empty()) g_detail = msg;
}

std::vector<std::vector<ClosureSpace>> spaces_by_size(int max_n) {
  std::vector<std::vector<ClosureSpace>> out;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<ClosureSpace> row;
    for (const MooreFamily& f : enumerate_moore_families(n)) row.emplace_back(f);
    out.push_back(std::move(row));
  }
  return out;
}

// P1: the three verdict flags agree, exhaustively at n = n' = 2 and on
// >= 10^4 sampled tuples at n = n' = 3.
bool p1_theorem_equivalence() {
  auto spaces = spaces_by_size(2);
  auto maps = enumerate_maps(2, 2);
  std::size_t combos = 0;
  for (const ClosureSpace& e : spaces[2])
    for (const ClosureSpace& ep : spaces[2])
      for (const PointMap& phi : maps)
        for (const PointMap& psi : maps) {
          ConnectionVerdict v = verify_theorem(phi, psi, e, ep);
          if (!v.cond_direct || !v.consistent()) {
            fail("P1: flags disagree on an n=2 tuple");
            return false;
          }
          ++combos;
        }
  if (combos != 784u) {
    fail("P1: expected 784 exhaustive tuples, saw " + std::to_string(combos));
    return false;
  }

  SplitMix64 rng(101);
  for (int trial = 0; trial < 10000; ++trial) {
    ClosureSpace e = random_closure_space(3, rng.next());
    ClosureSpace ep = random_closure_space(3, rng.next());
    PointMap phi = random_map(3, 3, rng.next());
    PointMap psi = random_map(3, 3, rng.next());
    ConnectionVerdict v = verify_theorem(phi, psi, e, ep);
    if (!v.cond_direct || !v.consistent()) {
      fail("P1: flags disagree on a sampled n=3 tuple");
      return false;
    }
  }
  return true;
}

// P2: every qoset Galois connection is a closure-space Galois connection of
// the Alexandrov closures, for all qoset pairs with n, n' <= 3.
bool p2_generalizes_qoset_connections() {
  for (int n = 0; n <= 3; ++n)
    for (int np = 0; np <= 3; ++np) {
      auto phis = enumerate_maps(n, np);
      auto psis = enumerate_maps(np, n);
      for (const Qoset& p : enumerate_qosets(n))
        for (const Qoset& pp : enumerate_qosets(np)) {
          ClosureSpace e = alexandrov_closure(p);
          ClosureSpace ep = alexandrov_closure(pp);
          for (const PointMap& phi : phis)
            for (const PointMap& psi : psis) {
              if (!is_qoset_galois(phi, psi, p, pp)) continue;
              if (!is_closure_galois_direct(phi, psi, e, ep)) {
                fail("P2: a qoset connection fails the direct check at n=" +
                     std::to_string(n) + ", n'=" + std::to_string(np));
                return false;
              }
            }
        }
    }
  return true;
}

// P3: every closure-space Galois connection is a qoset connection of the
// specialization orders. Exhaustive at n, n' <= 2, sampled at 3.
bool p3_specializes_to_qoset_connections() {
  auto spaces = spaces_by_size(2);
  for (int n = 0; n <= 2; ++n)
    for (int np = 0; np <= 2; ++np) {
      auto phis = enumerate_maps(n, np);
      auto psis = enumerate_maps(np, n);
      for (const ClosureSpace& e : spaces[n])
        for (const ClosureSpace& ep : spaces[np]) {
          Qoset q = specialization_order(e);
          Qoset qp = specialization_order(ep);
          for (const PointMap& phi : phis)
            for (const PointMap& psi : psis) {
              if (!is_closure_galois_direct(phi, psi, e, ep)) continue;
              if (!is_qoset_galois(phi, psi, q, qp)) {
                fail("P3: direct connection fails the qoset check");
                return false;
              }
            }
        }
    }

  SplitMix64 rng(103);
  for (int trial = 0; trial < 10000; ++trial) {
    ClosureSpace e = random_closure_space(3, rng.next());
    ClosureSpace ep = random_closure_space(3, rng.next());
    PointMap phi = random_map(3, 3, rng.next());
    PointMap psi = random_map(3, 3, rng.next());
    if (!is_closure_galois_direct(phi, psi, e, ep)) continue;
    if (!is_qoset_galois(phi, psi, specialization_order(e), specialization_order(ep))) {
      fail("P3: sampled direct connection fails the qoset check");
      return false;
    }
  }
  return true;
}

// P4: the two continuity criteria agree on every map between every pair of
// spaces with n, n' <= 3.
bool p4_continuity_agreement() {
  auto spaces = spaces_by_size(3);
  for (int n = 0; n <= 3; ++n)
    for (int np = 0; np <= 3; ++np) {
      auto fs = enumerate_maps(n, np);
      for (const ClosureSpace& src : spaces[n])
        for (const ClosureSpace& dst : spaces[np])
          for (const PointMap& f : fs)
            if (is_continuous(f, src, dst) != is_continuous_exhaustive(f, src, dst)) {
              fail("P4: continuity criteria disagree");
              return false;
            }
    }
  return true;
}

// P5: all five adjoint properties hold on every enumerated connection with
// n, n' <= 3; exact cancellation on poset instances.
bool p5_adjoint_properties() {
  auto spaces = spaces_by_size(3);
  for (int n = 0; n <= 3; ++n)
    for (int np = 0; np <= 3; ++np)
      for (const ClosureSpace& e : spaces[n])
        for (const ClosureSpace& ep : spaces[np]) {
          Qoset q = specialization_order(e);
          Qoset qp = specialization_order(ep);
          for (const auto& [phi, psi] : enumerate_galois_connections(e, ep)) {
            AdjointProperties r = adjoint_properties_report(phi, psi, q, qp);
            if (!r.all()) {
              fail("P5: an adjoint property fails at n=" + std::to_string(n) +
                   ", n'=" + std::to_string(np));
              return false;
            }
          }
        }
  return true;
}

// P6: specialization of alexandrov is the identity on all qosets n <= 4;
// family/table round trips are exact for n <= 3.
bool p6_round_trips() {
  for (int n = 0; n <= 4; ++n)
    for (const Qoset& p : enumerate_qosets(n))
      if (specialization_order(alexandrov_closure(p)) != p) {
        fail("P6: specialization(alexandrov) != id at n=" + std::to_string(n));
        return false;
      }
  for (int n = 0; n <= 3; ++n)
    for (const MooreFamily& f : enumerate_moore_families(n)) {
      ClosureSpace s{f};
      ClosureTable t = table_from_space(s);
      if (moore_family_from_table(t) != f) {
        fail("P6: family -> table -> family round trip failed");
        return false;
      }
      if (table_from_space(ClosureSpace(moore_family_from_table(t))) != t) {
        fail("P6: table -> family -> table round trip failed");
        return false;
      }
    }
  return true;
}

// P7: the T1 corollary holds for every map pair between T1 spaces with
// n, n' <= 3, and discrete k-point spaces carry exactly k! connections.
bool p7_t1_corollary() {
  std::vector<std::vector<ClosureSpace>> t1;
  for (int n = 0; n <= 3; ++n) {
    std::vector<ClosureSpace> row;
    for (const MooreFamily& f : enumerate_moore_families(n)) {
      ClosureSpace s{f};
      if (is_t1(s)) row.push_back(std::move(s));
    }
    t1.push_back(std::move(row));
  }
  for (int n = 0; n <= 3; ++n)
    for (int np = 0; np <= 3; ++np) {
      auto phis = enumerate_maps(n, np);
      auto psis = enumerate_maps(np, n);
      for (const ClosureSpace& e : t1[n])
        for (const ClosureSpace& ep : t1[np])
          for (const PointMap& phi : phis)
            for (const PointMap& psi : psis)
              if (!check_t1_corollary(phi, psi, e, ep)) {
                fail("P7: corollary violated at n=" + std::to_string(n) + ", n'=" +
                     std::to_string(np));
                return false;
              }
    }

  std::size_t factorial[] = {1, 1, 2, 6};
  for (int k = 1; k <= 3; ++k) {
    ClosureSpace d = discrete(k);
    if (enumerate_galois_connections(d, d).size() != factorial[k]) {
      fail("P7: discrete " + std::to_string(k) + "-point connection count != " +
           std::to_string(factorial[k]));
      return false;
    }
  }
  return true;
}

// P8: enumerator counts against the filter oracles, and exact agreement of
// the two family enumerators.
bool p8_enumeration_sanity() {
  std::size_t family_expected[] = {1, 2, 7, 61};
  std::size_t qoset_expected[] = {1, 1, 4, 29};
  for (int n = 0; n <= 3; ++n) {
    auto oracle = filter_oracle_families(n);
    auto fast = enumerate_moore_families(n);
    if (oracle.size() != family_expected[n] || fast.size() != family_expected[n]) {
      fail("P8: family count mismatch at n=" + std::to_string(n));
      return false;
    }
    std::set<std::vector<std::uint64_t>> a, b;
    for (const auto& f : oracle) a.insert(f.closed);
    for (const auto& f : fast) b.insert(f.closed);
    if (a != b) {
      fail("P8: enumerators disagree on the families at n=" + std::to_string(n));
      return false;
    }
    if (filter_oracle_qosets(n).size() != qoset_expected[n] ||
        enumerate_qosets(n).size() != qoset_expected[n]) {
      fail("P8: qoset count mismatch at n=" + std::to_string(n));
      return false;
    }
  }
  return true;
}

// P9: adjoint synthesis agrees with brute-force search over the full map
// space, for all maps between qosets with n, n' <= 3.
bool p9_adjoint_synthesis() {
  for (int n = 0; n <= 3; ++n)
    for (int np = 0; np <= 3; ++np) {
      auto phis = enumerate_maps(n, np);
      auto psis = enumerate_maps(np, n);
      for (const Qoset& p : enumerate_qosets(n))
        for (const Qoset& pp : enumerate_qosets(np)) {
          for (const PointMap& phi : phis) {
            bool brute = false;
            for (const PointMap& psi : psis)
              if (is_qoset_galois(phi, psi, p, pp)) brute = true;
            auto synth = right_adjoint(phi, p, pp);
            if (synth.has_value() != brute) {
              fail("P9: right_adjoint presence disagrees with brute force");
              return false;
            }
            if (synth && !is_qoset_galois(phi, *synth, p, pp)) {
              fail("P9: synthesized right adjoint fails verification");
              return false;
            }
          }
          for (const PointMap& psi : psis) {
            bool brute = false;
            for (const PointMap& phi : phis)
              if (is_qoset_galois(phi, psi, p, pp)) brute = true;
            auto synth = left_adjoint(psi, p, pp);
            if (synth.has_value() != brute) {
              fail("P9: left_adjoint presence disagrees with brute force");
              return false;
            }
            if (synth && !is_qoset_galois(*synth, psi, p, pp)) {
              fail("P9: synthesized left adjoint fails verification");
              return false;
            }
          }
        }
    }
  return true;
}

std::string read_file_or_empty(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// P10: the CLI fixture suite produces the documented exit codes and
// byte-stable reports.
bool p10_cli_fixtures() {
  struct Case {
    std::string args;
    int exit_code;
    std::string golden;  // file under fixtures/golden
  };
  const Case cases[] = {
      {"check " + fixture("chain4.json") + " " + fixture("chain2.json") + " " +
           fixture("phi_floor.json") + " " + fixture("psi_odd.json") + " --method all",
       0, "chain_adjunction.txt"},
      {"check " + fixture("chain4.json") + " " + fixture("chain2.json") + " " +
           fixture("phi_const0.json") + " " + fixture("psi_const0.json") + " --method all",
       1, "constant_counterexample.txt"},
      {"validate --strict " + fixture("invalid_family.json"), 1, "invalid_family.txt"},
      {"check " + fixture("discrete2.json") + " " + fixture("discrete2.json") + " " +
           fixture("swap2.json") + " " + fixture("swap2.json") + " --method all",
       0, "discrete_swap.txt"},
  };
  for (const Case& c : cases) {
    CliResult r = run_cli(c.args);
    if (r.exit_code != c.exit_code) {
      fail("P10: exit code " + std::to_string(r.exit_code) + " != " +
           std::to_string(c.exit_code) + " for: " + c.args);
      return false;
    }
    std::string golden = read_file_or_empty(fixture("golden/" + c.golden));
    if (golden.empty()) {
      fail("P10: missing golden file " + c.golden);
      return false;
    }
    if (r.output != golden) {
      fail("P10: report drifted from golden " + c.golden + "; got:\n" + r.output);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<bool()> run;
  };
  const Criterion criteria[] = {
      {"P1", "theorem flag equivalence", p1_theorem_equivalence},
      {"P2", "qoset connections generalize", p2_generalizes_qoset_connections},
      {"P3", "closure connections specialize", p3_specializes_to_qoset_connections},
      {"P4", "continuity criteria agree", p4_continuity_agreement},
      {"P5", "adjoint properties", p5_adjoint_properties},
      {"P6", "round trips", p6_round_trips},
      {"P7", "T1 corollary", p7_t1_corollary},
      {"P8", "enumeration sanity", p8_enumeration_sanity},
      {"P9", "adjoint synthesis", p9_adjoint_synthesis},
      {"P10", "CLI fixtures", p10_cli_fixtures},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    g_detail.clear();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      g_detail = std::string("exception: ") + e.what();
    }
    std::cout << c.id << " (" << c.name << "): " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      ++failures;
      if (!g_detail.empty()) std::cout << "  " << g_detail << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
