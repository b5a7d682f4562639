#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galois/caps.hpp"
#include "galois/connections.hpp"
#include "galois/documents.hpp"
#include "galois/enumerate.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw galois::parse_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedSpace {
  galois::SpaceDocument doc;
  galois::ClosureSpace space;
  bool universe_inserted = false;
};

// Parses, optionally auto-inserts the universe, and validates. Throws
// validation_error with a rendered witness when the family is not Moore.
LoadedSpace load_space(const std::string& path, bool strict) {
  LoadedSpace out;
  out.doc = galois::parse_space_document(read_file(path));
  galois::MooreFamily fam =
      galois::family_from_document(out.doc, !strict, &out.universe_inserted);
  auto v = galois::find_family_violations(fam);
  if (v.any()) {
    std::string msg;
    if (v.universe_missing)
      msg = "universe " +
            galois::render_named_set(galois::Subset::mask_of(fam.n), out.doc.universe) +
            " is not closed";
    if (v.missing_intersection) {
      if (!msg.empty()) msg += "; ";
      msg += "missing intersection " + galois::render_named_set(v.lhs, out.doc.universe) +
             " \xE2\x88\xA9 " + galois::render_named_set(v.rhs, out.doc.universe) + " = " +
             galois::render_named_set(*v.missing_intersection, out.doc.universe);
    }
    throw galois::validation_error(path + ": " + msg);
  }
  out.space = galois::ClosureSpace(std::move(fam));
  return out;
}

int cmd_validate(const std::string& path, bool strict, bool as_json) {
  galois::SpaceDocument doc = galois::parse_space_document(read_file(path));
  bool inserted = false;
  galois::MooreFamily fam = galois::family_from_document(doc, !strict, &inserted);
  auto v = galois::find_family_violations(fam);

  if (as_json) {
    nlohmann::ordered_json j;
    j["valid"] = !v.any();
    j["universe_inserted"] = inserted;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    if (v.universe_missing) violations.push_back("universe-not-closed");
    if (v.missing_intersection) {
      nlohmann::ordered_json m;
      m["violation"] = "missing-intersection";
      m["witness"] = galois::render_named_set(*v.missing_intersection, doc.universe);
      violations.push_back(m);
    }
    if (v.any()) j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
  } else {
    if (inserted)
      std::cout << "notice: universe inserted into closed sets\n";
    std::cout << (v.any() ? "valid: no\n" : "valid: yes\n");
    if (v.universe_missing)
      std::cout << "violation: universe "
                << galois::render_named_set(galois::Subset::mask_of(fam.n), doc.universe)
                << " is not closed\n";
    if (v.missing_intersection)
      std::cout << "violation: missing intersection "
                << galois::render_named_set(v.lhs, doc.universe) << " \xE2\x88\xA9 "
                << galois::render_named_set(v.rhs, doc.universe) << " = "
                << galois::render_named_set(*v.missing_intersection, doc.universe) << "\n";
  }
  return v.any() ? kExitFalse : kExitTrue;
}

int cmd_derive(const std::string& path, const std::string& what, bool strict) {
  LoadedSpace s = load_space(path, strict);
  if (what == "specialization") {
    galois::Qoset q = galois::specialization_order(s.space);
    for (int x = 0; x < q.n; ++x)
      for (int y = 0; y < q.n; ++y)
        if (q.leq(x, y))
          std::cout << s.doc.universe[static_cast<std::size_t>(x)] << " <= "
                    << s.doc.universe[static_cast<std::size_t>(y)] << "\n";
  } else if (what == "lattice") {
    std::cout << galois::lattice_to_dot(galois::closed_set_lattice(s.space), s.doc.universe);
  } else if (what == "table") {
    galois::ClosureTable t = galois::table_from_space(s.space);
    for (std::uint64_t a = 0; a < t.entries.size(); ++a)
      std::cout << galois::render_named_set(a, s.doc.universe) << " -> "
                << galois::render_named_set(t.entries[a], s.doc.universe) << "\n";
  } else {
    throw galois::parse_error("unknown derivation: " + what);
  }
  return kExitTrue;
}

std::string flag_text(const std::optional<bool>& b) {
  if (!b) return "skipped (cap)";
  return *b ? "true" : "false";
}

int cmd_check(const std::string& e_path, const std::string& ep_path,
              const std::string& phi_path, const std::string& psi_path,
              const std::string& method, bool strict, bool as_json) {
  LoadedSpace e = load_space(e_path, strict);
  LoadedSpace ep = load_space(ep_path, strict);
  galois::MapDocument phi_doc = galois::parse_map_document(read_file(phi_path));
  galois::MapDocument psi_doc = galois::parse_map_document(read_file(psi_path));
  galois::PointMap phi = galois::map_from_document(phi_doc, e.doc.universe, ep.doc.universe);
  galois::PointMap psi = galois::map_from_document(psi_doc, ep.doc.universe, e.doc.universe);

  galois::ConnectionVerdict v = galois::verify_theorem(phi, psi, e.space, ep.space);

  bool want_direct = method == "direct" || method == "all";
  bool want_qoset = method == "qoset" || method == "all";
  bool want_induced = method == "induced" || method == "all";
  if (!want_direct && !want_qoset && !want_induced)
    throw galois::parse_error("unknown method: " + method);
  if (method == "direct" && !v.cond_direct)
    throw galois::cap_error("direct check exceeds the size cap; use --method qoset");

  bool all_true = true;
  if (want_direct && v.cond_direct) all_true = all_true && *v.cond_direct;
  if (want_qoset) all_true = all_true && v.cond_qoset_plus_continuity;
  if (want_induced) all_true = all_true && v.cond_induced_on_closed_sets;
  bool consistent = v.consistent();

  if (as_json) {
    nlohmann::ordered_json j;
    if (want_direct) {
      if (v.cond_direct) j["direct"] = *v.cond_direct;
      else j["direct"] = "skipped";
      if (v.witness_direct) j["witness_direct"] = *v.witness_direct;
    }
    if (want_qoset) {
      j["qoset"] = v.cond_qoset_plus_continuity;
      if (v.witness_qoset) j["witness_qoset"] = *v.witness_qoset;
    }
    if (want_induced) {
      j["induced"] = v.cond_induced_on_closed_sets;
      if (v.witness_induced) j["witness_induced"] = *v.witness_induced;
    }
    if (method == "all") j["agreement"] = consistent;
    j["result"] = all_true;
    std::cout << j.dump(2) << "\n";
  } else {
    if (want_direct) {
      std::cout << "direct: " << flag_text(v.cond_direct) << "\n";
      if (v.witness_direct) std::cout << "witness[direct]: " << *v.witness_direct << "\n";
    }
    if (want_qoset) {
      std::cout << "qoset: " << (v.cond_qoset_plus_continuity ? "true" : "false") << "\n";
      if (v.witness_qoset) std::cout << "witness[qoset]: " << *v.witness_qoset << "\n";
    }
    if (want_induced) {
      std::cout << "induced: " << (v.cond_induced_on_closed_sets ? "true" : "false") << "\n";
      if (v.witness_induced) std::cout << "witness[induced]: " << *v.witness_induced << "\n";
    }
    if (method == "all")
      std::cout << "agreement: " << (consistent ? "ok" : "VIOLATED") << "\n";
    std::cout << "result: " << (all_true ? "true" : "false") << "\n";
  }

  if (method == "all" && !consistent) return kExitInternalError;
  return all_true ? kExitTrue : kExitFalse;
}

int cmd_adjoint(const std::string& e_path, const std::string& ep_path,
                const std::string& map_path, const std::string& side, bool strict) {
  LoadedSpace e = load_space(e_path, strict);
  LoadedSpace ep = load_space(ep_path, strict);
  galois::MapDocument map_doc = galois::parse_map_document(read_file(map_path));
  galois::Qoset p = galois::specialization_order(e.space);
  galois::Qoset pp = galois::specialization_order(ep.space);

  std::optional<galois::PointMap> result;
  galois::MapDocument out_doc;
  if (side == "right") {
    galois::PointMap phi = galois::map_from_document(map_doc, e.doc.universe, ep.doc.universe);
    result = galois::right_adjoint(phi, p, pp);
    if (result) {
      if (!galois::is_qoset_galois(phi, *result, p, pp))
        throw galois::validation_error("internal: synthesized adjoint failed verification");
      out_doc = galois::document_from_map(*result, map_doc.to, map_doc.from,
                                          ep.doc.universe, e.doc.universe);
    }
  } else if (side == "left") {
    galois::PointMap psi = galois::map_from_document(map_doc, ep.doc.universe, e.doc.universe);
    result = galois::left_adjoint(psi, p, pp);
    if (result) {
      if (!galois::is_qoset_galois(*result, psi, p, pp))
        throw galois::validation_error("internal: synthesized adjoint failed verification");
      out_doc = galois::document_from_map(*result, map_doc.to, map_doc.from,
                                          e.doc.universe, ep.doc.universe);
    }
  } else {
    throw galois::parse_error("unknown side: " + side);
  }

  if (!result) {
    std::cout << "none\n";
    return kExitFalse;
  }
  std::cout << galois::serialize_map_document(out_doc);
  return kExitTrue;
}

std::string render_map_inline(const galois::PointMap& m,
                              const std::vector<std::string>& from_names,
                              const std::vector<std::string>& to_names) {
  std::string out = "{";
  for (int x = 0; x < m.from_n; ++x) {
    if (x) out += ',';
    out += from_names[static_cast<std::size_t>(x)] + "->" +
           to_names[static_cast<std::size_t>(m(x))];
  }
  return out + "}";
}

int cmd_enumerate(const std::string& kind, int n, bool count_only,
                  const std::vector<std::string>& space_paths, bool strict) {
  if (kind == "families") {
    if (count_only) {
      std::size_t count = 0;
      galois::enumerate_moore_families(n, [&](const galois::MooreFamily&) { ++count; });
      std::cout << count << "\n";
    } else {
      galois::enumerate_moore_families(n, [&](const galois::MooreFamily& f) {
        std::string line;
        for (std::uint64_t s : f.closed) {
          if (!line.empty()) line += ' ';
          line += galois::render_set(s, f.n);
        }
        std::cout << line << "\n";
      });
    }
  } else if (kind == "qosets") {
    if (count_only) {
      std::size_t count = 0;
      galois::enumerate_qosets(n, [&](const galois::Qoset&) { ++count; });
      std::cout << count << "\n";
    } else {
      galois::enumerate_qosets(n, [&](const galois::Qoset& q) {
        std::string line;
        for (int x = 0; x < q.n; ++x)
          for (int y = 0; y < q.n; ++y)
            if (q.leq(x, y)) {
              if (!line.empty()) line += ' ';
              line += std::to_string(x) + "<=" + std::to_string(y);
            }
        std::cout << line << "\n";
      });
    }
  } else if (kind == "connections") {
    if (space_paths.size() != 2)
      throw galois::parse_error("connections enumeration needs two space files");
    LoadedSpace e = load_space(space_paths[0], strict);
    LoadedSpace ep = load_space(space_paths[1], strict);
    auto pairs = galois::enumerate_galois_connections(e.space, ep.space);
    if (count_only) {
      std::cout << pairs.size() << "\n";
    } else {
      for (const auto& [phi, psi] : pairs)
        std::cout << "phi=" << render_map_inline(phi, e.doc.universe, ep.doc.universe)
                  << " psi=" << render_map_inline(psi, ep.doc.universe, e.doc.universe)
                  << "\n";
    }
  } else {
    throw galois::parse_error("unknown kind: " + kind);
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("GALOIS_CAP")) {
    int v = std::atoi(cap);
    if (v > 0) {
      galois::caps().table = v;
      galois::caps().direct = v;
      galois::caps().family = std::max(v, galois::caps().family);
    }
  }

  CLI::App app{"Finite closure spaces, quasiorders, and Galois connections"};
  app.require_subcommand(1);
  app.fallthrough();

  bool strict = false;
  bool as_json = false;
  app.add_flag("--strict", strict, "do not auto-insert the universe into closed sets");
  app.add_flag("--json", as_json, "emit machine-readable verdicts");

  std::string space_path, space2_path, phi_path, psi_path, map_path;
  std::string what = "specialization", method = "all", side = "right", kind;
  int n = 0;
  bool count_only = false;
  std::vector<std::string> enum_spaces;

  auto* validate = app.add_subcommand("validate", "check that a space file is a Moore family");
  validate->add_option("space", space_path, "space JSON file")->required();

  auto* derive = app.add_subcommand("derive", "derive artifacts from a space");
  derive->add_option("space", space_path, "space JSON file")->required();
  derive->add_option("--what", what, "specialization|lattice|table")->required();

  auto* check = app.add_subcommand("check", "verify a closure-space Galois connection");
  check->add_option("space", space_path, "source space file")->required();
  check->add_option("space2", space2_path, "target space file")->required();
  check->add_option("phi", phi_path, "left map file")->required();
  check->add_option("psi", psi_path, "right map file")->required();
  check->add_option("--method", method, "direct|qoset|induced|all");

  auto* adjoint = app.add_subcommand("adjoint", "synthesize the missing adjoint");
  adjoint->add_option("space", space_path, "source space file")->required();
  adjoint->add_option("space2", space2_path, "target space file")->required();
  adjoint->add_option("map", map_path, "map file")->required();
  adjoint->add_option("--side", side, "right|left");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate families, qosets, or connections");
  enumerate->add_option("--kind", kind, "families|qosets|connections")->required();
  enumerate->add_option("-n,--size", n, "universe size for families/qosets");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("spaces", enum_spaces, "space files (connections only)");

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(space_path, strict, as_json);
    if (derive->parsed()) return cmd_derive(space_path, what, strict);
    if (check->parsed())
      return cmd_check(space_path, space2_path, phi_path, psi_path, method, strict, as_json);
    if (adjoint->parsed()) return cmd_adjoint(space_path, space2_path, map_path, side, strict);
    if (enumerate->parsed()) return cmd_enumerate(kind, n, count_only, enum_spaces, strict);
    return kExitInputError;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const galois::validation_error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitFalse;
  } catch (const galois::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
