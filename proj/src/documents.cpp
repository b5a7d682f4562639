#include "galois/documents.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace galois {

using ordered_json = nlohmann::ordered_json;

std::string render_named_set(std::uint64_t bits, const std::vector<std::string>& universe) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if ((bits >> i) & 1u) {
      if (!first) out += ',';
      out += universe[i];
      first = false;
    }
  }
  out += '}';
  return out;
}

namespace {

void reject_unknown_fields(const ordered_json& j, const std::set<std::string>& allowed,
                           const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw parse_error(std::string(what) + ": unknown field \"" + it.key() + "\"");
  for (const auto& field : allowed)
    if (!j.contains(field))
      throw parse_error(std::string(what) + ": missing field \"" + field + "\"");
}

ordered_json parse_json(const std::string& text, const char* what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw parse_error(std::string(what) + ": malformed JSON");
  if (!j.is_object())
    throw parse_error(std::string(what) + ": expected a JSON object");
  return j;
}

std::vector<std::string> string_array(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + ": expected an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw parse_error(std::string(what) + ": expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::map<std::string, int> index_universe(const std::vector<std::string>& universe,
                                          const char* what) {
  if (universe.size() > static_cast<std::size_t>(kMaxUniverse))
    throw parse_error(std::string(what) + ": universe too large");
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (!idx.emplace(universe[i], static_cast<int>(i)).second)
      throw parse_error(std::string(what) + ": duplicate element \"" + universe[i] + "\"");
  return idx;
}

}  // namespace

SpaceDocument parse_space_document(const std::string& json_text) {
  ordered_json j = parse_json(json_text, "space document");
  reject_unknown_fields(j, {"universe", "closed"}, "space document");
  SpaceDocument doc;
  doc.universe = string_array(j["universe"], "space document universe");
  auto idx = index_universe(doc.universe, "space document");
  if (!j["closed"].is_array())
    throw parse_error("space document: \"closed\" must be an array of arrays");
  for (const auto& set : j["closed"]) {
    auto names = string_array(set, "space document closed set");
    for (const auto& name : names)
      if (!idx.count(name))
        throw parse_error("space document: element \"" + name + "\" not in universe");
    doc.closed.push_back(std::move(names));
  }
  return doc;
}

MapDocument parse_map_document(const std::string& json_text) {
  ordered_json j = parse_json(json_text, "map document");
  reject_unknown_fields(j, {"from", "to", "pairs"}, "map document");
  MapDocument doc;
  if (!j["from"].is_string() || !j["to"].is_string())
    throw parse_error("map document: \"from\" and \"to\" must be strings");
  doc.from = j["from"].get<std::string>();
  doc.to = j["to"].get<std::string>();
  if (!j["pairs"].is_object())
    throw parse_error("map document: \"pairs\" must be an object");
  for (auto it = j["pairs"].begin(); it != j["pairs"].end(); ++it) {
    if (!it.value().is_string())
      throw parse_error("map document: pair targets must be strings");
    doc.pairs.emplace_back(it.key(), it.value().get<std::string>());
  }
  return doc;
}

MooreFamily family_from_document(const SpaceDocument& doc, bool auto_insert_universe,
                                 bool* notice) {
  auto idx = index_universe(doc.universe, "space document");
  int n = static_cast<int>(doc.universe.size());
  std::vector<std::uint64_t> sets;
  bool universe_listed = false;
  std::uint64_t full = Subset::mask_of(n);
  for (const auto& names : doc.closed) {
    std::uint64_t mask = 0;
    for (const auto& name : names) mask |= std::uint64_t{1} << idx.at(name);
    if (mask == full) universe_listed = true;
    sets.push_back(mask);
  }
  if (notice) *notice = false;
  if (!universe_listed && auto_insert_universe) {
    sets.push_back(full);
    if (notice) *notice = true;
  }
  return MooreFamily(n, std::move(sets));
}

PointMap map_from_document(const MapDocument& doc,
                           const std::vector<std::string>& from_universe,
                           const std::vector<std::string>& to_universe) {
  auto from_idx = index_universe(from_universe, "map source");
  auto to_idx = index_universe(to_universe, "map target");
  std::vector<int> image(from_universe.size(), -1);
  for (const auto& [src, dst] : doc.pairs) {
    auto fi = from_idx.find(src);
    if (fi == from_idx.end())
      throw parse_error("map document: source \"" + src + "\" not in source universe");
    auto ti = to_idx.find(dst);
    if (ti == to_idx.end())
      throw parse_error("map document: target \"" + dst + "\" not in target universe");
    if (image[static_cast<std::size_t>(fi->second)] != -1)
      throw parse_error("map document: duplicate assignment for \"" + src + "\"");
    image[static_cast<std::size_t>(fi->second)] = ti->second;
  }
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] == -1)
      throw parse_error("map document: no assignment for \"" + from_universe[i] + "\"");
  return PointMap(static_cast<int>(from_universe.size()),
                  static_cast<int>(to_universe.size()), std::move(image));
}

SpaceDocument document_from_family(const MooreFamily& f,
                                   const std::vector<std::string>& universe) {
  SpaceDocument doc;
  doc.universe = universe;
  for (std::uint64_t s : f.closed) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if ((s >> i) & 1u) names.push_back(universe[i]);
    doc.closed.push_back(std::move(names));
  }
  return doc;
}

MapDocument document_from_map(const PointMap& m, const std::string& from,
                              const std::string& to,
                              const std::vector<std::string>& from_universe,
                              const std::vector<std::string>& to_universe) {
  MapDocument doc;
  doc.from = from;
  doc.to = to;
  for (int x = 0; x < m.from_n; ++x)
    doc.pairs.emplace_back(from_universe[static_cast<std::size_t>(x)],
                           to_universe[static_cast<std::size_t>(m(x))]);
  return doc;
}

std::string serialize_space_document(const SpaceDocument& doc) {
  // Canonical form: re-encode through the family so closed sets come out
  // sorted and named in universe order.
  MooreFamily f = family_from_document(doc, /*auto_insert_universe=*/false);
  SpaceDocument canon = document_from_family(f, doc.universe);
  ordered_json j;
  j["universe"] = canon.universe;
  j["closed"] = canon.closed;
  return j.dump(2) + "\n";
}

std::string serialize_map_document(const MapDocument& doc) {
  ordered_json pairs = ordered_json::object();
  for (const auto& [src, dst] : doc.pairs) pairs[src] = dst;
  ordered_json j;
  j["from"] = doc.from;
  j["to"] = doc.to;
  j["pairs"] = pairs;
  return j.dump(2) + "\n";
}

std::string lattice_to_dot(const ClosedSetPoset& poset,
                           const std::vector<std::string>& universe) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" +
           render_named_set(poset.elements[i], universe) + "\"];\n";
  for (const auto& [lo, hi] : poset.hasse)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace galois
