#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galois/closure.hpp"
#include "galois/point_map.hpp"

namespace galois {

// A parse failure in a space or map document. Distinct from validation_error
// so the CLI can map it to its own exit code.
class parse_error : public error {
public:
  explicit parse_error(const std::string& what) : error(what) {}
};

// On-disk form of a closure space: named universe plus its closed sets.
// Element order in `universe` defines bit indices.
struct SpaceDocument {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> closed;
};

// On-disk form of a point map between two named universes.
struct MapDocument {
  std::string from;
  std::string to;
  std::vector<std::pair<std::string, std::string>> pairs;
};

// Strict JSON parsing: exactly the documented fields, distinct names, every
// listed element in the universe. Throws parse_error.
SpaceDocument parse_space_document(const std::string& json_text);
MapDocument parse_map_document(const std::string& json_text);

// Canonical serialization: closed sets sorted (popcount, then bit value),
// element names within each set in universe order, map pairs in source
// universe order. Parsing then serializing is idempotent.
std::string serialize_space_document(const SpaceDocument& doc);
std::string serialize_map_document(const MapDocument& doc);

// Interprets a document as a Moore family over its universe. When
// auto_insert_universe is set (the default everywhere but --strict), a
// missing universe set is added and *notice* is set.
MooreFamily family_from_document(const SpaceDocument& doc, bool auto_insert_universe,
                                 bool* notice = nullptr);

// Lowers a map document onto two universes; checks totality and that every
// target name exists. Throws parse_error.
PointMap map_from_document(const MapDocument& doc,
                           const std::vector<std::string>& from_universe,
                           const std::vector<std::string>& to_universe);

// Rebuilds documents from core values, using the given names.
SpaceDocument document_from_family(const MooreFamily& f,
                                   const std::vector<std::string>& universe);
MapDocument document_from_map(const PointMap& m, const std::string& from,
                              const std::string& to,
                              const std::vector<std::string>& from_universe,
                              const std::vector<std::string>& to_universe);

// Hasse diagram of the closed-set lattice as a Graphviz digraph, edges from
// lower to upper cover.
std::string lattice_to_dot(const ClosedSetPoset& poset,
                           const std::vector<std::string>& universe);

// "{a,c}" under the given naming.
std::string render_named_set(std::uint64_t bits, const std::vector<std::string>& universe);

}  // namespace galois
