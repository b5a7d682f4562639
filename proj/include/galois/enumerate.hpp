#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "galois/closure.hpp"
#include "galois/connections.hpp"
#include "galois/point_map.hpp"
#include "galois/qoset.hpp"

namespace galois {

inline constexpr int kExhaustiveFamilyCap = 4;  // family / qoset enumeration
inline constexpr std::uint64_t kMapPairBudget = 1u << 22;

struct GeneratorConfig {
  enum class Mode { exhaustive, sampled };
  int n = 0;
  int n_prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample_count = 1;
  Mode mode = Mode::exhaustive;
};

// Streams driven by a config: exhaustive enumeration (cap-checked) or
// seed-deterministic sampling of sample_count values.
void generate_spaces(const GeneratorConfig& cfg,
                     const std::function<void(const ClosureSpace&)>& yield);
void generate_qosets(const GeneratorConfig& cfg,
                     const std::function<void(const Qoset&)>& yield);
void generate_map_pairs(const GeneratorConfig& cfg,
                        const std::function<void(const PointMap&, const PointMap&)>& yield);

// Number of total maps from an m-point to a k-point universe (k^m, with the
// empty map counted once).
std::uint64_t map_count(int from_n, int to_n);

// All total maps in lexicographic image order.
std::vector<PointMap> enumerate_maps(int from_n, int to_n);

// Every Moore family over n exactly once, by backtracking over subsets in
// increasing numeric order while keeping the partial family
// intersection-closed. Throws cap_error for n > kExhaustiveFamilyCap.
void enumerate_moore_families(int n, const std::function<void(const MooreFamily&)>& yield);
std::vector<MooreFamily> enumerate_moore_families(int n);

// Every reflexive-transitive relation over n. Throws cap_error for
// n > kExhaustiveFamilyCap.
void enumerate_qosets(int n, const std::function<void(const Qoset&)>& yield);
std::vector<Qoset> enumerate_qosets(int n);

// All map pairs (phi, psi) forming a Galois connection between the two
// spaces, in lexicographic map order. Throws budget_error when the
// n'^n * n^n' search exceeds kMapPairBudget.
std::vector<std::pair<PointMap, PointMap>> enumerate_galois_connections(
    const ClosureSpace& e, const ClosureSpace& e_prime);

// Seed-deterministic generators; every output satisfies its type's
// invariants by construction.
ClosureSpace random_closure_space(int n, std::uint64_t seed);
Qoset random_qoset(int n, std::uint64_t seed);
PointMap random_map(int n, int n_prime, std::uint64_t seed);

}  // namespace galois
