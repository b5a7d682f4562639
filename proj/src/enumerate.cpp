#include "galois/enumerate.hpp"

#include "galois/rng.hpp"

namespace galois {

std::uint64_t map_count(int from_n, int to_n) {
  if (from_n == 0) return 1;  // the empty map
  if (to_n == 0) return 0;
  std::uint64_t count = 1;
  for (int i = 0; i < from_n; ++i) count *= static_cast<std::uint64_t>(to_n);
  return count;
}

std::vector<PointMap> enumerate_maps(int from_n, int to_n) {
  std::vector<PointMap> out;
  if (map_count(from_n, to_n) == 0) return out;
  std::vector<int> image(static_cast<std::size_t>(from_n), 0);
  for (;;) {
    out.emplace_back(from_n, to_n, image);
    int i = from_n - 1;
    while (i >= 0 && image[static_cast<std::size_t>(i)] == to_n - 1) {
      image[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++image[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

// Backtracks over subset values in increasing numeric order. Intersections
// only ever produce numerically smaller masks, so a candidate may join the
// family exactly when its meet with every present member is already present.
void families_rec(int n, std::uint64_t next, std::vector<std::uint64_t>& current,
                  const std::function<void(const MooreFamily&)>& yield) {
  std::uint64_t universe = Subset::mask_of(n);
  if (next == universe) {
    current.push_back(universe);
    yield(MooreFamily(n, current));
    current.pop_back();
    return;
  }
  families_rec(n, next + 1, current, yield);  // exclude `next`
  bool admissible = true;
  for (std::uint64_t m : current)
    if ((next & m) != next) {
      bool present = false;
      for (std::uint64_t c : current)
        if (c == (next & m)) present = true;
      if (!present) {
        admissible = false;
        break;
      }
    }
  if (admissible) {
    current.push_back(next);
    families_rec(n, next + 1, current, yield);
    current.pop_back();
  }
}

}  // namespace

void enumerate_moore_families(int n, const std::function<void(const MooreFamily&)>& yield) {
  if (n < 0 || n > kExhaustiveFamilyCap)
    throw cap_error("exhaustive family enumeration capped at n <= " +
                    std::to_string(kExhaustiveFamilyCap));
  std::vector<std::uint64_t> current;
  families_rec(n, 0, current, yield);
}

std::vector<MooreFamily> enumerate_moore_families(int n) {
  std::vector<MooreFamily> out;
  enumerate_moore_families(n, [&](const MooreFamily& f) { out.push_back(f); });
  return out;
}

void enumerate_qosets(int n, const std::function<void(const Qoset&)>& yield) {
  if (n < 0 || n > kExhaustiveFamilyCap)
    throw cap_error("exhaustive qoset enumeration capped at n <= " +
                    std::to_string(kExhaustiveFamilyCap));
  // All settings of the n(n-1) off-diagonal bits, filtered by transitivity.
  int off = n * (n - 1);
  std::uint64_t total = std::uint64_t{1} << off;
  for (std::uint64_t code = 0; code < total; ++code) {
    Qoset q(n);
    int bit = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        if ((code >> bit) & 1u) q.up[x] |= std::uint64_t{1} << y;
        ++bit;
      }
    if (is_valid_qoset(q)) yield(q);
  }
}

std::vector<Qoset> enumerate_qosets(int n) {
  std::vector<Qoset> out;
  enumerate_qosets(n, [&](const Qoset& q) { out.push_back(q); });
  return out;
}

std::vector<std::pair<PointMap, PointMap>> enumerate_galois_connections(
    const ClosureSpace& e, const ClosureSpace& e_prime) {
  std::uint64_t pairs = map_count(e.n(), e_prime.n()) * map_count(e_prime.n(), e.n());
  if (map_count(e.n(), e_prime.n()) == 0 || map_count(e_prime.n(), e.n()) == 0)
    return {};
  if (pairs > kMapPairBudget)
    throw budget_error("connection search over " + std::to_string(pairs) +
                       " map pairs exceeds the budget");

  Qoset q = specialization_order(e);
  Qoset qp = specialization_order(e_prime);
  std::vector<std::pair<PointMap, PointMap>> out;
  for (const PointMap& phi : enumerate_maps(e.n(), e_prime.n()))
    for (const PointMap& psi : enumerate_maps(e_prime.n(), e.n())) {
      if (!is_qoset_galois(phi, psi, q, qp)) continue;
      if (!is_continuous(phi, e, e_prime) || !is_continuous(psi, e_prime, e)) continue;
      out.emplace_back(phi, psi);
    }
  return out;
}

void generate_spaces(const GeneratorConfig& cfg,
                     const std::function<void(const ClosureSpace&)>& yield) {
  if (cfg.mode == GeneratorConfig::Mode::exhaustive) {
    enumerate_moore_families(cfg.n, [&](const MooreFamily& f) { yield(ClosureSpace(f)); });
    return;
  }
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i)
    yield(random_closure_space(cfg.n, cfg.seed + i));
}

void generate_qosets(const GeneratorConfig& cfg,
                     const std::function<void(const Qoset&)>& yield) {
  if (cfg.mode == GeneratorConfig::Mode::exhaustive) {
    enumerate_qosets(cfg.n, yield);
    return;
  }
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i)
    yield(random_qoset(cfg.n, cfg.seed + i));
}

void generate_map_pairs(const GeneratorConfig& cfg,
                        const std::function<void(const PointMap&, const PointMap&)>& yield) {
  if (cfg.mode == GeneratorConfig::Mode::exhaustive) {
    std::uint64_t pairs = map_count(cfg.n, cfg.n_prime) * map_count(cfg.n_prime, cfg.n);
    if (pairs > kMapPairBudget)
      throw budget_error("map-pair generation over " + std::to_string(pairs) +
                         " pairs exceeds the budget");
    for (const PointMap& phi : enumerate_maps(cfg.n, cfg.n_prime))
      for (const PointMap& psi : enumerate_maps(cfg.n_prime, cfg.n)) yield(phi, psi);
    return;
  }
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i)
    yield(random_map(cfg.n, cfg.n_prime, cfg.seed + 2 * i),
          random_map(cfg.n_prime, cfg.n, cfg.seed + 2 * i + 1));
}

ClosureSpace random_closure_space(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::uint64_t full = Subset::mask_of(n);
  std::vector<std::uint64_t> generators;
  int k = 2 * n + 2;
  for (int i = 0; i < k; ++i) generators.push_back(rng.next() & full);
  return ClosureSpace(intersection_closure(n, std::move(generators)));
}

Qoset random_qoset(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rng.below(3) == 0) rows[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
  return reflexive_transitive_closure(n, rows);
}

PointMap random_map(int n, int n_prime, std::uint64_t seed) {
  if (n > 0 && n_prime == 0)
    throw arity_error("no total map into an empty universe");
  SplitMix64 rng(seed);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    image[static_cast<std::size_t>(x)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_prime)));
  return PointMap(n, n_prime, std::move(image));
}

}  // namespace galois
