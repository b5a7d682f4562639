#pragma once

#include <cstdint>
#include <vector>

#include "galois/errors.hpp"
#include "galois/subset.hpp"

namespace galois {

// A reflexive, transitive relation on {0, ..., n-1}. Row x holds the upper
// set of x as a bitmask: bit y of up[x] means x <= y.
struct Qoset {
  int n = 0;
  std::vector<std::uint64_t> up;

  Qoset() = default;
  explicit Qoset(int n_) : n(n_), up(static_cast<std::size_t>(n_)) {
    for (int x = 0; x < n; ++x) up[x] = std::uint64_t{1} << x;
  }
  Qoset(int n_, std::vector<std::uint64_t> rows) : n(n_), up(std::move(rows)) {}

  bool leq(int x, int y) const { return (up[x] >> y) & 1u; }

  // x and y sit in the same equivalence class of the quasiorder.
  bool equivalent(int x, int y) const { return leq(x, y) && leq(y, x); }

  // Lower set of the single point y, as a bitmask.
  std::uint64_t down(int y) const {
    std::uint64_t d = 0;
    for (int x = 0; x < n; ++x)
      if (leq(x, y)) d |= std::uint64_t{1} << x;
    return d;
  }

  friend bool operator==(const Qoset& a, const Qoset& b) = default;
};

// Checks reflexivity and transitivity.
bool is_valid_qoset(const Qoset& q);

// Throws validation_error with the failing pair if q is not a qoset.
void require_qoset(const Qoset& q);

// True iff the relation is additionally antisymmetric.
bool is_poset(const Qoset& q);

// The n-point chain 0 <= 1 <= ... <= n-1. Test and fixture helper.
Qoset chain_qoset(int n);

// Reflexive-transitive closure of an arbitrary relation given as row masks.
Qoset reflexive_transitive_closure(int n, const std::vector<std::uint64_t>& rows);

}  // namespace galois
