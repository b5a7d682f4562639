#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "galois/errors.hpp"

namespace galois {

// Largest universe any operation accepts. Everything in this project fits in
// one machine word; family-level caps are far below this anyway.
inline constexpr int kMaxUniverse = 64;

// A subset of the indexed universe {0, ..., n-1}, packed into one word.
// Immutable value type; all set operations are single bitwise instructions.
struct Subset {
  std::uint64_t bits = 0;
  int n = 0;

  Subset() = default;
  Subset(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {
    if (n_ < 0 || n_ > kMaxUniverse)
      throw validation_error("universe size out of range: " + std::to_string(n_));
    if (bits_ & ~mask_of(n_))
      throw validation_error("subset has bits outside the universe");
  }

  static std::uint64_t mask_of(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  static Subset empty(int n) { return Subset(0, n); }
  static Subset universe(int n) { return Subset(mask_of(n), n); }
  static Subset singleton(int i, int n) { return Subset(std::uint64_t{1} << i, n); }

  bool contains(int i) const { return (bits >> i) & 1u; }
  bool subset_of(const Subset& o) const { return (bits & ~o.bits) == 0; }
  bool is_universe() const { return bits == mask_of(n); }
  int count() const { return std::popcount(bits); }

  friend Subset operator&(const Subset& a, const Subset& b) { return Subset(a.bits & b.bits, a.n); }
  friend Subset operator|(const Subset& a, const Subset& b) { return Subset(a.bits | b.bits, a.n); }
  friend bool operator==(const Subset& a, const Subset& b) = default;
};

// Renders a bitmask as "{0,2,3}"; independent of any element naming.
std::string render_set(std::uint64_t bits, int n);

inline std::string render_set(const Subset& s) { return render_set(s.bits, s.n); }

// Canonical order on closed sets: popcount first, then numeric bit value.
inline bool canonical_less(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace galois
