#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois/caps.hpp"
#include "galois/errors.hpp"
#include "galois/qoset.hpp"
#include "galois/subset.hpp"

namespace galois {

// A collection of subsets, stored deduplicated in canonical order
// (popcount, then numeric bit value). Construction canonicalizes but does
// not validate; see validate_moore_family.
struct MooreFamily {
  int n = 0;
  std::vector<std::uint64_t> closed;

  MooreFamily() = default;
  MooreFamily(int n_, std::vector<std::uint64_t> sets);

  bool member(std::uint64_t s) const;
  std::size_t size() const { return closed.size(); }

  friend bool operator==(const MooreFamily& a, const MooreFamily& b) = default;
};

// True iff the universe is a member and the family is stable under pairwise
// intersection. The empty set is not required.
bool validate_moore_family(const MooreFamily& f);

// As above, but reports every violated requirement, with one witness for the
// stability failure (the first missing pairwise meet in canonical scan order).
struct FamilyViolations {
  bool universe_missing = false;
  std::optional<std::uint64_t> missing_intersection;
  std::uint64_t lhs = 0, rhs = 0;  // the pair whose meet is absent

  bool any() const { return universe_missing || missing_intersection.has_value(); }
};
FamilyViolations find_family_violations(const MooreFamily& f);

// A closure space presented by its Moore family. The constructor validates.
struct ClosureSpace {
  MooreFamily family;

  ClosureSpace() : family(0, {0}) {}
  explicit ClosureSpace(MooreFamily f);

  int n() const { return family.n; }

  // Smallest member of the family containing a: intersection of all closed
  // supersets. Always defined since the universe is a member.
  std::uint64_t closure(std::uint64_t a) const;
  Subset closure(const Subset& a) const {
    return Subset(closure(a.bits), family.n);
  }

  friend bool operator==(const ClosureSpace& a, const ClosureSpace& b) = default;
};

// Extensional form of a closure operator: entry A holds [A] for every mask A.
struct ClosureTable {
  int n = 0;
  std::vector<std::uint64_t> entries;

  ClosureTable() = default;
  ClosureTable(int n_, std::vector<std::uint64_t> entries_)
      : n(n_), entries(std::move(entries_)) {}

  friend bool operator==(const ClosureTable& a, const ClosureTable& b) = default;
};

// Per-axiom verdicts with one witness per violated axiom.
struct ValidationReport {
  bool extensive = false;
  bool monotone = false;
  bool idempotent = false;
  // Direct check of A <= [[A]] <= [B] over all pairs A <= B; equals the
  // conjunction of the three axioms above.
  bool combined = false;

  std::optional<std::uint64_t> extensive_witness;                   // A with A !<= [A]
  std::optional<std::pair<std::uint64_t, std::uint64_t>> monotone_witness;  // A <= B, [A] !<= [B]
  std::optional<std::uint64_t> idempotent_witness;                  // A with [[A]] != [A]
  std::optional<std::pair<std::uint64_t, std::uint64_t>> combined_witness;

  bool all() const { return extensive && monotone && idempotent; }
};

// Checks the three closure axioms independently plus the compact axiom.
// Throws validation_error on a malformed table (entry count or stray bits).
ValidationReport validate_closure_operator(const ClosureTable& t);

// Fixed points of a valid table. Throws validation_error if the table fails
// validate_closure_operator.
MooreFamily moore_family_from_table(const ClosureTable& t);

// Tabulates the closure of every subset. Cap-guarded: throws cap_error for
// n > caps().table.
ClosureTable table_from_space(const ClosureSpace& s);

// Specialization quasiorder: x <= y iff x is in the closure of {y}.
Qoset specialization_order(const ClosureSpace& s);

// Alexandrov space of a qoset: closed sets are exactly the lower sets.
// Throws validation_error on a non-qoset, cap_error for n > caps().family.
ClosureSpace alexandrov_closure(const Qoset& q);

// True iff the family is exactly the set of lower sets of its own
// specialization order (equivalently: contains the empty set and is stable
// under union).
bool is_alexandrov(const ClosureSpace& s);

// The lattice of closed sets under inclusion, with its Hasse diagram.
struct ClosedSetPoset {
  ClosureSpace space;
  std::vector<std::uint64_t> elements;           // canonical order
  std::vector<std::pair<int, int>> hasse;        // (lower index, upper index)

  bool leq(int i, int j) const {
    return (elements[i] & ~elements[j]) == 0;
  }
  int index_of(std::uint64_t s) const;
  // Meet is plain intersection, join is the closure of the union; both land
  // in the family.
  int meet(int i, int j) const { return index_of(elements[i] & elements[j]); }
  int join(int i, int j) const {
    return index_of(space.closure(elements[i] | elements[j]));
  }
};

ClosedSetPoset closed_set_lattice(const ClosureSpace& s);

// Closes an arbitrary generating collection under pairwise intersection and
// adds the universe. Always yields a valid Moore family.
MooreFamily intersection_closure(int n, std::vector<std::uint64_t> generators);

}  // namespace galois
