#include "galois/closure.hpp"

#include <algorithm>
#include <unordered_set>

namespace galois {

MooreFamily::MooreFamily(int n_, std::vector<std::uint64_t> sets)
    : n(n_), closed(std::move(sets)) {
  if (n < 0 || n > kMaxUniverse)
    throw validation_error("universe size out of range: " + std::to_string(n));
  std::uint64_t full = Subset::mask_of(n);
  for (std::uint64_t s : closed)
    if (s & ~full) throw validation_error("family member has bits outside the universe");
  std::sort(closed.begin(), closed.end(), canonical_less);
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
}

bool MooreFamily::member(std::uint64_t s) const {
  auto it = std::lower_bound(closed.begin(), closed.end(), s, canonical_less);
  return it != closed.end() && *it == s;
}

FamilyViolations find_family_violations(const MooreFamily& f) {
  FamilyViolations v;
  v.universe_missing = !f.member(Subset::mask_of(f.n));
  for (std::size_t i = 0; i < f.closed.size() && !v.missing_intersection; ++i)
    for (std::size_t j = i + 1; j < f.closed.size(); ++j) {
      std::uint64_t meet = f.closed[i] & f.closed[j];
      if (!f.member(meet)) {
        v.missing_intersection = meet;
        v.lhs = f.closed[i];
        v.rhs = f.closed[j];
        break;
      }
    }
  return v;
}

bool validate_moore_family(const MooreFamily& f) {
  return !find_family_violations(f).any();
}

ClosureSpace::ClosureSpace(MooreFamily f) : family(std::move(f)) {
  if (!validate_moore_family(family))
    throw validation_error("closed sets do not form a Moore family");
}

std::uint64_t ClosureSpace::closure(std::uint64_t a) const {
  std::uint64_t acc = Subset::mask_of(family.n);
  for (std::uint64_t s : family.closed)
    if ((a & ~s) == 0) acc &= s;
  return acc;
}

static void check_table_shape(const ClosureTable& t) {
  if (t.n < 0 || t.n > caps().table)
    throw cap_error("closure table universe exceeds cap " + std::to_string(caps().table));
  if (t.entries.size() != (std::size_t{1} << t.n))
    throw validation_error("closure table has " + std::to_string(t.entries.size()) +
                           " entries, expected 2^" + std::to_string(t.n));
  std::uint64_t full = Subset::mask_of(t.n);
  for (std::uint64_t e : t.entries)
    if (e & ~full) throw validation_error("closure table entry has bits outside the universe");
}

ValidationReport validate_closure_operator(const ClosureTable& t) {
  check_table_shape(t);
  ValidationReport r;
  r.extensive = r.monotone = r.idempotent = r.combined = true;
  std::uint64_t full = Subset::mask_of(t.n);

  for (std::uint64_t a = 0; a <= full; ++a) {
    std::uint64_t ca = t.entries[a];
    if (r.extensive && (a & ~ca)) {
      r.extensive = false;
      r.extensive_witness = a;
    }
    if (r.idempotent && t.entries[ca] != ca) {
      r.idempotent = false;
      r.idempotent_witness = a;
    }
  }

  // Pairs A <= B via submask enumeration of each B.
  for (std::uint64_t b = 0; b <= full; ++b) {
    std::uint64_t cb = t.entries[b];
    for (std::uint64_t a = b;; a = (a - 1) & b) {
      std::uint64_t ca = t.entries[a];
      if (r.monotone && (ca & ~cb)) {
        r.monotone = false;
        r.monotone_witness = {a, b};
      }
      // compact axiom: A <= [[A]] <= [B]
      std::uint64_t cca = t.entries[ca];
      if (r.combined && ((a & ~cca) || (cca & ~cb))) {
        r.combined = false;
        r.combined_witness = {a, b};
      }
      if (a == 0) break;
    }
  }
  return r;
}

MooreFamily moore_family_from_table(const ClosureTable& t) {
  ValidationReport r = validate_closure_operator(t);
  if (!r.all())
    throw validation_error("table is not a closure operator");
  std::vector<std::uint64_t> fixed;
  for (std::uint64_t a = 0; a < t.entries.size(); ++a)
    if (t.entries[a] == a) fixed.push_back(a);
  return MooreFamily(t.n, std::move(fixed));
}

ClosureTable table_from_space(const ClosureSpace& s) {
  int n = s.n();
  if (n > caps().table)
    throw cap_error("table construction capped at n <= " + std::to_string(caps().table));
  std::vector<std::uint64_t> entries(std::size_t{1} << n);
  for (std::uint64_t a = 0; a < entries.size(); ++a) entries[a] = s.closure(a);
  return ClosureTable(n, std::move(entries));
}

Qoset specialization_order(const ClosureSpace& s) {
  int n = s.n();
  Qoset q(n);
  for (int y = 0; y < n; ++y) {
    std::uint64_t cy = s.closure(std::uint64_t{1} << y);
    for (int x = 0; x < n; ++x)
      if ((cy >> x) & 1u) q.up[x] |= std::uint64_t{1} << y;
  }
  return q;
}

ClosureSpace alexandrov_closure(const Qoset& q) {
  require_qoset(q);
  if (q.n > caps().family)
    throw cap_error("lower-set enumeration capped at n <= " + std::to_string(caps().family));
  std::vector<std::uint64_t> down(static_cast<std::size_t>(q.n));
  for (int y = 0; y < q.n; ++y) down[static_cast<std::size_t>(y)] = q.down(y);

  std::vector<std::uint64_t> lower_sets;
  std::uint64_t full = Subset::mask_of(q.n);
  for (std::uint64_t a = 0;; ++a) {
    std::uint64_t da = 0;
    for (int y = 0; y < q.n; ++y)
      if ((a >> y) & 1u) da |= down[static_cast<std::size_t>(y)];
    if (da == a) lower_sets.push_back(a);
    if (a == full) break;
  }
  return ClosureSpace(MooreFamily(q.n, std::move(lower_sets)));
}

bool is_alexandrov(const ClosureSpace& s) {
  const auto& fam = s.family;
  if (!fam.member(0)) return false;
  for (std::size_t i = 0; i < fam.closed.size(); ++i)
    for (std::size_t j = i + 1; j < fam.closed.size(); ++j)
      if (!fam.member(fam.closed[i] | fam.closed[j])) return false;
  return true;
}

int ClosedSetPoset::index_of(std::uint64_t s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s, canonical_less);
  if (it == elements.end() || *it != s)
    throw validation_error("set is not a member of the lattice");
  return static_cast<int>(it - elements.begin());
}

ClosedSetPoset closed_set_lattice(const ClosureSpace& s) {
  ClosedSetPoset p;
  p.space = s;
  p.elements = s.family.closed;
  int m = static_cast<int>(p.elements.size());
  // Covers: i strictly below j with nothing strictly between.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !p.leq(i, j) || p.elements[i] == p.elements[j]) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k) {
        if (k == i || k == j) continue;
        if (p.leq(i, k) && p.leq(k, j) && p.elements[k] != p.elements[i] &&
            p.elements[k] != p.elements[j])
          cover = false;
      }
      if (cover) p.hasse.emplace_back(i, j);
    }
  return p;
}

MooreFamily intersection_closure(int n, std::vector<std::uint64_t> generators) {
  std::unordered_set<std::uint64_t> members;
  members.insert(Subset::mask_of(n));
  std::vector<std::uint64_t> work(members.begin(), members.end());
  for (std::uint64_t g : generators) {
    if (members.insert(g).second) work.push_back(g);
  }
  // Close under pairwise meets until fixpoint.
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t meet = work[i] & work[j];
      if (members.insert(meet).second) work.push_back(meet);
    }
  return MooreFamily(n, std::move(work));
}

}  // namespace galois
