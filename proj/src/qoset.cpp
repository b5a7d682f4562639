#include "galois/qoset.hpp"

#include <string>

namespace galois {

std::string render_set(std::uint64_t bits, int n) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1u) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

bool is_valid_qoset(const Qoset& q) {
  if (static_cast<int>(q.up.size()) != q.n) return false;
  std::uint64_t full = Subset::mask_of(q.n);
  for (int x = 0; x < q.n; ++x) {
    if (q.up[x] & ~full) return false;
    if (!q.leq(x, x)) return false;
    for (int y = 0; y < q.n; ++y)
      if (q.leq(x, y) && (q.up[y] & ~q.up[x])) return false;  // x<=y but up[y] !<= up[x]
  }
  return true;
}

void require_qoset(const Qoset& q) {
  if (!is_valid_qoset(q))
    throw validation_error("relation is not reflexive and transitive");
}

bool is_poset(const Qoset& q) {
  for (int x = 0; x < q.n; ++x)
    for (int y = x + 1; y < q.n; ++y)
      if (q.leq(x, y) && q.leq(y, x)) return false;
  return true;
}

Qoset chain_qoset(int n) {
  Qoset q(n);
  for (int x = 0; x < n; ++x)
    q.up[x] = Subset::mask_of(n) & ~(Subset::mask_of(x));
  return q;
}

Qoset reflexive_transitive_closure(int n, const std::vector<std::uint64_t>& rows) {
  Qoset q(n);
  for (int x = 0; x < n; ++x) q.up[x] |= rows[x] & Subset::mask_of(n);
  // Warshall over row masks.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (q.leq(x, k)) q.up[x] |= q.up[k];
  return q;
}

}  // namespace galois
