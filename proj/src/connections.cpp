#include "galois/connections.hpp"

namespace galois {

namespace {

// Subset-sweep continuity is only cross-checked when the source powerset is
// this small; beyond that the preimage criterion stands alone.
constexpr int kContinuityCrossCheckCap = 10;

void check_map_arity(const PointMap& f, int src_n, int dst_n, const char* what) {
  if (f.from_n != src_n || f.to_n != dst_n)
    throw arity_error(std::string(what) + ": map arity (" + std::to_string(f.from_n) +
                      " -> " + std::to_string(f.to_n) + ") does not match spaces (" +
                      std::to_string(src_n) + " -> " + std::to_string(dst_n) + ")");
}

bool continuous_preimage(const PointMap& f, const ClosureSpace& src,
                         const ClosureSpace& dst) {
  for (std::uint64_t closed : dst.family.closed)
    if (!src.family.member(f.preimage(closed))) return false;
  return true;
}

}  // namespace

bool is_continuous_exhaustive(const PointMap& f, const ClosureSpace& src,
                              const ClosureSpace& dst) {
  check_map_arity(f, src.n(), dst.n(), "is_continuous");
  std::uint64_t full = Subset::mask_of(src.n());
  for (std::uint64_t a = 0;; ++a) {
    std::uint64_t lhs = f.forward(src.closure(a));
    std::uint64_t rhs = dst.closure(f.forward(a));
    if (lhs & ~rhs) return false;
    if (a == full) break;
  }
  return true;
}

bool is_continuous(const PointMap& f, const ClosureSpace& src, const ClosureSpace& dst) {
  check_map_arity(f, src.n(), dst.n(), "is_continuous");
  bool result = continuous_preimage(f, src, dst);
  if (src.n() <= kContinuityCrossCheckCap &&
      result != is_continuous_exhaustive(f, src, dst))
    throw validation_error("internal: continuity criteria disagree");
  return result;
}

bool is_qoset_galois(const PointMap& phi, const PointMap& psi, const Qoset& p,
                     const Qoset& p_prime) {
  check_map_arity(phi, p.n, p_prime.n, "is_qoset_galois(phi)");
  check_map_arity(psi, p_prime.n, p.n, "is_qoset_galois(psi)");
  for (int x = 0; x < p.n; ++x)
    for (int xp = 0; xp < p_prime.n; ++xp)
      if (p_prime.leq(phi(x), xp) != p.leq(x, psi(xp))) return false;
  return true;
}

bool is_closure_galois_direct(const PointMap& phi, const PointMap& psi,
                              const ClosureSpace& e, const ClosureSpace& e_prime) {
  check_map_arity(phi, e.n(), e_prime.n(), "is_closure_galois_direct(phi)");
  check_map_arity(psi, e_prime.n(), e.n(), "is_closure_galois_direct(psi)");
  if (e_prime.n() > caps().direct)
    throw cap_error("direct check sweeps 2^" + std::to_string(e_prime.n()) +
                    " subsets, over the cap; use the qoset-based check");
  std::uint64_t full = Subset::mask_of(e_prime.n());
  for (std::uint64_t a = 0;; ++a) {
    if (phi.preimage(e_prime.closure(a)) != e.closure(psi.forward(a))) return false;
    if (a == full) break;
  }
  return true;
}

bool is_closure_galois_via_qoset(const PointMap& phi, const PointMap& psi,
                                 const ClosureSpace& e, const ClosureSpace& e_prime) {
  check_map_arity(phi, e.n(), e_prime.n(), "is_closure_galois_via_qoset(phi)");
  check_map_arity(psi, e_prime.n(), e.n(), "is_closure_galois_via_qoset(psi)");
  if (!is_continuous(phi, e, e_prime)) return false;
  if (!is_continuous(psi, e_prime, e)) return false;
  return is_qoset_galois(phi, psi, specialization_order(e), specialization_order(e_prime));
}

bool induced_preimage_connection(const PointMap& phi, const PointMap& psi,
                                 const ClosureSpace& e, const ClosureSpace& e_prime) {
  check_map_arity(phi, e.n(), e_prime.n(), "induced_preimage_connection(phi)");
  check_map_arity(psi, e_prime.n(), e.n(), "induced_preimage_connection(psi)");
  if (!is_continuous(phi, e, e_prime)) return false;
  if (!is_continuous(psi, e_prime, e)) return false;
  for (std::uint64_t f : e.family.closed)
    for (std::uint64_t fp : e_prime.family.closed) {
      bool lhs = (phi.preimage(fp) & ~f) == 0;
      bool rhs = (fp & ~psi.preimage(f)) == 0;
      if (lhs != rhs) return false;
    }
  return true;
}

ConnectionVerdict verify_theorem(const PointMap& phi, const PointMap& psi,
                                 const ClosureSpace& e, const ClosureSpace& e_prime) {
  ConnectionVerdict v;

  if (e_prime.n() <= caps().direct) {
    bool ok = true;
    std::uint64_t full = Subset::mask_of(e_prime.n());
    for (std::uint64_t a = 0;; ++a) {
      std::uint64_t lhs = phi.preimage(e_prime.closure(a));
      std::uint64_t rhs = e.closure(psi.forward(a));
      if (lhs != rhs) {
        ok = false;
        v.witness_direct = "A'=" + render_set(a, e_prime.n()) +
                           ": phi^-1([A'])=" + render_set(lhs, e.n()) +
                           " but [psi(A')]=" + render_set(rhs, e.n());
        break;
      }
      if (a == full) break;
    }
    v.cond_direct = ok;
  }

  {
    bool ok = true;
    if (!is_continuous(phi, e, e_prime)) {
      ok = false;
      v.witness_qoset = "phi is not continuous";
    } else if (!is_continuous(psi, e_prime, e)) {
      ok = false;
      v.witness_qoset = "psi is not continuous";
    } else {
      Qoset q = specialization_order(e);
      Qoset qp = specialization_order(e_prime);
      for (int x = 0; x < q.n && ok; ++x)
        for (int xp = 0; xp < qp.n && ok; ++xp)
          if (qp.leq(phi(x), xp) != q.leq(x, psi(xp))) {
            ok = false;
            v.witness_qoset = "x=" + std::to_string(x) + ", x'=" + std::to_string(xp) +
                              ": phi(x)<=x' is " +
                              (qp.leq(phi(x), xp) ? "true" : "false") +
                              " but x<=psi(x') is " +
                              (q.leq(x, psi(xp)) ? "true" : "false");
          }
    }
    v.cond_qoset_plus_continuity = ok;
  }

  {
    bool ok = true;
    if (!is_continuous(phi, e, e_prime)) {
      ok = false;
      v.witness_induced = "phi is not continuous";
    } else if (!is_continuous(psi, e_prime, e)) {
      ok = false;
      v.witness_induced = "psi is not continuous";
    } else {
      for (std::uint64_t f : e.family.closed) {
        for (std::uint64_t fp : e_prime.family.closed) {
          bool lhs = (phi.preimage(fp) & ~f) == 0;
          bool rhs = (fp & ~psi.preimage(f)) == 0;
          if (lhs != rhs) {
            ok = false;
            v.witness_induced = "F=" + render_set(f, e.n()) + ", F'=" +
                                render_set(fp, e_prime.n()) +
                                ": phi^-1(F')<=F is " + (lhs ? "true" : "false") +
                                " but F'<=psi^-1(F) is " + (rhs ? "true" : "false");
            break;
          }
        }
        if (!ok) break;
      }
    }
    v.cond_induced_on_closed_sets = ok;
  }

  return v;
}

AdjointProperties adjoint_properties_report(const PointMap& phi, const PointMap& psi,
                                            const Qoset& p, const Qoset& p_prime) {
  if (!is_qoset_galois(phi, psi, p, p_prime))
    throw validation_error("(phi, psi) is not a Galois connection between the qosets");

  AdjointProperties r;

  r.order_preserving = true;
  for (int x = 0; x < p.n && r.order_preserving; ++x)
    for (int y = 0; y < p.n && r.order_preserving; ++y)
      if (p.leq(x, y) && !p_prime.leq(phi(x), phi(y))) r.order_preserving = false;
  for (int x = 0; x < p_prime.n && r.order_preserving; ++x)
    for (int y = 0; y < p_prime.n && r.order_preserving; ++y)
      if (p_prime.leq(x, y) && !p.leq(psi(x), psi(y))) r.order_preserving = false;

  r.unit = true;
  for (int x = 0; x < p.n; ++x)
    if (!p.leq(x, psi(phi(x)))) r.unit = false;

  r.counit = true;
  for (int xp = 0; xp < p_prime.n; ++xp)
    if (!p_prime.leq(phi(psi(xp)), xp)) r.counit = false;

  // Cancellation laws are three-way biconditionals. On a poset the order
  // equivalence below collapses to equality and the injectivity/surjectivity
  // clauses are the literal set-theoretic ones.
  bool src_poset = is_poset(p);
  bool dst_poset = is_poset(p_prime);

  {
    bool cancel = true;  // x == psi(phi(x)) for all x, up to equivalence
    for (int x = 0; x < p.n; ++x)
      if (!p.equivalent(x, psi(phi(x)))) cancel = false;
    bool inj = true;  // phi injective up to equivalence
    for (int x = 0; x < p.n; ++x)
      for (int y = 0; y < p.n; ++y)
        if (p_prime.equivalent(phi(x), phi(y)) && !p.equivalent(x, y)) inj = false;
    bool surj = true;  // psi hits every equivalence class of p
    for (int x = 0; x < p.n; ++x) {
      bool hit = false;
      for (int xp = 0; xp < p_prime.n; ++xp)
        if (p.equivalent(psi(xp), x)) hit = true;
      if (!hit) surj = false;
    }
    if (src_poset && dst_poset) {
      bool exact = true;
      for (int x = 0; x < p.n; ++x)
        if (psi(phi(x)) != x) exact = false;
      r.left_cancellation = (exact == phi.injective()) && (exact == psi.surjective());
    } else {
      r.left_cancellation = (cancel == inj) && (cancel == surj);
    }
  }

  {
    bool cancel = true;  // x' == phi(psi(x')) up to equivalence
    for (int xp = 0; xp < p_prime.n; ++xp)
      if (!p_prime.equivalent(xp, phi(psi(xp)))) cancel = false;
    bool inj = true;  // psi injective up to equivalence
    for (int x = 0; x < p_prime.n; ++x)
      for (int y = 0; y < p_prime.n; ++y)
        if (p.equivalent(psi(x), psi(y)) && !p_prime.equivalent(x, y)) inj = false;
    bool surj = true;  // phi hits every equivalence class of p'
    for (int xp = 0; xp < p_prime.n; ++xp) {
      bool hit = false;
      for (int x = 0; x < p.n; ++x)
        if (p_prime.equivalent(phi(x), xp)) hit = true;
      if (!hit) surj = false;
    }
    if (src_poset && dst_poset) {
      bool exact = true;
      for (int xp = 0; xp < p_prime.n; ++xp)
        if (phi(psi(xp)) != xp) exact = false;
      r.right_cancellation = (exact == psi.injective()) && (exact == phi.surjective());
    } else {
      r.right_cancellation = (cancel == inj) && (cancel == surj);
    }
  }

  return r;
}

std::optional<PointMap> right_adjoint(const PointMap& phi, const Qoset& p,
                                      const Qoset& p_prime) {
  check_map_arity(phi, p.n, p_prime.n, "right_adjoint");
  std::vector<int> image(static_cast<std::size_t>(p_prime.n));
  for (int xp = 0; xp < p_prime.n; ++xp) {
    // S(x') = { x : phi(x) <= x' }; psi(x') must be its greatest element.
    std::uint64_t s = 0;
    for (int x = 0; x < p.n; ++x)
      if (p_prime.leq(phi(x), xp)) s |= std::uint64_t{1} << x;
    int greatest = -1;
    for (int m = 0; m < p.n && greatest < 0; ++m) {
      if (!((s >> m) & 1u)) continue;
      if ((s & ~p.down(m)) == 0) greatest = m;  // every member of S is <= m
    }
    if (greatest < 0) return std::nullopt;
    image[static_cast<std::size_t>(xp)] = greatest;
  }
  PointMap psi(p_prime.n, p.n, std::move(image));
  if (!is_qoset_galois(phi, psi, p, p_prime)) return std::nullopt;
  return psi;
}

std::optional<PointMap> left_adjoint(const PointMap& psi, const Qoset& p,
                                     const Qoset& p_prime) {
  check_map_arity(psi, p_prime.n, p.n, "left_adjoint");
  std::vector<int> image(static_cast<std::size_t>(p.n));
  for (int x = 0; x < p.n; ++x) {
    // T(x) = { x' : x <= psi(x') }; phi(x) must be its least element.
    std::uint64_t t = 0;
    for (int xp = 0; xp < p_prime.n; ++xp)
      if (p.leq(x, psi(xp))) t |= std::uint64_t{1} << xp;
    int least = -1;
    for (int m = 0; m < p_prime.n && least < 0; ++m) {
      if (!((t >> m) & 1u)) continue;
      if ((t & ~p_prime.up[m]) == 0) least = m;  // m <= every member of T
    }
    if (least < 0) return std::nullopt;
    image[static_cast<std::size_t>(x)] = least;
  }
  PointMap phi(p.n, p_prime.n, std::move(image));
  if (!is_qoset_galois(phi, psi, p, p_prime)) return std::nullopt;
  return phi;
}

bool is_t1(const ClosureSpace& e) {
  for (int x = 0; x < e.n(); ++x) {
    std::uint64_t single = std::uint64_t{1} << x;
    if (e.closure(single) != single) return false;
  }
  return true;
}

bool check_t1_corollary(const PointMap& phi, const PointMap& psi,
                        const ClosureSpace& e, const ClosureSpace& e_prime) {
  if (!is_t1(e) || !is_t1(e_prime))
    throw validation_error("check_t1_corollary requires T1 spaces");
  bool galois = is_closure_galois_via_qoset(phi, psi, e, e_prime);

  bool inverse_homeos = is_continuous(phi, e, e_prime) && is_continuous(psi, e_prime, e) &&
                        phi.injective() && phi.surjective() && psi.injective() &&
                        psi.surjective();
  if (inverse_homeos) {
    for (int x = 0; x < e.n(); ++x)
      if (psi(phi(x)) != x) inverse_homeos = false;
    for (int xp = 0; xp < e_prime.n(); ++xp)
      if (phi(psi(xp)) != xp) inverse_homeos = false;
  }
  return galois == inverse_homeos;
}

}  // namespace galois
