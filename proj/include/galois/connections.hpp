#pragma once

#include <optional>
#include <string>

#include "galois/caps.hpp"
#include "galois/closure.hpp"
#include "galois/point_map.hpp"
#include "galois/qoset.hpp"

namespace galois {

// Continuity via the preimage criterion: f^{-1}(F') closed for every closed
// F'. For small universes the f([A]) <= [f(A)] formulation is cross-checked
// against it; disagreement would be a bug and throws.
bool is_continuous(const PointMap& f, const ClosureSpace& src, const ClosureSpace& dst);

// The f([A]) <= [f(A)] formulation, swept over all 2^n subsets. Test oracle.
bool is_continuous_exhaustive(const PointMap& f, const ClosureSpace& src,
                              const ClosureSpace& dst);

// phi(x) <= x'  iff  x <= psi(x'), for all pairs.
bool is_qoset_galois(const PointMap& phi, const PointMap& psi, const Qoset& p,
                     const Qoset& p_prime);

// Definitional check: phi^{-1}([A']) = [psi(A')] for every subset A' of the
// target space. Exponential in n'; throws cap_error beyond caps().direct with a
// pointer at the qoset-based check.
bool is_closure_galois_direct(const PointMap& phi, const PointMap& psi,
                              const ClosureSpace& e, const ClosureSpace& e_prime);

// Polynomial check: both maps continuous and (phi, psi) a Galois connection
// between the specialization quasiorders.
bool is_closure_galois_via_qoset(const PointMap& phi, const PointMap& psi,
                                 const ClosureSpace& e, const ClosureSpace& e_prime);

// Both maps continuous and (phi^{-1}, psi^{-1}) a Galois connection between
// the closed-set posets: phi^{-1}(F') <= F  iff  F' <= psi^{-1}(F).
bool induced_preimage_connection(const PointMap& phi, const PointMap& psi,
                                 const ClosureSpace& e, const ClosureSpace& e_prime);

// Verdict of the three equivalent characterizations. The direct flag is
// absent when the target universe exceeds the cap and the sweep was skipped.
struct ConnectionVerdict {
  std::optional<bool> cond_direct;
  bool cond_qoset_plus_continuity = false;
  bool cond_induced_on_closed_sets = false;

  std::optional<std::string> witness_direct;
  std::optional<std::string> witness_qoset;
  std::optional<std::string> witness_induced;

  // All evaluated flags agree (they must, these being equivalent conditions).
  bool consistent() const {
    if (cond_qoset_plus_continuity != cond_induced_on_closed_sets) return false;
    return !cond_direct || *cond_direct == cond_qoset_plus_continuity;
  }
  bool holds() const { return cond_qoset_plus_continuity; }
};

ConnectionVerdict verify_theorem(const PointMap& phi, const PointMap& psi,
                                 const ClosureSpace& e, const ClosureSpace& e_prime);

// The five classical adjoint properties. On general qosets the cancellation
// laws (d)/(e) compare up to order-equivalence; on posets they are exact.
struct AdjointProperties {
  bool order_preserving = false;   // both maps
  bool unit = false;               // x <= psi(phi(x))
  bool counit = false;             // phi(psi(x')) <= x'
  bool left_cancellation = false;  // x == psi(phi(x)) iff phi injective iff psi surjective
  bool right_cancellation = false; // x' == phi(psi(x')) iff psi injective iff phi surjective

  bool all() const {
    return order_preserving && unit && counit && left_cancellation && right_cancellation;
  }
};

// Requires (phi, psi) to pass is_qoset_galois; throws validation_error
// otherwise.
AdjointProperties adjoint_properties_report(const PointMap& phi, const PointMap& psi,
                                            const Qoset& p, const Qoset& p_prime);

// Synthesizes the right adjoint of phi as the greatest element of
// {x : phi(x) <= x'} per target point (smallest index on ties). Absent iff no
// map at all completes phi to a connection; any returned map passes
// is_qoset_galois.
std::optional<PointMap> right_adjoint(const PointMap& phi, const Qoset& p,
                                      const Qoset& p_prime);

// Dual: least element of {x' : x <= psi(x')} per source point.
std::optional<PointMap> left_adjoint(const PointMap& psi, const Qoset& p,
                                     const Qoset& p_prime);

// Every singleton closed; equivalently the specialization order is equality.
bool is_t1(const ClosureSpace& e);

// For T1 spaces, checks that being a closure-space Galois connection
// coincides with (phi, psi) being mutually inverse continuous bijections.
// Always true; false would witness a bug. Throws validation_error if either
// space is not T1.
bool check_t1_corollary(const PointMap& phi, const PointMap& psi,
                        const ClosureSpace& e, const ClosureSpace& e_prime);

}  // namespace galois
