#ifndef UPROD_CLASSIFICATION_HPP
#define UPROD_CLASSIFICATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "uprod/extending_datum.hpp"
#include "uprod/lazy_cocycle.hpp"
#include "uprod/special_products.hpp"

namespace uprod {

/// phi: A x' H -> A x H, phi(a x' h) = a u(h1) x h2, and its inverse
/// psi(a x h) = a S_A(u(h1)) x' h2.
struct EquivalenceCertificate {
  LazyCocycle cocycle;
  LinMap phi;
  LinMap psi;
};

struct EquivalenceResult {
  Report report;
  std::optional<EquivalenceCertificate> certificate;
  bool equivalent() const { return report.all_passed(); }
};

/// Tests whether `primed` is cohomologous to `base` through u. Checks in order
/// and stops at the first failing group:
///   A-antipode, cocycle-coalgebra-map, cocycle-unital, cocycle-lazy
///   ract-equal  h <|' c = h <| c
///   C2  h |>' c = u(h1)(h2 |> c1) S_A(u(h3 <| c2))
///   C3  f'(h, g) = u(h1)(h2 |> u(g1)) f(h3 <| u(g2), g3) S_A(u(h4 .' g4))
///   C4  h .' g = (h <| u(g1)) . g2
/// On success builds both products and verifies the certificate:
///   phi-coalgebra-map, phi-algebra-map, phi-A-module, phi-H-comodule,
///   phi-inverse (psi o phi = id and phi o psi = id), pi-H (pi_H o phi = pi_H),
///   i-A (phi o i_A = i_A).
/// Throws DimensionMismatch when the data do not share A and H.
EquivalenceResult check_equivalence(const ExtendingDatum& base, const ExtendingDatum& primed,
                                    const LazyCocycle& u);
/// The C-conditions only, without building the products.
bool cohomologous_via(const ExtendingDatum& base, const ExtendingDatum& primed, const LazyCocycle& u);

/// Every pointed map X -> G as a lazy cocycle, for H with a group-like basis
/// whose basepoint is a basis vector and A with a group-like basis. Throws
/// CapExceeded when |G|^(|X|-1) exceeds cap and Error outside this setting.
std::vector<LazyCocycle> enumerate_cocycles(const Coalgebra& h, const SparseVec& unit_h, const Bialgebra& a,
                                            std::size_t cap = 100000);

/// Partitions the data into cohomology classes by exhaustive search over
/// enumerate_cocycles. Classes are listed by smallest member; members are
/// increasing. Throws std::logic_error if the computed relation is not an
/// equivalence relation.
std::vector<std::vector<std::size_t>> quotient_classes(const std::vector<ExtendingDatum>& data,
                                                       std::size_t cap = 100000);

/// Bicrossed specialization, ids:
///   A-antipode, cocycle-coalgebra-map, cocycle-unital, cocycle-lazy,
///   ract-equal, lact-formula (the C2 formula),
///   cocycle-trivial  u(h1)(h2 |> u(g1)) S_A(u(h3 g2)) = counit(g)counit(h) 1_A
///   ract-absorbs-cocycle  h <| u(g) = counit(g) h
Report check_bicrossed_equivalence(const MatchedPair& base, const MatchedPair& primed, const LazyCocycle& u);

}  // namespace uprod

#endif  // UPROD_CLASSIFICATION_HPP
