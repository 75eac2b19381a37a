#ifndef UPROD_FACTORIZATION_HPP
#define UPROD_FACTORIZATION_HPP

#include <optional>

#include "uprod/coalgebra.hpp"
#include "uprod/extending_datum.hpp"
#include "uprod/groups.hpp"
#include "uprod/report.hpp"

namespace uprod {

/// A bialgebra E with a subbialgebra A and a subcoalgebra H containing 1_E,
/// given by inclusion maps. The antipode of E is optional.
struct FactorizationInput {
  Bialgebra e;
  std::optional<LinMap> e_antipode;
  LinMap incl_a;  // A -> E
  LinMap incl_h;  // H -> E
};

/// Ids: A-injective, H-injective, A-unit, A-subalgebra, A-subcoalgebra,
/// H-unit, H-subcoalgebra. Stops after the injectivity checks when either fails.
Report check_factorization_input(const FactorizationInput& fi);

/// a (x) h -> incl_a(a) incl_h(h).
LinMap mult_map(const FactorizationInput& fi);

/// Reads the datum off E. With w = mult_map(fi)^-1,
///   h |> a  = (id (x) counit_H) w(ha),   h <| a = (counit_A (x) id) w(ha)
///   f(h, g) = (id (x) counit_H) w(hg),   h . g  = (counit_A (x) id) w(hg)
/// A and H carry the structures restricted from E, and A the restricted
/// antipode when E has one that preserves A. Throws PreconditionFailed when
/// check_factorization_input fails and NotFactorization when w does not exist.
ExtendingDatum recover_datum(const FactorizationInput& fi);

/// Recovered datum, its product and the isomorphism onto E. The
/// certificate has ids u-algebra-map, u-coalgebra-map, A-embedding
/// (u o i_A = incl_a), H-embedding (u o i_H = incl_h) and, when E has an
/// antipode, antipode (u^-1 S_E u equals the solved antipode of the product).
struct Factorization {
  ExtendingDatum datum;
  UnifiedProduct product;
  LinMap u;
  LinMap u_inverse;
  Report certificate;
};
Factorization factorize(const FactorizationInput& fi);

/// Pulls the algebra structure of E back along an invertible coalgebra map
/// u: L -> E, l.l' = u^-1(u(l)u(l')). Throws NotBijective or
/// PreconditionFailed (ids delta, counit).
Bialgebra transfer_structure(const Bialgebra& e, const Coalgebra& l, const LinMap& u);
/// Same, also carrying S_L = u^-1 S_E u.
Hopf transfer_structure(const Hopf& e, const Coalgebra& l, const LinMap& u);

/// Builds the product of d, presents it as a factorization through i_A and
/// i_H, recovers and compares. Ids: unit-H, dot, ract, lact, cocycle.
Report roundtrip_check(const ExtendingDatum& d);

/// Which structure maps are the trivial ones.
struct DatumShape {
  bool trivial_ract;
  bool trivial_lact;
  bool trivial_cocycle;
  /// Trivial cocycle: the product is a bicrossed product.
  bool bicrossed() const { return trivial_cocycle; }
  /// Trivial right action: the product is a crossed product.
  bool crossed() const { return trivial_ract; }
};
DatumShape datum_shape(const ExtendingDatum& d);

/// k[G] with A = k[a_elements] and H = span of h_elements.
FactorizationInput group_factorization(const Field& field, const GroupTable& g,
                                       const std::vector<Index>& a_elements,
                                       const std::vector<Index>& h_elements);

}  // namespace uprod

#endif  // UPROD_FACTORIZATION_HPP
