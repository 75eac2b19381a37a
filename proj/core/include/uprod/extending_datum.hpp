#ifndef UPROD_EXTENDING_DATUM_HPP
#define UPROD_EXTENDING_DATUM_HPP

#include <optional>

#include "uprod/coalgebra.hpp"
#include "uprod/linear.hpp"
#include "uprod/report.hpp"

namespace uprod {

/// Data for extending a bialgebra A by a coalgebra H.
///
/// H carries a unit 1_H and a unital multiplication `dot` that need not be
/// associative. The structure maps are
///   ract    : H (x) A -> H   (h <| a)
///   lact    : H (x) A -> A   (h |> a)
///   cocycle : H (x) H -> A   (f(g, h))
struct ExtendingDatum {
  Bialgebra a;
  std::optional<LinMap> a_antipode;
  Coalgebra h;
  SparseVec unit_h;
  LinMap dot;
  LinMap ract;
  LinMap lact;
  LinMap cocycle;

  const Field& field() const { return a.field(); }
  std::size_t dim_a() const { return a.dim(); }
  std::size_t dim_h() const { return h.dim(); }
  /// H with `dot` and 1_H as a (possibly non-associative) algebra.
  Algebra h_algebra() const;
};

/// Unit normalization, coalgebra-map property of every structure map and
/// the unit laws tying 1_A, 1_H to the structure maps. Ids:
///   A-bialgebra, H-coalgebra, H-unit-delta, H-unit-counit,
///   ract-coalgebra-map, lact-coalgebra-map, cocycle-coalgebra-map,
///   dot-coalgebra-map, lact-unit-A, lact-unit-H, ract-unit-H, ract-unit-A,
///   cocycle-unit-right, cocycle-unit-left, dot-unit-left, dot-unit-right.
/// Throws DimensionMismatch when the maps do not have the shapes above.
Report validate_datum(const ExtendingDatum& d);

/// The nine compatibility conditions for the product below to be a
/// bialgebra, ids 2a ... 2i, each checked on every basis tuple:
///   2a  delta_H(g.h) = g1.h1 (x) g2.h2 and counit_H(g.h) = counit(g)counit(h)
///   2b  (h <| a) <| b = h <| (ab) and h <| 1 = h
///   2c  (g.h).l = (g <| f(h1, l1)).(h2.l2)
///   2d  g |> (ab) = (g1 |> a1)((g2 <| a2) |> b)
///   2e  (g.h) <| a = (g <| (h1 |> a1)).(h2 <| a2)
///   2f  (g1 |> (h1 |> a1)) f(g2 <| (h2 |> a2), h3 <| a3) = f(g1, h1)((g2.h2) |> a)
///   2g  (g1 |> f(h1, l1)) f(g2 <| f(h2, l2), h3.l3) = f(g1, h1) f(g2.h2, l)
///   2h  g1 <| a1 (x) g2 |> a2 = g2 <| a2 (x) g1 |> a1
///   2i  g1.h1 (x) f(g2, h2) = g2.h2 (x) f(g1, h1)
Report check_theorem1(const ExtendingDatum& d);

/// A (x) H with multiplication
///   (a x h)(c x g) = a (h1 |> c1) f(h2 <| c2, g1) x (h3 <| c3).g2,
/// unit 1_A x 1_H and the tensor product coalgebra.
struct UnifiedProduct {
  Bialgebra bialgebra;
  ExtendingDatum datum;
  LinMap i_a;       // a -> a x 1_H
  LinMap i_h;       // h -> 1_A x h
  LinMap pi_h;      // a x h -> counit(a) h
  LinMap coaction;  // a x h -> (a x h1) (x) h2
  std::optional<LinMap> antipode;

  std::size_t dim() const { return bialgebra.dim(); }
};

/// The product formula with no checks at all; associativity is left unknown.
Bialgebra raw_unified_product(const ExtendingDatum& d);
/// Validates the datum and the nine conditions (PreconditionFailed naming the
/// failures otherwise), builds the product and re-checks the cross relations.
UnifiedProduct build_unified_product(const ExtendingDatum& d);
/// Ids:
///   cross-A-left   (a x 1)(c x g) = ac x g
///   cross-H-right  (a x g)(1 x h) = a f(g1, h1) x g2.h2
///   cross-A-right  (a x g)(b x 1) = a (g1 |> b1) x g2 <| b2
///   generator      (a x 1)(1 x g) = a x g
Report check_cross_relations(const UnifiedProduct& p);

/// Antipode S(a x g) = (S_A[f(S_H(g2), g3)] x S_H(g1)) (S_A(a) x 1_H).
/// Requires S_A on the datum and S_H a coalgebra antimap with
/// h1.S_H(h2) = S_H(h1).h2 = counit(h)1_H. Throws PreconditionFailed with ids
/// A-antipode, antimap, unit-left, unit-right.
LinMap antipode_prext(const UnifiedProduct& p, const LinMap& s_h);

/// h <| a = counit(a) h.
LinMap trivial_ract(const Coalgebra& h, const Coalgebra& a);
/// h |> a = counit(h) a.
LinMap trivial_lact(const Coalgebra& h, const Coalgebra& a);
/// f(g, h) = counit(g) counit(h) 1_A.
LinMap trivial_cocycle(const Coalgebra& h, const Bialgebra& a);
/// All three structure maps trivial; H must be a bialgebra.
ExtendingDatum trivial_datum(const Bialgebra& a, const Bialgebra& h,
                             std::optional<LinMap> a_antipode = std::nullopt);

}  // namespace uprod

#endif  // UPROD_EXTENDING_DATUM_HPP
