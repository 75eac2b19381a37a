#ifndef UPROD_SPECIAL_PRODUCTS_HPP
#define UPROD_SPECIAL_PRODUCTS_HPP

#include <optional>

#include "uprod/coalgebra.hpp"
#include "uprod/extending_datum.hpp"
#include "uprod/lazy_cocycle.hpp"
#include "uprod/report.hpp"

namespace uprod {

/// Two bialgebras acting on each other:
///   ract : H (x) A -> H   (h <| a)
///   lact : H (x) A -> A   (h |> a)
struct MatchedPair {
  Bialgebra a;
  Bialgebra h;
  LinMap ract;
  LinMap lact;
  std::optional<LinMap> a_antipode;
  std::optional<LinMap> h_antipode;
};

/// Ids:
///   A-bialgebra, H-bialgebra
///   lact-coalgebra-map, ract-coalgebra-map
///   A-module  1_H |> a = a, g |> (h |> a) = (gh) |> a
///   H-module  h <| 1_A = h, (h <| a) <| b = h <| (ab)
///   mp1  1_H <| a = counit(a) 1_H and h |> 1_A = counit(h) 1_A
///   mp2  g |> (ab) = (g1 |> a1)((g2 <| a2) |> b)
///   mp3  (gh) <| a = (g <| (h1 |> a1))(h2 <| a2)
///   mp4  g1 <| a1 (x) g2 |> a2 = g2 <| a2 (x) g1 |> a1
Report check_matched_pair(const MatchedPair& mp);

/// The datum (H, <|, |>, trivial f) with H's own multiplication.
ExtendingDatum matched_pair_datum(const MatchedPair& mp);

/// (a x h)(c x g) = a (h1 |> c1) x (h2 <| c2) g, evaluated directly.
LinMap bicrossed_mult(const MatchedPair& mp);

/// Builds the product through the unified-product engine after
/// check_matched_pair passes (PreconditionFailed otherwise) and cross-checks
/// it against bicrossed_mult. When both antipodes are present attaches
/// S(a x h) = (1 x S_H(h))(S_A(a) x 1) after comparing it with the solved
/// antipode.
UnifiedProduct build_bicrossed(const MatchedPair& mp);

/// A bialgebra H acting on a bialgebra A with a two-cocycle:
///   lact    : H (x) A -> A   (h |> a)
///   cocycle : H (x) H -> A   (f(g, h))
struct CrossedDatum {
  Bialgebra a;
  Bialgebra h;
  LinMap lact;
  LinMap cocycle;
  std::optional<LinMap> a_antipode;
};

/// Ids:
///   A-bialgebra, H-bialgebra, lact-coalgebra-map, cocycle-coalgebra-map
///   normalization   h |> 1 = counit(h) 1, 1 |> a = a, f(h, 1) = f(1, h) = counit(h) 1
///   measuring       g |> (ab) = (g1 |> a)(g2 |> b)
///   twisted-module  (g1 |> (h1 |> a)) f(g2, h2) = f(g1, h1)((g2 h2) |> a)
///   cocycle         (g1 |> f(h1, l1)) f(g2, h2 l2) = f(g1, h1) f(g2 h2, l)
///   c               g1 (x) g2 |> a = g2 (x) g1 |> a
///   d               g1 h1 (x) f(g2, h2) = g2 h2 (x) f(g1, h1)
Report check_crossed(const CrossedDatum& cd);

/// The datum (H, trivial <|, |>, f) with H's own multiplication.
ExtendingDatum crossed_datum(const CrossedDatum& cd);

/// (a x h)(c x g) = a (h1 |> c) f(h2, g1) x h3 g2, evaluated directly.
LinMap crossed_mult(const CrossedDatum& cd);

/// Builds the product through the unified-product engine after check_crossed
/// passes (PreconditionFailed otherwise) and cross-checks it against
/// crossed_mult.
UnifiedProduct build_crossed(const CrossedDatum& cd);

/// Deforms a matched pair by a lazy cocycle u with h <| u(g) = counit(g) h:
///   h |>' c  = u(h1)(h2 |> c1) S_A(u(h3 <| c2))
///   h .' g   = (h <| u(g1)) g2
///   f'(h, g) = u(h1)(h2 |> u(g1)) S_A(u(h3 .' g2))
/// Needs S_A. PreconditionFailed with ids A-antipode, coalgebra-map, unital,
/// lazy, ract-absorbs-cocycle (witness (h, g)).
ExtendingDatum deform_matched_pair(const MatchedPair& mp, const LazyCocycle& u);

}  // namespace uprod

#endif  // UPROD_SPECIAL_PRODUCTS_HPP
