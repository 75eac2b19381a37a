#ifndef UPROD_COALGEBRA_HPP
#define UPROD_COALGEBRA_HPP

#include <cstddef>

#include "uprod/linear.hpp"
#include "uprod/report.hpp"

namespace uprod {

/// Comultiplication delta: V -> V (x) V and counit: V -> k.
struct Coalgebra {
  BasedSpace space;
  LinMap delta;
  LinMap counit;

  const Field& field() const { return delta.field(); }
  std::size_t dim() const { return space.dim(); }
};

enum class Associativity { unknown, yes, no };

/// Unital algebra whose multiplication need not be associative.
struct Algebra {
  BasedSpace space;
  LinMap mult;  // V (x) V -> V
  SparseVec unit;
  Associativity associative = Associativity::unknown;

  const Field& field() const { return mult.field(); }
  std::size_t dim() const { return space.dim(); }
  /// eta: k -> V.
  LinMap unit_map() const;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
};

/// A coalgebra and an algebra on the same space. Nothing is enforced by the
/// type itself; use make_bialgebra or check_bialgebra.
struct Bialgebra {
  Coalgebra coalgebra;
  Algebra algebra;

  const Field& field() const { return coalgebra.field(); }
  const BasedSpace& space() const { return coalgebra.space; }
  std::size_t dim() const { return coalgebra.dim(); }
};

struct Hopf {
  Bialgebra bialgebra;
  LinMap antipode;

  const Field& field() const { return bialgebra.field(); }
  std::size_t dim() const { return bialgebra.dim(); }
};

/// Ids: coassociativity, counit-left, counit-right. Witness: basis element.
Report check_coalgebra(const Coalgebra& c);
/// Ids: unit-left, unit-right and, unless skipped, associativity (witness
/// triple). Does not read or write the associativity flag.
Report check_algebra(const Algebra& a, bool check_associativity = true);
/// Coalgebra and algebra axioms plus delta-multiplicative, delta-unit,
/// counit-multiplicative, counit-unit.
Report check_bialgebra(const Bialgebra& b);
/// Bialgebra axioms plus antipode-left (S * id) and antipode-right (id * S).
Report check_hopf(const Hopf& h);

/// Evaluates associativity and records it in the flag.
Associativity resolve_associativity(Algebra& a);
/// Pairs the two structures after resolving associativity; throws
/// PreconditionFailed when the multiplication is not associative.
Bialgebra make_bialgebra(Coalgebra c, Algebra a);
/// Attaches the antipode found by antipode_solve.
Hopf make_hopf(Bialgebra b);

/// Ids: delta, counit. Witness: source basis element.
Report coalgebra_map_report(const LinMap& f, const Coalgebra& src, const Coalgebra& dst);
bool is_coalgebra_map(const LinMap& f, const Coalgebra& src, const Coalgebra& dst);
/// delta o f = twist o (f (x) f) o delta and counit o f = counit.
bool is_coalgebra_antimap(const LinMap& f, const Coalgebra& src, const Coalgebra& dst);
/// Ids: mult, unit. Witness: basis pair.
Report algebra_map_report(const LinMap& f, const Algebra& src, const Algebra& dst);
bool is_algebra_map(const LinMap& f, const Algebra& src, const Algebra& dst);
/// f(xy) = f(y)f(x) and f(1) = 1.
bool is_algebra_antimap(const LinMap& f, const Algebra& src, const Algebra& dst);

/// True when delta(e_i) = e_i (x) e_i and counit(e_i) = 1.
bool is_grouplike(const Coalgebra& c, Index i);

/// m o (f (x) g) o delta.
LinMap convolution(const LinMap& f, const LinMap& g, const Coalgebra& src, const Algebra& dst);
/// eta o counit, the unit for convolution.
LinMap convolution_unit(const Coalgebra& src, const Algebra& dst);

/// Solves S * id = eta o counit and id * S = eta o counit as linear systems
/// for the matrix of S. Throws NoAntipode naming the inconsistent side.
LinMap antipode_solve(const Bialgebra& b);

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b);
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Bialgebra tensor_bialgebra(const Bialgebra& a, const Bialgebra& b);

/// The ground field k as a Hopf algebra.
Hopf ground_hopf(const Field& field);

/// A (x) A (x) B (x) B -> A (x) B (x) A (x) B, the reordering behind tensor
/// product coalgebras and algebras.
LinMap interleave(const Field& field, const BasedSpace& a, const BasedSpace& b);

}  // namespace uprod

#endif  // UPROD_COALGEBRA_HPP
