#include "uprod/coalgebra.hpp"

#include <map>
#include <utility>

#include "check_util.hpp"
#include "uprod/errors.hpp"

namespace uprod {

using detail::check_maps;

namespace {

LinMap id(const BasedSpace& v, const Field& field) { return LinMap::identity(field, v); }

/// Re-targets a map whose codomain is k (x) ... (x) k onto k.
LinMap to_ground(const LinMap& f) {
  return LinMap(f.field(), f.domain(), BasedSpace::ground(), f.columns());
}

}  // namespace

LinMap interleave(const Field& field, const BasedSpace& a, const BasedSpace& b) {
  const BasedSpace factors[] = {a, a, b, b};
  const std::size_t perm[] = {0, 2, 1, 3};
  return tensor_permutation(field, factors, perm);
}

LinMap Algebra::unit_map() const { return LinMap::point(field(), space, unit); }

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
  return mult.apply(tensor_vectors(x, y, dim()));
}

Report check_coalgebra(const Coalgebra& c) {
  Report r("coalgebra");
  const Field& k = c.field();
  const LinMap i = id(c.space, k);
  r.add(check_maps("coassociativity", compose(tensor_map(c.delta, i), c.delta),
                   compose(tensor_map(i, c.delta), c.delta)));
  r.add(check_maps("counit-left", compose(tensor_map(c.counit, i), c.delta), i));
  r.add(check_maps("counit-right", compose(tensor_map(i, c.counit), c.delta), i));
  return r;
}

Report check_algebra(const Algebra& a, bool check_associativity) {
  Report r("algebra");
  const Field& k = a.field();
  const LinMap i = id(a.space, k);
  const LinMap eta = a.unit_map();
  const std::size_t n = a.dim();
  r.add(check_maps("unit-left", compose(a.mult, tensor_map(eta, i)), i));
  r.add(check_maps("unit-right", compose(a.mult, tensor_map(i, eta)), i));
  if (check_associativity) {
    r.add(check_maps("associativity", compose(a.mult, tensor_map(a.mult, i)),
                     compose(a.mult, tensor_map(i, a.mult)), {n, n, n}));
  }
  return r;
}

Report check_bialgebra(const Bialgebra& b) {
  Report r("bialgebra");
  r.merge(check_coalgebra(b.coalgebra));
  r.merge(check_algebra(b.algebra));
  const Field& k = b.field();
  const Coalgebra& c = b.coalgebra;
  const Algebra& a = b.algebra;
  const std::size_t n = b.dim();
  if (a.dim() != n) throw DimensionMismatch("bialgebra: coalgebra and algebra dimensions differ");

  const LinMap mm = tensor_map(a.mult, a.mult);
  const LinMap shuffle = interleave(k, b.space(), b.space());
  r.add(check_maps("delta-multiplicative", compose(c.delta, a.mult),
                   compose(mm, compose(shuffle, tensor_map(c.delta, c.delta))), {n, n}));
  r.add(check_maps("delta-unit", compose(c.delta, a.unit_map()),
                   tensor_map(a.unit_map(), a.unit_map())));
  r.add(check_maps("counit-multiplicative", to_ground(compose(c.counit, a.mult)),
                   to_ground(tensor_map(c.counit, c.counit)), {n, n}));
  r.add(check_maps("counit-unit", compose(c.counit, a.unit_map()), id(BasedSpace::ground(), k)));
  return r;
}

Report check_hopf(const Hopf& h) {
  Report r("hopf");
  r.merge(check_bialgebra(h.bialgebra));
  const Coalgebra& c = h.bialgebra.coalgebra;
  const Algebra& a = h.bialgebra.algebra;
  const LinMap i = id(c.space, h.field());
  const LinMap e = convolution_unit(c, a);
  r.add(check_maps("antipode-left", convolution(h.antipode, i, c, a), e));
  r.add(check_maps("antipode-right", convolution(i, h.antipode, c, a), e));
  return r;
}

Associativity resolve_associativity(Algebra& a) {
  if (a.associative == Associativity::unknown) {
    const LinMap i = id(a.space, a.field());
    const bool assoc = compose(a.mult, tensor_map(a.mult, i)) == compose(a.mult, tensor_map(i, a.mult));
    a.associative = assoc ? Associativity::yes : Associativity::no;
  }
  return a.associative;
}

Bialgebra make_bialgebra(Coalgebra c, Algebra a) {
  if (resolve_associativity(a) != Associativity::yes) {
    Report r("bialgebra");
    r.add(*check_algebra(a).find("associativity"));
    throw PreconditionFailed("multiplication is not associative", r);
  }
  return Bialgebra{std::move(c), std::move(a)};
}

Hopf make_hopf(Bialgebra b) {
  LinMap s = antipode_solve(b);
  return Hopf{std::move(b), std::move(s)};
}

Report coalgebra_map_report(const LinMap& f, const Coalgebra& src, const Coalgebra& dst) {
  Report r("coalgebra map");
  if (f.domain_dim() != src.dim() || f.codomain_dim() != dst.dim()) {
    throw DimensionMismatch("coalgebra map: shape does not match the coalgebras");
  }
  r.add(check_maps("delta", compose(dst.delta, f), compose(tensor_map(f, f), src.delta)));
  r.add(check_maps("counit", compose(dst.counit, f), src.counit));
  return r;
}

bool is_coalgebra_map(const LinMap& f, const Coalgebra& src, const Coalgebra& dst) {
  return coalgebra_map_report(f, src, dst).all_passed();
}

bool is_coalgebra_antimap(const LinMap& f, const Coalgebra& src, const Coalgebra& dst) {
  if (f.domain_dim() != src.dim() || f.codomain_dim() != dst.dim()) {
    throw DimensionMismatch("coalgebra antimap: shape does not match the coalgebras");
  }
  const LinMap tw = twist(f.field(), dst.space, dst.space);
  return compose(dst.delta, f) == compose(tw, compose(tensor_map(f, f), src.delta)) &&
         compose(dst.counit, f) == src.counit;
}

Report algebra_map_report(const LinMap& f, const Algebra& src, const Algebra& dst) {
  Report r("algebra map");
  if (f.domain_dim() != src.dim() || f.codomain_dim() != dst.dim()) {
    throw DimensionMismatch("algebra map: shape does not match the algebras");
  }
  const std::size_t n = src.dim();
  r.add(check_maps("mult", compose(f, src.mult), compose(dst.mult, tensor_map(f, f)), {n, n}));
  r.add(check_maps("unit", compose(f, src.unit_map()), dst.unit_map()));
  return r;
}

bool is_algebra_map(const LinMap& f, const Algebra& src, const Algebra& dst) {
  return algebra_map_report(f, src, dst).all_passed();
}

bool is_algebra_antimap(const LinMap& f, const Algebra& src, const Algebra& dst) {
  if (f.domain_dim() != src.dim() || f.codomain_dim() != dst.dim()) {
    throw DimensionMismatch("algebra antimap: shape does not match the algebras");
  }
  const LinMap tw = twist(f.field(), dst.space, dst.space);
  return compose(f, src.mult) == compose(dst.mult, compose(tw, tensor_map(f, f))) &&
         compose(f, src.unit_map()) == dst.unit_map();
}

bool is_grouplike(const Coalgebra& c, Index i) {
  const SparseVec expected = basis_vector(c.field(), static_cast<Index>(i * c.dim() + i));
  return c.delta.column(i) == expected && c.counit.column(i) == basis_vector(c.field(), 0);
}

LinMap convolution(const LinMap& f, const LinMap& g, const Coalgebra& src, const Algebra& dst) {
  if (f.domain_dim() != src.dim() || g.domain_dim() != src.dim() ||
      f.codomain_dim() != dst.dim() || g.codomain_dim() != dst.dim()) {
    throw DimensionMismatch("convolution: maps must go from the coalgebra to the algebra");
  }
  return compose(dst.mult, compose(tensor_map(f, g), src.delta));
}

LinMap convolution_unit(const Coalgebra& src, const Algebra& dst) {
  return compose(dst.unit_map(), src.counit);
}

namespace {

// Unknown s_{r,c} (coefficient of e_r in S(e_c)) has index r*n + c. For
// each basis c and output coordinate k the equation is
//   left:  sum over delta(c) = d e_i (x) e_j of d * sum_r s_{r,i} m(e_r, e_j)_k
//   right: sum over delta(c) = d e_i (x) e_j of d * sum_r s_{r,j} m(e_i, e_r)_k
// equal to counit(c) * unit_k.
SolveResult solve_side(const Bialgebra& b, bool left) {
  const Field& k = b.field();
  const std::size_t n = b.dim();
  const LinMap& m = b.algebra.mult;
  std::map<std::pair<Index, Index>, SparseVec> rows;
  for (Index c = 0; c < n; ++c) {
    for (Index kk = 0; kk < n; ++kk) rows[{c, kk}];
    for (const auto& t : b.coalgebra.delta.column(c)) {
      const Index i = static_cast<Index>(t.index / n);
      const Index j = static_cast<Index>(t.index % n);
      for (Index r = 0; r < n; ++r) {
        const Index prod = left ? static_cast<Index>(r * n + j) : static_cast<Index>(i * n + r);
        const Index unknown = static_cast<Index>(r * n + (left ? i : j));
        for (const auto& mt : m.column(prod)) {
          rows[{c, mt.index}].push_back({unknown, t.coeff * mt.coeff});
        }
      }
    }
  }
  std::vector<SparseVec> eqs;
  std::vector<Scalar> rhs;
  eqs.reserve(rows.size());
  for (auto& [key, row] : rows) {
    normalize(row);
    Scalar e = b.coalgebra.counit.entry(0, key.first);
    Scalar u = k.zero();
    for (const auto& t : b.algebra.unit)
      if (t.index == key.second) u = t.coeff;
    eqs.push_back(std::move(row));
    rhs.push_back(e * u);
  }
  return solve_sparse(k, eqs, rhs, n * n);
}

LinMap from_unknowns(const Bialgebra& b, const std::vector<Scalar>& x) {
  const std::size_t n = b.dim();
  std::vector<SparseVec> cols(n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      if (!x[r * n + c].is_zero()) cols[c].push_back({r, x[r * n + c]});
  return LinMap(b.field(), b.space(), b.space(), std::move(cols));
}

}  // namespace

LinMap antipode_solve(const Bialgebra& b) {
  SolveResult left = solve_side(b, true);
  if (!left.consistent) throw NoAntipode("left");
  SolveResult right = solve_side(b, false);
  if (!right.consistent) throw NoAntipode("right");
  // A left and a right convolution inverse coincide; any particular
  // solutions that disagree mean neither is a two-sided inverse.
  LinMap s_left = from_unknowns(b, left.solution);
  LinMap s_right = from_unknowns(b, right.solution);
  if (!(s_left == s_right)) {
    const LinMap i = id(b.space(), b.field());
    const LinMap e = convolution_unit(b.coalgebra, b.algebra);
    if (convolution(i, s_left, b.coalgebra, b.algebra) == e) return s_left;
    if (convolution(s_right, i, b.coalgebra, b.algebra) == e) return s_right;
    throw NoAntipode(left.unique() ? "right" : "left");
  }
  return s_left;
}

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  const Field& k = a.field();
  BasedSpace v = tensor_space(a.space, b.space);
  LinMap delta = compose(interleave(k, a.space, b.space), tensor_map(a.delta, b.delta));
  delta = LinMap(k, v, tensor_space(v, v), delta.columns());
  LinMap counit(k, v, BasedSpace::ground(), tensor_map(a.counit, b.counit).columns());
  return Coalgebra{v, std::move(delta), std::move(counit)};
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const Field& k = a.field();
  BasedSpace v = tensor_space(a.space, b.space);
  const BasedSpace factors[] = {a.space, b.space, a.space, b.space};
  const std::size_t perm[] = {0, 2, 1, 3};
  LinMap mult = compose(tensor_map(a.mult, b.mult), tensor_permutation(k, factors, perm));
  mult = LinMap(k, tensor_space(v, v), v, mult.columns());
  Associativity assoc = (a.associative == Associativity::yes && b.associative == Associativity::yes)
                            ? Associativity::yes
                            : Associativity::unknown;
  return Algebra{v, std::move(mult), tensor_vectors(a.unit, b.unit, b.dim()), assoc};
}

Bialgebra tensor_bialgebra(const Bialgebra& a, const Bialgebra& b) {
  return Bialgebra{tensor_coalgebra(a.coalgebra, b.coalgebra),
                   tensor_algebra(a.algebra, b.algebra)};
}

Hopf ground_hopf(const Field& k) {
  const BasedSpace g = BasedSpace::ground();
  const BasedSpace gg = tensor_space(g, g);
  Coalgebra c{g, LinMap(k, g, gg, {basis_vector(k, 0)}), LinMap::identity(k, g)};
  Algebra a{g, LinMap(k, gg, g, {basis_vector(k, 0)}), basis_vector(k, 0), Associativity::yes};
  return Hopf{Bialgebra{std::move(c), std::move(a)}, LinMap::identity(k, g)};
}

}  // namespace uprod
