#include "uprod/factorization.hpp"

#include <algorithm>

#include "check_util.hpp"
#include "uprod/errors.hpp"

namespace uprod {

using detail::check_maps;
using detail::fold;

namespace {

/// True when every column of g lies in the image of the injective map i,
/// with L a left inverse of i.
bool in_image(const LinMap& i, const LinMap& l, const LinMap& g) {
  return !compose(i, compose(l, g)).first_difference(g).has_value();
}

LinMap retarget(const LinMap& f, const BasedSpace& codomain) {
  return LinMap(f.field(), f.domain(), codomain, f.columns());
}

struct Parts {
  Bialgebra a;
  std::optional<LinMap> a_antipode;
  Coalgebra h;
  SparseVec unit_h;
};

Parts restrict_parts(const FactorizationInput& fi) {
  Report pre = check_factorization_input(fi);
  if (!pre.all_passed()) throw PreconditionFailed("not a subbialgebra and subcoalgebra of E", pre);
  const LinMap la = left_inverse(fi.incl_a);
  const LinMap lh = left_inverse(fi.incl_h);
  const BasedSpace& av = fi.incl_a.domain();
  const BasedSpace& hv = fi.incl_h.domain();
  const Bialgebra& e = fi.e;

  Coalgebra ac{av, compose(tensor_map(la, la), compose(e.coalgebra.delta, fi.incl_a)),
               compose(e.coalgebra.counit, fi.incl_a)};
  Algebra aa{av, compose(la, compose(e.algebra.mult, tensor_map(fi.incl_a, fi.incl_a))),
             la.apply(e.algebra.unit), e.algebra.associative};
  std::optional<LinMap> sa;
  if (fi.e_antipode) {
    LinMap s = compose(*fi.e_antipode, fi.incl_a);
    if (in_image(fi.incl_a, la, s)) sa = compose(la, s);
  }
  Coalgebra hc{hv, compose(tensor_map(lh, lh), compose(e.coalgebra.delta, fi.incl_h)),
               compose(e.coalgebra.counit, fi.incl_h)};
  return Parts{Bialgebra{std::move(ac), std::move(aa)}, std::move(sa), std::move(hc), lh.apply(e.algebra.unit)};
}

LinMap invert_mult(const LinMap& u) {
  if (u.domain_dim() != u.codomain_dim()) {
    throw NotFactorization(rank(u), std::max(u.domain_dim(), u.codomain_dim()));
  }
  try {
    return invert(u);
  } catch (const NotBijective& e) {
    throw NotFactorization(e.rank(), e.dim());
  }
}

}  // namespace

Report check_factorization_input(const FactorizationInput& fi) {
  Report r("factorization input");
  const Bialgebra& e = fi.e;
  const std::size_t n = e.dim();
  if (fi.incl_a.codomain_dim() != n || fi.incl_h.codomain_dim() != n) {
    throw DimensionMismatch("inclusions must land in E");
  }
  const bool a_inj = rank(fi.incl_a) == fi.incl_a.domain_dim();
  const bool h_inj = rank(fi.incl_h) == fi.incl_h.domain_dim();
  r.add(CheckResult{"A-injective", a_inj, {}, {}});
  r.add(CheckResult{"H-injective", h_inj, {}, {}});
  if (!a_inj || !h_inj) return r;

  const Field& k = e.field();
  const LinMap la = left_inverse(fi.incl_a);
  const LinMap lh = left_inverse(fi.incl_h);
  const LinMap one = LinMap::point(k, e.space(), e.algebra.unit);
  r.add(CheckResult{"A-unit", in_image(fi.incl_a, la, one), {}, {}});
  r.add(CheckResult{"A-subalgebra",
                    in_image(fi.incl_a, la, compose(e.algebra.mult, tensor_map(fi.incl_a, fi.incl_a))), {}, {}});
  r.add(CheckResult{"A-subcoalgebra",
                    in_image(tensor_map(fi.incl_a, fi.incl_a), tensor_map(la, la),
                             compose(e.coalgebra.delta, fi.incl_a)),
                    {},
                    {}});
  r.add(CheckResult{"H-unit", in_image(fi.incl_h, lh, one), {}, {}});
  r.add(CheckResult{"H-subcoalgebra",
                    in_image(tensor_map(fi.incl_h, fi.incl_h), tensor_map(lh, lh),
                             compose(e.coalgebra.delta, fi.incl_h)),
                    {},
                    {}});
  return r;
}

LinMap mult_map(const FactorizationInput& fi) {
  return compose(fi.e.algebra.mult, tensor_map(fi.incl_a, fi.incl_h));
}

ExtendingDatum recover_datum(const FactorizationInput& fi) {
  Parts parts = restrict_parts(fi);
  const LinMap u = mult_map(fi);
  const LinMap w = invert_mult(u);
  const Field& k = fi.e.field();
  const BasedSpace& av = parts.a.space();
  const BasedSpace& hv = parts.h.space;
  const LinMap id_a = LinMap::identity(k, av);
  const LinMap id_h = LinMap::identity(k, hv);
  const LinMap to_a = tensor_map(id_a, parts.h.counit);
  const LinMap to_h = tensor_map(parts.a.coalgebra.counit, id_h);

  const LinMap mu = compose(w, compose(fi.e.algebra.mult, tensor_map(fi.incl_h, fi.incl_a)));
  const LinMap nu = compose(w, compose(fi.e.algebra.mult, tensor_map(fi.incl_h, fi.incl_h)));
  LinMap lact = retarget(compose(to_a, mu), av);
  LinMap ract = retarget(compose(to_h, mu), hv);
  LinMap cocycle = retarget(compose(to_a, nu), av);
  LinMap dot = retarget(compose(to_h, nu), hv);
  return ExtendingDatum{std::move(parts.a),  std::move(parts.a_antipode), std::move(parts.h),
                        std::move(parts.unit_h), std::move(dot),         std::move(ract),
                        std::move(lact),         std::move(cocycle)};
}

Factorization factorize(const FactorizationInput& fi) {
  ExtendingDatum d = recover_datum(fi);
  UnifiedProduct p = build_unified_product(d);
  LinMap u = mult_map(fi);
  LinMap w = invert(u);
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  Report cert("factorization certificate");
  cert.add(fold("u-algebra-map", algebra_map_report(u, p.bialgebra.algebra, fi.e.algebra), {na, nh, na, nh}));
  cert.add(fold("u-coalgebra-map", coalgebra_map_report(u, p.bialgebra.coalgebra, fi.e.coalgebra), {na, nh}));
  cert.add(check_maps("A-embedding", compose(u, p.i_a), fi.incl_a));
  cert.add(check_maps("H-embedding", compose(u, p.i_h), fi.incl_h));
  if (fi.e_antipode) {
    const LinMap s = compose(w, compose(*fi.e_antipode, u));
    cert.add(check_maps("antipode", s, antipode_solve(p.bialgebra), {na, nh}));
  }
  return Factorization{std::move(d), std::move(p), std::move(u), std::move(w), std::move(cert)};
}

Bialgebra transfer_structure(const Bialgebra& e, const Coalgebra& l, const LinMap& u) {
  if (u.domain_dim() != l.dim() || u.codomain_dim() != e.dim()) {
    throw DimensionMismatch("transfer map has the wrong shape");
  }
  Report r = coalgebra_map_report(u, l, e.coalgebra);
  if (!r.all_passed()) throw PreconditionFailed("transfer map is not a coalgebra map", r);
  const LinMap w = invert(u);
  Algebra a{l.space, compose(w, compose(e.algebra.mult, tensor_map(u, u))), w.apply(e.algebra.unit),
            e.algebra.associative};
  a.mult = LinMap(a.mult.field(), tensor_space(l.space, l.space), l.space, a.mult.columns());
  return Bialgebra{l, std::move(a)};
}

Hopf transfer_structure(const Hopf& e, const Coalgebra& l, const LinMap& u) {
  Bialgebra b = transfer_structure(e.bialgebra, l, u);
  LinMap s = compose(invert(u), compose(e.antipode, u));
  return Hopf{std::move(b), retarget(s, l.space)};
}

Report roundtrip_check(const ExtendingDatum& d) {
  UnifiedProduct p = build_unified_product(d);
  std::optional<LinMap> antipode;
  if (d.a_antipode) {
    try {
      antipode = antipode_solve(p.bialgebra);
    } catch (const NoAntipode&) {
    }
  }
  FactorizationInput fi{p.bialgebra, antipode, p.i_a, p.i_h};
  ExtendingDatum back = recover_datum(fi);
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  Report r("round trip");
  r.add(CheckResult{"unit-H", back.unit_h == d.unit_h, {}, {}});
  r.add(check_maps("dot", back.dot, d.dot, {nh, nh}));
  r.add(check_maps("ract", back.ract, d.ract, {nh, na}));
  r.add(check_maps("lact", back.lact, d.lact, {nh, na}));
  r.add(check_maps("cocycle", back.cocycle, d.cocycle, {nh, nh}));
  return r;
}

DatumShape datum_shape(const ExtendingDatum& d) {
  return DatumShape{
      !d.ract.first_difference(trivial_ract(d.h, d.a.coalgebra)).has_value(),
      !d.lact.first_difference(trivial_lact(d.h, d.a.coalgebra)).has_value(),
      !d.cocycle.first_difference(trivial_cocycle(d.h, d.a)).has_value(),
  };
}

FactorizationInput group_factorization(const Field& field, const GroupTable& g,
                                       const std::vector<Index>& a_elements,
                                       const std::vector<Index>& h_elements) {
  Hopf e = group_algebra(field, g);
  auto inclusion = [&](const std::vector<Index>& elems) {
    std::vector<std::string> labels;
    std::vector<SparseVec> cols;
    for (Index x : elems) {
      if (x >= g.order()) throw Error("element index out of range");
      labels.push_back(g.labels()[x]);
      cols.push_back(basis_vector(field, x));
    }
    return LinMap(field, BasedSpace(labels), e.bialgebra.space(), std::move(cols));
  };
  return FactorizationInput{e.bialgebra, e.antipode, inclusion(a_elements), inclusion(h_elements)};
}

}  // namespace uprod
