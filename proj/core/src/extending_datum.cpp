#include "uprod/extending_datum.hpp"

#include <string>
#include <utility>

#include "check_util.hpp"
#include "uprod/errors.hpp"
#include "uprod/slot_tensor.hpp"

namespace uprod {

using detail::check_identity;
using detail::check_maps;
using detail::as_vector;
using detail::decode;
using detail::first_of;
using detail::fold;
using detail::require_shape;

namespace {

using Tuple = std::span<const Index>;

void require_shapes(const ExtendingDatum& d) {
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  require_shape(d.dot, nh * nh, nh, "dot");
  require_shape(d.ract, nh * na, nh, "right action");
  require_shape(d.lact, nh * na, na, "left action");
  require_shape(d.cocycle, nh * nh, na, "cocycle");
  if (d.a.algebra.dim() != na) throw DimensionMismatch("A: algebra and coalgebra dimensions differ");
  for (const auto& t : d.unit_h)
    if (t.index >= nh) throw DimensionMismatch("unit of H outside H");
}

LinMap unit_of(const Field& k, const BasedSpace& v, const SparseVec& u) {
  return LinMap::point(k, v, u);
}

/// Retargets f onto `codomain` (same dimension).
LinMap retarget(const LinMap& f, const BasedSpace& codomain) {
  return LinMap(f.field(), f.domain(), codomain, f.columns());
}

/// Shorthand for the structure maps of a datum inside slot computations.
struct Ops {
  const ExtendingDatum& d;
  std::size_t na, nh;
  explicit Ops(const ExtendingDatum& datum) : d(datum), na(datum.dim_a()), nh(datum.dim_h()) {}
  SlotTensor start() const { return SlotTensor(d.field()); }
};

}  // namespace

Algebra ExtendingDatum::h_algebra() const {
  return Algebra{h.space, dot, unit_h, Associativity::unknown};
}

Report validate_datum(const ExtendingDatum& d) {
  require_shapes(d);
  Report r("extending datum");
  const Field& k = d.field();
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  const BasedSpace& av = d.a.space();
  const BasedSpace& hv = d.h.space;
  const LinMap id_a = LinMap::identity(k, av);
  const LinMap id_h = LinMap::identity(k, hv);
  const LinMap eta_a = d.a.algebra.unit_map();
  const LinMap eta_h = unit_of(k, hv, d.unit_h);
  const LinMap& eps_a = d.a.coalgebra.counit;
  const LinMap& eps_h = d.h.counit;

  Report ab = check_bialgebra(d.a);
  r.add(CheckResult{"A-bialgebra", ab.all_passed(), {}, ab.failure_summary()});
  Report hc = check_coalgebra(d.h);
  r.add(CheckResult{"H-coalgebra", hc.all_passed(), {}, hc.failure_summary()});

  r.add(check_maps("H-unit-delta", compose(d.h.delta, eta_h), tensor_map(eta_h, eta_h)));
  r.add(check_maps("H-unit-counit", compose(eps_h, eta_h), LinMap::identity(k, BasedSpace::ground())));

  const Coalgebra ha = tensor_coalgebra(d.h, d.a.coalgebra);
  const Coalgebra hh = tensor_coalgebra(d.h, d.h);
  const Coalgebra& ac = d.a.coalgebra;
  r.add(fold("ract-coalgebra-map", coalgebra_map_report(d.ract, ha, d.h), {nh, na}));
  r.add(fold("lact-coalgebra-map", coalgebra_map_report(d.lact, ha, ac), {nh, na}));
  r.add(fold("cocycle-coalgebra-map", coalgebra_map_report(d.cocycle, hh, ac), {nh, nh}));
  r.add(fold("dot-coalgebra-map", coalgebra_map_report(d.dot, hh, d.h), {nh, nh}));

  // h |> 1_A = counit(h) 1_A
  r.add(check_maps("lact-unit-A", compose(d.lact, tensor_map(id_h, eta_a)),
                   compose(eta_a, eps_h)));
  // 1_H |> a = a
  r.add(check_maps("lact-unit-H", compose(d.lact, tensor_map(eta_h, id_a)), id_a));
  // 1_H <| a = counit(a) 1_H
  r.add(check_maps("ract-unit-H", compose(d.ract, tensor_map(eta_h, id_a)),
                   compose(eta_h, eps_a)));
  // h <| 1_A = h
  r.add(check_maps("ract-unit-A", compose(d.ract, tensor_map(id_h, eta_a)), id_h));
  // f(h, 1_H) = f(1_H, h) = counit(h) 1_A
  r.add(check_maps("cocycle-unit-right", compose(d.cocycle, tensor_map(id_h, eta_h)),
                   compose(eta_a, eps_h)));
  r.add(check_maps("cocycle-unit-left", compose(d.cocycle, tensor_map(eta_h, id_h)),
                   compose(eta_a, eps_h)));
  // 1_H . h = h . 1_H = h
  r.add(check_maps("dot-unit-left", compose(d.dot, tensor_map(eta_h, id_h)), id_h));
  r.add(check_maps("dot-unit-right", compose(d.dot, tensor_map(id_h, eta_h)), id_h));
  return r;
}

Report check_theorem1(const ExtendingDatum& d) {
  require_shapes(d);
  Report r("unified product conditions");
  const Ops o(d);
  const std::size_t na = o.na, nh = o.nh;
  const LinMap& dA = d.a.coalgebra.delta;
  const LinMap& dH = d.h.delta;
  const LinMap& mA = d.a.algebra.mult;
  const LinMap& dot = d.dot;
  const LinMap& ract = d.ract;
  const LinMap& lact = d.lact;
  const LinMap& f = d.cocycle;
  const LinMap& eH = d.h.counit;

  // 2a
  {
    CheckResult delta = check_identity(
        "delta", {nh, nh},
        [&](Tuple t) {
          auto s = o.start();
          s.put("g", nh, t[0]).put("h", nh, t[1]).apply(dot, {"g", "h"}, "gh").split("gh", dH, {"x", "y"});
          return s.collect({"x", "y"});
        },
        [&](Tuple t) {
          auto s = o.start();
          s.put("g", nh, t[0]).put("h", nh, t[1]).split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
          s.apply(dot, {"g1", "h1"}, "x").apply(dot, {"g2", "h2"}, "y");
          return s.collect({"x", "y"});
        });
    CheckResult counit = check_identity(
        "counit", {nh, nh},
        [&](Tuple t) {
          auto s = o.start();
          s.put("g", nh, t[0]).put("h", nh, t[1]).apply(dot, {"g", "h"}, "gh").contract(eH, {"gh"});
          return as_vector(s.value());
        },
        [&](Tuple t) {
          auto s = o.start();
          s.put("g", nh, t[0]).put("h", nh, t[1]).contract(eH, {"g"}).contract(eH, {"h"});
          return as_vector(s.value());
        });
    r.add(first_of("2a", {std::move(delta), std::move(counit)}));
  }

  // 2b
  {
    CheckResult module = check_identity(
        "module", {nh, na, na},
        [&](Tuple t) {
          auto s = o.start();
          s.put("h", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
          s.apply(ract, {"h", "a"}, "x").apply(ract, {"x", "b"}, "y");
          return s.collect({"y"});
        },
        [&](Tuple t) {
          auto s = o.start();
          s.put("h", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
          s.apply(mA, {"a", "b"}, "ab").apply(ract, {"h", "ab"}, "y");
          return s.collect({"y"});
        });
    CheckResult unit = check_identity(
        "unit", {nh},
        [&](Tuple t) {
          auto s = o.start();
          s.put("h", nh, t[0]).put("one", na, d.a.algebra.unit).apply(ract, {"h", "one"}, "y");
          return s.collect({"y"});
        },
        [&](Tuple t) { return basis_vector(d.field(), t[0]); });
    r.add(first_of("2b", {std::move(module), std::move(unit)}));
  }

  // 2c
  r.add(check_identity(
      "2c", {nh, nh, nh},
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("l", nh, t[2]);
        s.apply(dot, {"g", "h"}, "gh").apply(dot, {"gh", "l"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("l", nh, t[2]);
        s.split("h", dH, {"h1", "h2"}).split("l", dH, {"l1", "l2"});
        s.apply(f, {"h1", "l1"}, "c").apply(ract, {"g", "c"}, "x");
        s.apply(dot, {"h2", "l2"}, "hl").apply(dot, {"x", "hl"}, "y");
        return s.collect({"y"});
      }));

  // 2d
  r.add(check_identity(
      "2d", {nh, na, na},
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
        s.apply(mA, {"a", "b"}, "ab").apply(lact, {"g", "ab"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("a", dA, {"a1", "a2"});
        s.apply(lact, {"g1", "a1"}, "x").apply(ract, {"g2", "a2"}, "g'");
        s.apply(lact, {"g'", "b"}, "z").apply(mA, {"x", "z"}, "y");
        return s.collect({"y"});
      }));

  // 2e
  r.add(check_identity(
      "2e", {nh, nh, na},
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.apply(dot, {"g", "h"}, "gh").apply(ract, {"gh", "a"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.split("h", dH, {"h1", "h2"}).split("a", dA, {"a1", "a2"});
        s.apply(lact, {"h1", "a1"}, "c").apply(ract, {"g", "c"}, "x");
        s.apply(ract, {"h2", "a2"}, "z").apply(dot, {"x", "z"}, "y");
        return s.collect({"y"});
      }));

  // 2f
  r.add(check_identity(
      "2f", {nh, nh, na},
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2", "h3"}).split("a", dA, {"a1", "a2", "a3"});
        s.apply(lact, {"h1", "a1"}, "p").apply(lact, {"g1", "p"}, "x");
        s.apply(lact, {"h2", "a2"}, "q").apply(ract, {"g2", "q"}, "r");
        s.apply(ract, {"h3", "a3"}, "w").apply(f, {"r", "w"}, "z");
        s.apply(mA, {"x", "z"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(f, {"g1", "h1"}, "x").apply(dot, {"g2", "h2"}, "gh").apply(lact, {"gh", "a"}, "z");
        s.apply(mA, {"x", "z"}, "y");
        return s.collect({"y"});
      }));

  // 2g
  r.add(check_identity(
      "2g", {nh, nh, nh},
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("l", nh, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2", "h3"}).split("l", dH, {"l1", "l2", "l3"});
        s.apply(f, {"h1", "l1"}, "p").apply(lact, {"g1", "p"}, "x");
        s.apply(f, {"h2", "l2"}, "q").apply(ract, {"g2", "q"}, "r");
        s.apply(dot, {"h3", "l3"}, "w").apply(f, {"r", "w"}, "z");
        s.apply(mA, {"x", "z"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("l", nh, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(f, {"g1", "h1"}, "x").apply(dot, {"g2", "h2"}, "gh").apply(f, {"gh", "l"}, "z");
        s.apply(mA, {"x", "z"}, "y");
        return s.collect({"y"});
      }));

  // 2h
  r.add(check_identity(
      "2h", {nh, na},
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("a", na, t[1]).split("g", dH, {"g1", "g2"}).split("a", dA, {"a1", "a2"});
        s.apply(ract, {"g1", "a1"}, "x").apply(lact, {"g2", "a2"}, "y");
        return s.collect({"x", "y"});
      },
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("a", na, t[1]).split("g", dH, {"g1", "g2"}).split("a", dA, {"a1", "a2"});
        s.apply(ract, {"g2", "a2"}, "x").apply(lact, {"g1", "a1"}, "y");
        return s.collect({"x", "y"});
      }));

  // 2i
  r.add(check_identity(
      "2i", {nh, nh},
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(dot, {"g1", "h1"}, "x").apply(f, {"g2", "h2"}, "y");
        return s.collect({"x", "y"});
      },
      [&](Tuple t) {
        auto s = o.start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(dot, {"g2", "h2"}, "x").apply(f, {"g1", "h1"}, "y");
        return s.collect({"x", "y"});
      }));
  return r;
}

Bialgebra raw_unified_product(const ExtendingDatum& d) {
  require_shapes(d);
  const Field& k = d.field();
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  const std::size_t n = na * nh;
  const LinMap& dA = d.a.coalgebra.delta;
  const LinMap& dH = d.h.delta;
  const LinMap& mA = d.a.algebra.mult;

  Coalgebra c = tensor_coalgebra(d.a.coalgebra, d.h);
  std::vector<SparseVec> cols(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      SlotTensor s(k);
      s.put("a", na, x / nh).put("h", nh, x % nh).put("c", na, y / nh).put("g", nh, y % nh);
      s.split("h", dH, {"h1", "h2", "h3"}).split("c", dA, {"c1", "c2", "c3"}).split("g", dH, {"g1", "g2"});
      s.apply(d.lact, {"h1", "c1"}, "p").apply(d.ract, {"h2", "c2"}, "r");
      s.apply(d.cocycle, {"r", "g1"}, "q").apply(d.ract, {"h3", "c3"}, "w");
      s.apply(d.dot, {"w", "g2"}, "outH");
      s.apply(mA, {"a", "p"}, "ap").apply(mA, {"ap", "q"}, "outA");
      cols[x * n + y] = s.collect({"outA", "outH"});
    }
  }
  LinMap mult(k, tensor_space(c.space, c.space), c.space, std::move(cols));
  Algebra a{c.space, std::move(mult), tensor_vectors(d.a.algebra.unit, d.unit_h, nh),
            Associativity::unknown};
  return Bialgebra{std::move(c), std::move(a)};
}

UnifiedProduct build_unified_product(const ExtendingDatum& d) {
  Report pre = validate_datum(d);
  pre.merge(check_theorem1(d));
  if (!pre.all_passed()) throw PreconditionFailed("extending datum does not give a bialgebra", pre);

  const Field& k = d.field();
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  Bialgebra b = raw_unified_product(d);
  // The nine conditions make the product associative.
  b.algebra.associative = Associativity::yes;
  const BasedSpace v = b.space();

  std::vector<SparseVec> ia(na), ih(nh), pi(na * nh), co(na * nh);
  for (Index a = 0; a < na; ++a) ia[a] = tensor_vectors(basis_vector(k, a), d.unit_h, nh);
  for (Index h = 0; h < nh; ++h) ih[h] = tensor_vectors(d.a.algebra.unit, basis_vector(k, h), nh);
  for (Index x = 0; x < na * nh; ++x) {
    const Scalar e = d.a.coalgebra.counit.entry(0, x / nh);
    if (!e.is_zero()) pi[x] = {{x % nh, e}};
    SlotTensor s(k);
    s.put("a", na, x / nh).put("h", nh, x % nh).split("h", d.h.delta, {"h1", "h2"});
    co[x] = s.collect({"a", "h1", "h2"});
  }
  UnifiedProduct p{std::move(b),
                   d,
                   LinMap(k, d.a.space(), v, std::move(ia)),
                   LinMap(k, d.h.space, v, std::move(ih)),
                   LinMap(k, v, d.h.space, std::move(pi)),
                   LinMap(k, v, tensor_space(v, d.h.space), std::move(co)),
                   std::nullopt};
  Report cross = check_cross_relations(p);
  if (!cross.all_passed()) throw PreconditionFailed("product violates the cross relations", cross);
  return p;
}

Report check_cross_relations(const UnifiedProduct& p) {
  const ExtendingDatum& d = p.datum;
  const Field& k = d.field();
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  const LinMap& m = p.bialgebra.algebra.mult;
  const SparseVec& one_a = d.a.algebra.unit;
  const SparseVec& one_h = d.unit_h;
  Report r("cross relations");

  auto product = [&](const SparseVec& a, const SparseVec& h, const SparseVec& c, const SparseVec& g) {
    SlotTensor s(k);
    s.put("a", na, a).put("h", nh, h).put("c", na, c).put("g", nh, g).apply(m, {"a", "h", "c", "g"}, "y");
    return s.collect({"y"});
  };
  auto e = [&](Index i) { return basis_vector(k, i); };

  r.add(check_identity(
      "cross-A-left", {na, na, nh},
      [&](Tuple t) { return product(e(t[0]), one_h, e(t[1]), e(t[2])); },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("a", na, t[0]).put("c", na, t[1]).put("g", nh, t[2]).apply(d.a.algebra.mult, {"a", "c"}, "ac");
        return s.collect({"ac", "g"});
      }));
  r.add(check_identity(
      "cross-H-right", {na, nh, nh},
      [&](Tuple t) { return product(e(t[0]), e(t[1]), one_a, e(t[2])); },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("a", na, t[0]).put("g", nh, t[1]).put("h", nh, t[2]);
        s.split("g", d.h.delta, {"g1", "g2"}).split("h", d.h.delta, {"h1", "h2"});
        s.apply(d.cocycle, {"g1", "h1"}, "f").apply(d.a.algebra.mult, {"a", "f"}, "x");
        s.apply(d.dot, {"g2", "h2"}, "y");
        return s.collect({"x", "y"});
      }));
  r.add(check_identity(
      "cross-A-right", {na, nh, na},
      [&](Tuple t) { return product(e(t[0]), e(t[1]), e(t[2]), one_h); },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("a", na, t[0]).put("g", nh, t[1]).put("b", na, t[2]);
        s.split("g", d.h.delta, {"g1", "g2"}).split("b", d.a.coalgebra.delta, {"b1", "b2"});
        s.apply(d.lact, {"g1", "b1"}, "p").apply(d.a.algebra.mult, {"a", "p"}, "x");
        s.apply(d.ract, {"g2", "b2"}, "y");
        return s.collect({"x", "y"});
      }));
  r.add(check_identity(
      "generator", {na, nh},
      [&](Tuple t) { return product(e(t[0]), one_h, one_a, e(t[1])); },
      [&](Tuple t) { return basis_vector(k, static_cast<Index>(t[0] * nh + t[1])); }));
  return r;
}

LinMap antipode_prext(const UnifiedProduct& p, const LinMap& s_h) {
  const ExtendingDatum& d = p.datum;
  const Field& k = d.field();
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  Report pre("antipode formula preconditions");
  pre.add(CheckResult{"A-antipode", d.a_antipode.has_value(), {}, d.a_antipode ? "" : "A carries no antipode"});
  if (s_h.domain_dim() != nh || s_h.codomain_dim() != nh) {
    throw DimensionMismatch("antipode of H has the wrong shape");
  }
  pre.add(CheckResult{"antimap", is_coalgebra_antimap(s_h, d.h, d.h), {}, {}});
  const LinMap id_h = LinMap::identity(k, d.h.space);
  const Algebra ha = d.h_algebra();
  const LinMap e = convolution_unit(d.h, ha);
  pre.add(check_maps("unit-left", convolution(id_h, s_h, d.h, ha), e));
  pre.add(check_maps("unit-right", convolution(s_h, id_h, d.h, ha), e));
  if (!pre.all_passed()) throw PreconditionFailed("antipode formula does not apply", pre);

  const LinMap& sa = *d.a_antipode;
  const LinMap& m = p.bialgebra.algebra.mult;
  const std::size_t n = na * nh;
  std::vector<SparseVec> cols(n);
  for (Index x = 0; x < n; ++x) {
    SlotTensor s(k);
    s.put("a", na, x / nh).put("g", nh, x % nh).split("g", d.h.delta, {"g1", "g2", "g3"});
    s.apply(s_h, {"g2"}, "s2").apply(d.cocycle, {"s2", "g3"}, "fy").apply(sa, {"fy"}, "left");
    s.apply(s_h, {"g1"}, "s1").apply(sa, {"a"}, "sa").put("one", nh, d.unit_h);
    s.apply(m, {"left", "s1", "sa", "one"}, "y");
    cols[x] = s.collect({"y"});
  }
  return LinMap(k, p.bialgebra.space(), p.bialgebra.space(), std::move(cols));
}

LinMap trivial_ract(const Coalgebra& h, const Coalgebra& a) {
  const Field& k = h.field();
  return retarget(tensor_map(LinMap::identity(k, h.space), a.counit), h.space);
}

LinMap trivial_lact(const Coalgebra& h, const Coalgebra& a) {
  const Field& k = h.field();
  return retarget(tensor_map(h.counit, LinMap::identity(k, a.space)), a.space);
}

LinMap trivial_cocycle(const Coalgebra& h, const Bialgebra& a) {
  const LinMap ee(h.field(), tensor_space(h.space, h.space), BasedSpace::ground(),
                  tensor_map(h.counit, h.counit).columns());
  return compose(a.algebra.unit_map(), ee);
}

ExtendingDatum trivial_datum(const Bialgebra& a, const Bialgebra& h, std::optional<LinMap> a_antipode) {
  return ExtendingDatum{a,
                        std::move(a_antipode),
                        h.coalgebra,
                        h.algebra.unit,
                        h.algebra.mult,
                        trivial_ract(h.coalgebra, a.coalgebra),
                        trivial_lact(h.coalgebra, a.coalgebra),
                        trivial_cocycle(h.coalgebra, a)};
}

}  // namespace uprod
