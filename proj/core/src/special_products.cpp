#include "uprod/special_products.hpp"

#include <stdexcept>

#include "check_util.hpp"
#include "uprod/errors.hpp"
#include "uprod/slot_tensor.hpp"

namespace uprod {

using detail::check_identity;
using detail::check_maps;
using detail::first_of;
using detail::fold;
using detail::require_shape;

namespace {

using Tuple = std::span<const Index>;

void require_shapes(const MatchedPair& mp) {
  const std::size_t na = mp.a.dim(), nh = mp.h.dim();
  require_shape(mp.ract, nh * na, nh, "right action");
  require_shape(mp.lact, nh * na, na, "left action");
}

void require_shapes(const CrossedDatum& cd) {
  const std::size_t na = cd.a.dim(), nh = cd.h.dim();
  require_shape(cd.lact, nh * na, na, "left action");
  require_shape(cd.cocycle, nh * nh, na, "cocycle");
}

CheckResult summary(std::string id, const Report& r) {
  return CheckResult{std::move(id), r.all_passed(), {}, r.all_passed() ? "" : r.failure_summary()};
}

/// Checks that `built` equals `direct`; a mismatch is an internal error.
void cross_check(const LinMap& built, const LinMap& direct, const char* what) {
  if (built.first_difference(direct)) {
    throw std::logic_error(std::string(what) + ": product formula disagrees with the unified product");
  }
}

}  // namespace

Report check_matched_pair(const MatchedPair& mp) {
  require_shapes(mp);
  const Field& k = mp.a.field();
  const std::size_t na = mp.a.dim(), nh = mp.h.dim();
  const LinMap& dA = mp.a.coalgebra.delta;
  const LinMap& dH = mp.h.coalgebra.delta;
  const LinMap& mA = mp.a.algebra.mult;
  const LinMap& mH = mp.h.algebra.mult;
  const SparseVec& one_a = mp.a.algebra.unit;
  const SparseVec& one_h = mp.h.algebra.unit;
  auto start = [&] { return SlotTensor(k); };
  Report r("matched pair");

  r.add(summary("A-bialgebra", check_bialgebra(mp.a)));
  r.add(summary("H-bialgebra", check_bialgebra(mp.h)));
  const Coalgebra ha = tensor_coalgebra(mp.h.coalgebra, mp.a.coalgebra);
  r.add(fold("lact-coalgebra-map", coalgebra_map_report(mp.lact, ha, mp.a.coalgebra), {nh, na}));
  r.add(fold("ract-coalgebra-map", coalgebra_map_report(mp.ract, ha, mp.h.coalgebra), {nh, na}));

  r.add(first_of(
      "A-module",
      {check_identity(
           "unit", {na},
           [&](Tuple t) {
             auto s = start();
             s.put("one", nh, one_h).put("a", na, t[0]).apply(mp.lact, {"one", "a"}, "y");
             return s.collect({"y"});
           },
           [&](Tuple t) { return basis_vector(k, t[0]); }),
       check_identity(
           "associativity", {nh, nh, na},
           [&](Tuple t) {
             auto s = start();
             s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
             s.apply(mp.lact, {"h", "a"}, "x").apply(mp.lact, {"g", "x"}, "y");
             return s.collect({"y"});
           },
           [&](Tuple t) {
             auto s = start();
             s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
             s.apply(mH, {"g", "h"}, "gh").apply(mp.lact, {"gh", "a"}, "y");
             return s.collect({"y"});
           })}));

  r.add(first_of(
      "H-module",
      {check_identity(
           "unit", {nh},
           [&](Tuple t) {
             auto s = start();
             s.put("h", nh, t[0]).put("one", na, one_a).apply(mp.ract, {"h", "one"}, "y");
             return s.collect({"y"});
           },
           [&](Tuple t) { return basis_vector(k, t[0]); }),
       check_identity(
           "associativity", {nh, na, na},
           [&](Tuple t) {
             auto s = start();
             s.put("h", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
             s.apply(mp.ract, {"h", "a"}, "x").apply(mp.ract, {"x", "b"}, "y");
             return s.collect({"y"});
           },
           [&](Tuple t) {
             auto s = start();
             s.put("h", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
             s.apply(mA, {"a", "b"}, "ab").apply(mp.ract, {"h", "ab"}, "y");
             return s.collect({"y"});
           })}));

  r.add(first_of(
      "mp1",
      {check_identity(
           "H-unit", {na},
           [&](Tuple t) {
             auto s = start();
             s.put("one", nh, one_h).put("a", na, t[0]).apply(mp.ract, {"one", "a"}, "y");
             return s.collect({"y"});
           },
           [&](Tuple t) {
             auto s = start();
             s.put("a", na, t[0]).contract(mp.a.coalgebra.counit, {"a"}).put("one", nh, one_h);
             return s.collect({"one"});
           }),
       check_identity(
           "A-unit", {nh},
           [&](Tuple t) {
             auto s = start();
             s.put("h", nh, t[0]).put("one", na, one_a).apply(mp.lact, {"h", "one"}, "y");
             return s.collect({"y"});
           },
           [&](Tuple t) {
             auto s = start();
             s.put("h", nh, t[0]).contract(mp.h.coalgebra.counit, {"h"}).put("one", na, one_a);
             return s.collect({"one"});
           })}));

  r.add(check_identity(
      "mp2", {nh, na, na},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
        s.apply(mA, {"a", "b"}, "ab").apply(mp.lact, {"g", "ab"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("a", dA, {"a1", "a2"});
        s.apply(mp.lact, {"g1", "a1"}, "x").apply(mp.ract, {"g2", "a2"}, "g'");
        s.apply(mp.lact, {"g'", "b"}, "z").apply(mA, {"x", "z"}, "y");
        return s.collect({"y"});
      }));

  r.add(check_identity(
      "mp3", {nh, nh, na},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.apply(mH, {"g", "h"}, "gh").apply(mp.ract, {"gh", "a"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.split("h", dH, {"h1", "h2"}).split("a", dA, {"a1", "a2"});
        s.apply(mp.lact, {"h1", "a1"}, "c").apply(mp.ract, {"g", "c"}, "x");
        s.apply(mp.ract, {"h2", "a2"}, "z").apply(mH, {"x", "z"}, "y");
        return s.collect({"y"});
      }));

  r.add(check_identity(
      "mp4", {nh, na},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]);
        s.split("g", dH, {"g1", "g2"}).split("a", dA, {"a1", "a2"});
        s.apply(mp.ract, {"g1", "a1"}, "x").apply(mp.lact, {"g2", "a2"}, "y");
        return s.collect({"x", "y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]);
        s.split("g", dH, {"g1", "g2"}).split("a", dA, {"a1", "a2"});
        s.apply(mp.ract, {"g2", "a2"}, "x").apply(mp.lact, {"g1", "a1"}, "y");
        return s.collect({"x", "y"});
      }));
  return r;
}

ExtendingDatum matched_pair_datum(const MatchedPair& mp) {
  require_shapes(mp);
  return ExtendingDatum{mp.a,
                        mp.a_antipode,
                        mp.h.coalgebra,
                        mp.h.algebra.unit,
                        mp.h.algebra.mult,
                        mp.ract,
                        mp.lact,
                        trivial_cocycle(mp.h.coalgebra, mp.a)};
}

LinMap bicrossed_mult(const MatchedPair& mp) {
  require_shapes(mp);
  const Field& k = mp.a.field();
  const std::size_t na = mp.a.dim(), nh = mp.h.dim(), n = na * nh;
  std::vector<SparseVec> cols(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      SlotTensor s(k);
      s.put("a", na, x / nh).put("h", nh, x % nh).put("c", na, y / nh).put("g", nh, y % nh);
      s.split("h", mp.h.coalgebra.delta, {"h1", "h2"}).split("c", mp.a.coalgebra.delta, {"c1", "c2"});
      s.apply(mp.lact, {"h1", "c1"}, "p").apply(mp.a.algebra.mult, {"a", "p"}, "outA");
      s.apply(mp.ract, {"h2", "c2"}, "q").apply(mp.h.algebra.mult, {"q", "g"}, "outH");
      cols[x * n + y] = s.collect({"outA", "outH"});
    }
  }
  const BasedSpace v = tensor_space(mp.a.space(), mp.h.space());
  return LinMap(k, tensor_space(v, v), v, std::move(cols));
}

UnifiedProduct build_bicrossed(const MatchedPair& mp) {
  Report pre = check_matched_pair(mp);
  if (!pre.all_passed()) throw PreconditionFailed("not a matched pair", pre);
  UnifiedProduct p = build_unified_product(matched_pair_datum(mp));
  cross_check(p.bialgebra.algebra.mult, bicrossed_mult(mp), "bicrossed product");

  if (mp.a_antipode && mp.h_antipode) {
    const Field& k = mp.a.field();
    const std::size_t na = mp.a.dim(), nh = mp.h.dim(), n = na * nh;
    std::vector<SparseVec> cols(n);
    for (Index x = 0; x < n; ++x) {
      SlotTensor s(k);
      s.put("one_a", na, mp.a.algebra.unit).put("h", nh, x % nh).apply(*mp.h_antipode, {"h"}, "sh");
      s.put("a", na, x / nh).apply(*mp.a_antipode, {"a"}, "sa").put("one_h", nh, mp.h.algebra.unit);
      s.apply(p.bialgebra.algebra.mult, {"one_a", "sh", "sa", "one_h"}, "y");
      cols[x] = s.collect({"y"});
    }
    LinMap s(k, p.bialgebra.space(), p.bialgebra.space(), std::move(cols));
    cross_check(s, antipode_solve(p.bialgebra), "bicrossed antipode");
    p.antipode = std::move(s);
  }
  return p;
}

Report check_crossed(const CrossedDatum& cd) {
  require_shapes(cd);
  const Field& k = cd.a.field();
  const std::size_t na = cd.a.dim(), nh = cd.h.dim();
  const LinMap& dH = cd.h.coalgebra.delta;
  const LinMap& mA = cd.a.algebra.mult;
  const LinMap& mH = cd.h.algebra.mult;
  const LinMap& f = cd.cocycle;
  const LinMap eta_a = cd.a.algebra.unit_map();
  const LinMap eta_h = cd.h.algebra.unit_map();
  const LinMap id_a = LinMap::identity(k, cd.a.space());
  const LinMap id_h = LinMap::identity(k, cd.h.space());
  const LinMap& eps_h = cd.h.coalgebra.counit;
  auto start = [&] { return SlotTensor(k); };
  Report r("crossed datum");

  r.add(summary("A-bialgebra", check_bialgebra(cd.a)));
  r.add(summary("H-bialgebra", check_bialgebra(cd.h)));
  const Coalgebra ha = tensor_coalgebra(cd.h.coalgebra, cd.a.coalgebra);
  const Coalgebra hh = tensor_coalgebra(cd.h.coalgebra, cd.h.coalgebra);
  r.add(fold("lact-coalgebra-map", coalgebra_map_report(cd.lact, ha, cd.a.coalgebra), {nh, na}));
  r.add(fold("cocycle-coalgebra-map", coalgebra_map_report(f, hh, cd.a.coalgebra), {nh, nh}));

  r.add(first_of("normalization",
                 {check_maps("lact-unit-A", compose(cd.lact, tensor_map(id_h, eta_a)), compose(eta_a, eps_h)),
                  check_maps("lact-unit-H", compose(cd.lact, tensor_map(eta_h, id_a)), id_a),
                  check_maps("cocycle-unit-right", compose(f, tensor_map(id_h, eta_h)), compose(eta_a, eps_h)),
                  check_maps("cocycle-unit-left", compose(f, tensor_map(eta_h, id_h)), compose(eta_a, eps_h))}));

  r.add(check_identity(
      "measuring", {nh, na, na},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]);
        s.apply(mA, {"a", "b"}, "ab").apply(cd.lact, {"g", "ab"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]).put("b", na, t[2]).split("g", dH, {"g1", "g2"});
        s.apply(cd.lact, {"g1", "a"}, "x").apply(cd.lact, {"g2", "b"}, "z").apply(mA, {"x", "z"}, "y");
        return s.collect({"y"});
      }));

  r.add(check_identity(
      "twisted-module", {nh, nh, na},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(cd.lact, {"h1", "a"}, "x").apply(cd.lact, {"g1", "x"}, "z");
        s.apply(f, {"g2", "h2"}, "w").apply(mA, {"z", "w"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("a", na, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(f, {"g1", "h1"}, "w").apply(mH, {"g2", "h2"}, "gh").apply(cd.lact, {"gh", "a"}, "z");
        s.apply(mA, {"w", "z"}, "y");
        return s.collect({"y"});
      }));

  r.add(check_identity(
      "cocycle", {nh, nh, nh},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("l", nh, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"}).split("l", dH, {"l1", "l2"});
        s.apply(f, {"h1", "l1"}, "x").apply(cd.lact, {"g1", "x"}, "z");
        s.apply(mH, {"h2", "l2"}, "hl").apply(f, {"g2", "hl"}, "w").apply(mA, {"z", "w"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]).put("l", nh, t[2]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(f, {"g1", "h1"}, "z").apply(mH, {"g2", "h2"}, "gh").apply(f, {"gh", "l"}, "w");
        s.apply(mA, {"z", "w"}, "y");
        return s.collect({"y"});
      }));

  r.add(check_identity(
      "c", {nh, na},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]).split("g", dH, {"g1", "g2"});
        s.apply(cd.lact, {"g2", "a"}, "y");
        return s.collect({"g1", "y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("a", na, t[1]).split("g", dH, {"g1", "g2"});
        s.apply(cd.lact, {"g1", "a"}, "y");
        return s.collect({"g2", "y"});
      }));

  r.add(check_identity(
      "d", {nh, nh},
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(mH, {"g1", "h1"}, "x").apply(f, {"g2", "h2"}, "y");
        return s.collect({"x", "y"});
      },
      [&](Tuple t) {
        auto s = start();
        s.put("g", nh, t[0]).put("h", nh, t[1]);
        s.split("g", dH, {"g1", "g2"}).split("h", dH, {"h1", "h2"});
        s.apply(mH, {"g2", "h2"}, "x").apply(f, {"g1", "h1"}, "y");
        return s.collect({"x", "y"});
      }));
  return r;
}

ExtendingDatum crossed_datum(const CrossedDatum& cd) {
  require_shapes(cd);
  return ExtendingDatum{cd.a,
                        cd.a_antipode,
                        cd.h.coalgebra,
                        cd.h.algebra.unit,
                        cd.h.algebra.mult,
                        trivial_ract(cd.h.coalgebra, cd.a.coalgebra),
                        cd.lact,
                        cd.cocycle};
}

LinMap crossed_mult(const CrossedDatum& cd) {
  require_shapes(cd);
  const Field& k = cd.a.field();
  const std::size_t na = cd.a.dim(), nh = cd.h.dim(), n = na * nh;
  const LinMap& mA = cd.a.algebra.mult;
  std::vector<SparseVec> cols(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      SlotTensor s(k);
      s.put("a", na, x / nh).put("h", nh, x % nh).put("c", na, y / nh).put("g", nh, y % nh);
      s.split("h", cd.h.coalgebra.delta, {"h1", "h2", "h3"}).split("g", cd.h.coalgebra.delta, {"g1", "g2"});
      s.apply(cd.lact, {"h1", "c"}, "p").apply(cd.cocycle, {"h2", "g1"}, "q");
      s.apply(mA, {"a", "p"}, "ap").apply(mA, {"ap", "q"}, "outA");
      s.apply(cd.h.algebra.mult, {"h3", "g2"}, "outH");
      cols[x * n + y] = s.collect({"outA", "outH"});
    }
  }
  const BasedSpace v = tensor_space(cd.a.space(), cd.h.space());
  return LinMap(k, tensor_space(v, v), v, std::move(cols));
}

UnifiedProduct build_crossed(const CrossedDatum& cd) {
  Report pre = check_crossed(cd);
  if (!pre.all_passed()) throw PreconditionFailed("crossed product is not a bialgebra", pre);
  UnifiedProduct p = build_unified_product(crossed_datum(cd));
  cross_check(p.bialgebra.algebra.mult, crossed_mult(cd), "crossed product");
  return p;
}

ExtendingDatum deform_matched_pair(const MatchedPair& mp, const LazyCocycle& u) {
  require_shapes(mp);
  const Field& k = mp.a.field();
  const std::size_t na = mp.a.dim(), nh = mp.h.dim();
  const LinMap& dA = mp.a.coalgebra.delta;
  const LinMap& dH = mp.h.coalgebra.delta;
  const LinMap& mA = mp.a.algebra.mult;
  const LinMap& mH = mp.h.algebra.mult;

  Report pre("matched pair deformation");
  pre.add(CheckResult{"A-antipode", mp.a_antipode.has_value(), {}, mp.a_antipode ? "" : "A carries no antipode"});
  pre.merge(lazy_cocycle_report(u.map, mp.h.coalgebra, mp.h.algebra.unit, mp.a));
  pre.add(check_identity(
      "ract-absorbs-cocycle", {nh, nh},
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).apply(u.map, {"g"}, "ug").apply(mp.ract, {"h", "ug"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).contract(mp.h.coalgebra.counit, {"g"});
        return s.collect({"h"});
      }));
  if (!pre.all_passed()) throw PreconditionFailed("cannot deform the matched pair", pre);
  const LinMap& sa = *mp.a_antipode;

  std::vector<SparseVec> lact(nh * na), dot(nh * nh), f(nh * nh);
  for (Index h = 0; h < nh; ++h) {
    for (Index c = 0; c < na; ++c) {
      SlotTensor s(k);
      s.put("h", nh, h).put("c", na, c).split("h", dH, {"h1", "h2", "h3"}).split("c", dA, {"c1", "c2"});
      s.apply(u.map, {"h1"}, "x").apply(mp.lact, {"h2", "c1"}, "y");
      s.apply(mp.ract, {"h3", "c2"}, "r").apply(u.map, {"r"}, "ur").apply(sa, {"ur"}, "z");
      s.apply(mA, {"x", "y"}, "xy").apply(mA, {"xy", "z"}, "out");
      lact[h * na + c] = s.collect({"out"});
    }
    for (Index g = 0; g < nh; ++g) {
      SlotTensor s(k);
      s.put("h", nh, h).put("g", nh, g).split("g", dH, {"g1", "g2"});
      s.apply(u.map, {"g1"}, "ug").apply(mp.ract, {"h", "ug"}, "x").apply(mH, {"x", "g2"}, "out");
      dot[h * nh + g] = s.collect({"out"});
    }
  }
  const LinMap dot_map(k, tensor_space(mp.h.space(), mp.h.space()), mp.h.space(), std::move(dot));
  for (Index h = 0; h < nh; ++h) {
    for (Index g = 0; g < nh; ++g) {
      SlotTensor s(k);
      s.put("h", nh, h).put("g", nh, g).split("h", dH, {"h1", "h2", "h3"}).split("g", dH, {"g1", "g2"});
      s.apply(u.map, {"h1"}, "x").apply(u.map, {"g1"}, "ug").apply(mp.lact, {"h2", "ug"}, "y");
      s.apply(dot_map, {"h3", "g2"}, "hg").apply(u.map, {"hg"}, "uhg").apply(sa, {"uhg"}, "z");
      s.apply(mA, {"x", "y"}, "xy").apply(mA, {"xy", "z"}, "out");
      f[h * nh + g] = s.collect({"out"});
    }
  }
  const BasedSpace& av = mp.a.space();
  const BasedSpace& hv = mp.h.space();
  return ExtendingDatum{mp.a,
                        mp.a_antipode,
                        mp.h.coalgebra,
                        mp.h.algebra.unit,
                        dot_map,
                        mp.ract,
                        LinMap(k, tensor_space(hv, av), av, std::move(lact)),
                        LinMap(k, tensor_space(hv, hv), av, std::move(f))};
}

}  // namespace uprod
