#include "uprod/classification.hpp"

#include <stdexcept>

#include "check_util.hpp"
#include "uprod/errors.hpp"
#include "uprod/slot_tensor.hpp"

namespace uprod {

using detail::check_identity;
using detail::check_maps;
using detail::fold;

namespace {

using Tuple = std::span<const Index>;

void require_same_shape(const ExtendingDatum& a, const ExtendingDatum& b) {
  if (a.dim_a() != b.dim_a() || a.dim_h() != b.dim_h()) {
    throw DimensionMismatch("the two data do not share A and H");
  }
  if (a.field() != b.field()) throw FieldMismatch("the two data live over different fields");
}

/// A-antipode and the three cocycle checks; false when any fails.
bool add_cocycle_checks(Report& r, const ExtendingDatum& base, const LazyCocycle& u) {
  r.add(CheckResult{"A-antipode", base.a_antipode.has_value(), {}, base.a_antipode ? "" : "A carries no antipode"});
  if (!base.a_antipode) return false;
  r.merge(lazy_cocycle_report(u.map, base.h, base.unit_h, base.a), "cocycle-");
  return r.all_passed();
}

/// Appends the C-conditions; returns whether all passed.
bool add_conditions(Report& r, const ExtendingDatum& base, const ExtendingDatum& primed, const LazyCocycle& u) {
  if (!add_cocycle_checks(r, base, u)) return false;
  const Field& k = base.field();
  const std::size_t na = base.dim_a(), nh = base.dim_h();
  const LinMap& dA = base.a.coalgebra.delta;
  const LinMap& dH = base.h.delta;
  const LinMap& mA = base.a.algebra.mult;
  const LinMap& sa = *base.a_antipode;
  const LinMap& um = u.map;

  r.add(check_maps("ract-equal", primed.ract, base.ract, {nh, na}));
  if (!r.all_passed()) return false;

  r.add(check_identity(
      "C2", {nh, na},
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("c", na, t[1]).apply(primed.lact, {"h", "c"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("c", na, t[1]).split("h", dH, {"h1", "h2", "h3"}).split("c", dA, {"c1", "c2"});
        s.apply(um, {"h1"}, "x").apply(base.lact, {"h2", "c1"}, "y");
        s.apply(base.ract, {"h3", "c2"}, "r").apply(um, {"r"}, "ur").apply(sa, {"ur"}, "z");
        s.apply(mA, {"x", "y"}, "xy").apply(mA, {"xy", "z"}, "out");
        return s.collect({"out"});
      }));
  r.add(check_identity(
      "C3", {nh, nh},
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).apply(primed.cocycle, {"h", "g"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]);
        s.split("h", dH, {"h1", "h2", "h3", "h4"}).split("g", dH, {"g1", "g2", "g3", "g4"});
        s.apply(um, {"h1"}, "x").apply(um, {"g1"}, "ug1").apply(base.lact, {"h2", "ug1"}, "y");
        s.apply(um, {"g2"}, "ug2").apply(base.ract, {"h3", "ug2"}, "r").apply(base.cocycle, {"r", "g3"}, "z");
        s.apply(primed.dot, {"h4", "g4"}, "hg").apply(um, {"hg"}, "uhg").apply(sa, {"uhg"}, "w");
        s.apply(mA, {"x", "y"}, "xy").apply(mA, {"xy", "z"}, "xyz").apply(mA, {"xyz", "w"}, "out");
        return s.collect({"out"});
      }));
  r.add(check_identity(
      "C4", {nh, nh},
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).apply(primed.dot, {"h", "g"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).split("g", dH, {"g1", "g2"});
        s.apply(um, {"g1"}, "ug").apply(base.ract, {"h", "ug"}, "r").apply(base.dot, {"r", "g2"}, "y");
        return s.collect({"y"});
      }));
  return r.all_passed();
}

/// a (x) h -> a v(h1) (x) h2.
LinMap twist_by(const ExtendingDatum& d, const LinMap& v) {
  const Field& k = d.field();
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  std::vector<SparseVec> cols(na * nh);
  for (Index x = 0; x < na * nh; ++x) {
    SlotTensor s(k);
    s.put("a", na, x / nh).put("h", nh, x % nh).split("h", d.h.delta, {"h1", "h2"});
    s.apply(v, {"h1"}, "v").apply(d.a.algebra.mult, {"a", "v"}, "av");
    cols[x] = s.collect({"av", "h2"});
  }
  const BasedSpace space = tensor_space(d.a.space(), d.h.space);
  return LinMap(k, space, space, std::move(cols));
}

}  // namespace

bool cohomologous_via(const ExtendingDatum& base, const ExtendingDatum& primed, const LazyCocycle& u) {
  require_same_shape(base, primed);
  Report r;
  return add_conditions(r, base, primed, u);
}

EquivalenceResult check_equivalence(const ExtendingDatum& base, const ExtendingDatum& primed,
                                    const LazyCocycle& u) {
  require_same_shape(base, primed);
  EquivalenceResult out{Report("cohomology"), std::nullopt};
  Report& r = out.report;
  if (!add_conditions(r, base, primed, u)) return out;

  const std::size_t na = base.dim_a(), nh = base.dim_h();
  const UnifiedProduct p = build_unified_product(base);
  const UnifiedProduct pp = build_unified_product(primed);
  LinMap phi = twist_by(base, u.map);
  LinMap psi = twist_by(base, compose(*base.a_antipode, u.map));
  const LinMap id_e = LinMap::identity(base.field(), p.bialgebra.space());
  const LinMap id_h = LinMap::identity(base.field(), base.h.space);

  r.add(fold("phi-coalgebra-map", coalgebra_map_report(phi, pp.bialgebra.coalgebra, p.bialgebra.coalgebra),
             {na, nh}));
  r.add(fold("phi-algebra-map", algebra_map_report(phi, pp.bialgebra.algebra, p.bialgebra.algebra),
             {na, nh, na, nh}));
  r.add(check_maps("phi-A-module",
                   compose(phi, compose(pp.bialgebra.algebra.mult, tensor_map(pp.i_a, id_e))),
                   compose(p.bialgebra.algebra.mult, tensor_map(p.i_a, phi)), {na, na, nh}));
  r.add(check_maps("phi-H-comodule", compose(tensor_map(phi, id_h), pp.coaction), compose(p.coaction, phi),
                   {na, nh}));
  r.add(detail::first_of("phi-inverse", {check_maps("left", compose(psi, phi), id_e, {na, nh}),
                                         check_maps("right", compose(phi, psi), id_e, {na, nh})}));
  r.add(check_maps("pi-H", compose(p.pi_h, phi), pp.pi_h, {na, nh}));
  r.add(check_maps("i-A", compose(phi, pp.i_a), p.i_a));
  if (r.all_passed()) out.certificate = EquivalenceCertificate{u, std::move(phi), std::move(psi)};
  return out;
}

std::vector<LazyCocycle> enumerate_cocycles(const Coalgebra& h, const SparseVec& unit_h, const Bialgebra& a,
                                            std::size_t cap) {
  const Field& k = a.field();
  const std::size_t nh = h.dim(), na = a.dim();
  for (Index i = 0; i < nh; ++i)
    if (!is_grouplike(h, i)) throw Error("cocycle enumeration needs a group-like basis of H");
  for (Index i = 0; i < na; ++i)
    if (!is_grouplike(a.coalgebra, i)) throw Error("cocycle enumeration needs a group-like basis of A");
  if (unit_h.size() != 1 || unit_h[0].coeff != k.one()) throw Error("the unit of H is not a basis vector");
  const SparseVec& unit_a = a.algebra.unit;
  if (unit_a.size() != 1 || unit_a[0].coeff != k.one()) throw Error("the unit of A is not a basis vector");
  const Index base = unit_h[0].index;

  std::size_t count = 1;
  for (std::size_t i = 1; i < nh; ++i) {
    if (count > cap / na) throw CapExceeded("more than " + std::to_string(cap) + " pointed maps");
    count *= na;
  }
  if (count > cap) throw CapExceeded("more than " + std::to_string(cap) + " pointed maps");

  std::vector<LazyCocycle> out;
  out.reserve(count);
  std::vector<Index> digits(nh, 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t rest = n;
    for (std::size_t i = nh; i-- > 0;) {
      if (i == base) continue;
      digits[i] = static_cast<Index>(rest % na);
      rest /= na;
    }
    std::vector<SparseVec> cols(nh);
    for (Index i = 0; i < nh; ++i) cols[i] = i == base ? unit_a : basis_vector(k, digits[i]);
    out.push_back(LazyCocycle{LinMap(k, h.space, a.space(), std::move(cols))});
  }
  return out;
}

std::vector<std::vector<std::size_t>> quotient_classes(const std::vector<ExtendingDatum>& data, std::size_t cap) {
  const std::size_t n = data.size();
  if (n == 0) return {};
  const std::vector<LazyCocycle> cocycles = enumerate_cocycles(data[0].h, data[0].unit_h, data[0].a, cap);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& u : cocycles)
        if (cohomologous_via(data[i], data[j], u)) {
          rel[i][j] = true;
          break;
        }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i][i]) throw std::logic_error("cohomology relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) throw std::logic_error("cohomology relation is not symmetric");
      for (std::size_t l = 0; l < n; ++l)
        if (rel[i][j] && rel[j][l] && !rel[i][l]) throw std::logic_error("cohomology relation is not transitive");
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> placed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) continue;
    classes.emplace_back();
    for (std::size_t j = i; j < n; ++j)
      if (rel[i][j]) {
        classes.back().push_back(j);
        placed[j] = true;
      }
  }
  return classes;
}

Report check_bicrossed_equivalence(const MatchedPair& base, const MatchedPair& primed, const LazyCocycle& u) {
  const ExtendingDatum d = matched_pair_datum(base);
  const ExtendingDatum dp = matched_pair_datum(primed);
  require_same_shape(d, dp);
  Report r("bicrossed cohomology");
  if (!add_cocycle_checks(r, d, u)) return r;
  const Field& k = d.field();
  const std::size_t na = d.dim_a(), nh = d.dim_h();
  const LinMap& dA = d.a.coalgebra.delta;
  const LinMap& dH = d.h.delta;
  const LinMap& mA = d.a.algebra.mult;
  const LinMap& sa = *d.a_antipode;
  const LinMap& um = u.map;

  r.add(check_maps("ract-equal", primed.ract, base.ract, {nh, na}));
  r.add(check_identity(
      "lact-formula", {nh, na},
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("c", na, t[1]).apply(primed.lact, {"h", "c"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("c", na, t[1]).split("h", dH, {"h1", "h2", "h3"}).split("c", dA, {"c1", "c2"});
        s.apply(um, {"h1"}, "x").apply(base.lact, {"h2", "c1"}, "y");
        s.apply(base.ract, {"h3", "c2"}, "r").apply(um, {"r"}, "ur").apply(sa, {"ur"}, "z");
        s.apply(mA, {"x", "y"}, "xy").apply(mA, {"xy", "z"}, "out");
        return s.collect({"out"});
      }));
  r.add(check_identity(
      "cocycle-trivial", {nh, nh},
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).split("h", dH, {"h1", "h2", "h3"}).split("g", dH, {"g1", "g2"});
        s.apply(um, {"h1"}, "x").apply(um, {"g1"}, "ug").apply(base.lact, {"h2", "ug"}, "y");
        s.apply(base.h.algebra.mult, {"h3", "g2"}, "hg").apply(um, {"hg"}, "uhg").apply(sa, {"uhg"}, "z");
        s.apply(mA, {"x", "y"}, "xy").apply(mA, {"xy", "z"}, "out");
        return s.collect({"out"});
      },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).contract(d.h.counit, {"h"}).contract(d.h.counit, {"g"});
        s.put("one", na, d.a.algebra.unit);
        return s.collect({"one"});
      }));
  r.add(check_identity(
      "ract-absorbs-cocycle", {nh, nh},
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).apply(um, {"g"}, "ug").apply(base.ract, {"h", "ug"}, "y");
        return s.collect({"y"});
      },
      [&](Tuple t) {
        SlotTensor s(k);
        s.put("h", nh, t[0]).put("g", nh, t[1]).contract(d.h.counit, {"g"});
        return s.collect({"h"});
      }));
  return r;
}

}  // namespace uprod
