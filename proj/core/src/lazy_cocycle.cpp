#include "uprod/lazy_cocycle.hpp"

#include "check_util.hpp"
#include "uprod/errors.hpp"
#include "uprod/slot_tensor.hpp"

namespace uprod {

Report lazy_cocycle_report(const LinMap& u, const Coalgebra& h, const SparseVec& unit_h,
                           const Bialgebra& a) {
  const std::size_t nh = h.dim(), na = a.dim();
  detail::require_shape(u, nh, na, "lazy cocycle");
  Report r("lazy cocycle");
  r.add(detail::fold("coalgebra-map", coalgebra_map_report(u, h, a.coalgebra), {nh}));
  r.add(CheckResult{"unital", u.apply(unit_h) == a.algebra.unit, {}, {}});
  r.add(detail::check_identity(
      "lazy", {nh},
      [&](std::span<const Index> t) {
        SlotTensor s(h.field());
        s.put("h", nh, t[0]).split("h", h.delta, {"h1", "h2"}).apply(u, {"h2"}, "y");
        return s.collect({"h1", "y"});
      },
      [&](std::span<const Index> t) {
        SlotTensor s(h.field());
        s.put("h", nh, t[0]).split("h", h.delta, {"h1", "h2"}).apply(u, {"h1"}, "y");
        return s.collect({"h2", "y"});
      }));
  return r;
}

bool is_lazy_cocycle(const LinMap& u, const Coalgebra& h, const SparseVec& unit_h, const Bialgebra& a) {
  return lazy_cocycle_report(u, h, unit_h, a).all_passed();
}

LazyCocycle make_lazy_cocycle(LinMap u, const Coalgebra& h, const SparseVec& unit_h, const Bialgebra& a) {
  Report r = lazy_cocycle_report(u, h, unit_h, a);
  if (!r.all_passed()) throw PreconditionFailed("not a lazy cocycle", r);
  return LazyCocycle{std::move(u)};
}

LazyCocycle trivial_lazy_cocycle(const Coalgebra& h, const Bialgebra& a) {
  return LazyCocycle{convolution_unit(h, a.algebra)};
}

LazyCocycle cocycle_convolve(const LazyCocycle& u, const LazyCocycle& v, const Coalgebra& h,
                             const Bialgebra& a) {
  return LazyCocycle{convolution(u.map, v.map, h, a.algebra)};
}

LazyCocycle cocycle_inverse(const LazyCocycle& u, const LinMap& a_antipode) {
  return LazyCocycle{compose(a_antipode, u.map)};
}

}  // namespace uprod
