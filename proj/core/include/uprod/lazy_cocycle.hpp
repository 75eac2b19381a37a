#ifndef UPROD_LAZY_COCYCLE_HPP
#define UPROD_LAZY_COCYCLE_HPP

#include "uprod/coalgebra.hpp"
#include "uprod/linear.hpp"
#include "uprod/report.hpp"

namespace uprod {

/// A unital coalgebra map u: H -> A with h1 (x) u(h2) = h2 (x) u(h1).
/// These form a group under convolution with inverse S_A o u.
struct LazyCocycle {
  LinMap map;
};

/// Ids: coalgebra-map, unital (u(1_H) = 1_A), lazy (witness: basis h).
/// Throws DimensionMismatch when u is not a map H -> A.
Report lazy_cocycle_report(const LinMap& u, const Coalgebra& h, const SparseVec& unit_h,
                           const Bialgebra& a);
bool is_lazy_cocycle(const LinMap& u, const Coalgebra& h, const SparseVec& unit_h, const Bialgebra& a);
/// Wraps u after checking it; PreconditionFailed otherwise.
LazyCocycle make_lazy_cocycle(LinMap u, const Coalgebra& h, const SparseVec& unit_h, const Bialgebra& a);

/// h -> counit(h) 1_A.
LazyCocycle trivial_lazy_cocycle(const Coalgebra& h, const Bialgebra& a);
/// Convolution u * v.
LazyCocycle cocycle_convolve(const LazyCocycle& u, const LazyCocycle& v, const Coalgebra& h,
                             const Bialgebra& a);
/// S_A o u, the convolution inverse of u.
LazyCocycle cocycle_inverse(const LazyCocycle& u, const LinMap& a_antipode);

}  // namespace uprod

#endif  // UPROD_LAZY_COCYCLE_HPP
