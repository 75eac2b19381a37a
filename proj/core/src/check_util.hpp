// Helpers shared by the condition checkers.
#ifndef UPROD_CHECK_UTIL_HPP
#define UPROD_CHECK_UTIL_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "uprod/linear.hpp"
#include "uprod/report.hpp"

namespace uprod::detail {

using TupleFn = std::function<SparseVec(std::span<const Index>)>;

/// Evaluates lhs and rhs on every basis tuple (lexicographic order, first
/// argument slowest) and records the first tuple where they differ.
CheckResult check_identity(std::string id, const std::vector<std::size_t>& dims,
                           const TupleFn& lhs, const TupleFn& rhs);

/// Compares two maps column by column. The witness is the first differing
/// domain index decoded into `arity` row-major coordinates of size `dim`.
CheckResult check_maps(std::string id, const LinMap& lhs, const LinMap& rhs,
                       const std::vector<std::size_t>& dims = {});

/// Decodes a row-major index.
std::vector<Index> decode(Index i, const std::vector<std::size_t>& dims);

/// Single check summarizing a report: passes iff all of it passes; the
/// witness of the first failure is decoded into `dims` coordinates.
CheckResult fold(std::string id, const Report& r, const std::vector<std::size_t>& dims);

/// First failure of a sequence of sub-identities, named in `detail`.
CheckResult first_of(std::string id, std::vector<CheckResult> parts);

/// Throws DimensionMismatch unless f maps a dom-dimensional space to a
/// cod-dimensional one.
void require_shape(const LinMap& f, std::size_t dom, std::size_t cod, const char* name);

/// A scalar as a vector in the ground field.
SparseVec as_vector(const Scalar& x);

}  // namespace uprod::detail

#endif
