#include "check_util.hpp"

#include "uprod/errors.hpp"

namespace uprod::detail {

std::vector<Index> decode(Index i, const std::vector<std::size_t>& dims) {
  std::vector<Index> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<Index>(i % dims[k]);
    i /= static_cast<Index>(dims[k]);
  }
  return out;
}

CheckResult check_identity(std::string id, const std::vector<std::size_t>& dims,
                           const TupleFn& lhs, const TupleFn& rhs) {
  CheckResult result{std::move(id), true, {}, {}};
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::vector<Index> tuple(dims.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    tuple = decode(static_cast<Index>(n), dims);
    if (lhs(tuple) != rhs(tuple)) {
      result.passed = false;
      result.witness.assign(tuple.begin(), tuple.end());
      result.detail = "sides differ";
      return result;
    }
  }
  return result;
}

CheckResult check_maps(std::string id, const LinMap& lhs, const LinMap& rhs,
                       const std::vector<std::size_t>& dims) {
  CheckResult result{std::move(id), true, {}, {}};
  if (lhs.domain_dim() != rhs.domain_dim() || lhs.codomain_dim() != rhs.codomain_dim()) {
    result.passed = false;
    result.detail = "shape mismatch";
    return result;
  }
  if (auto diff = lhs.first_difference(rhs)) {
    result.passed = false;
    if (dims.empty()) {
      result.witness = {*diff};
    } else {
      auto w = decode(*diff, dims);
      result.witness.assign(w.begin(), w.end());
    }
    result.detail = "sides differ";
  }
  return result;
}

CheckResult fold(std::string id, const Report& r, const std::vector<std::size_t>& dims) {
  CheckResult out{std::move(id), true, {}, {}};
  if (const CheckResult* f = r.first_failure()) {
    out.passed = false;
    out.detail = f->id;
    if (!f->witness.empty()) {
      auto w = decode(f->witness[0], dims);
      out.witness.assign(w.begin(), w.end());
    }
  }
  return out;
}

CheckResult first_of(std::string id, std::vector<CheckResult> parts) {
  for (auto& p : parts) {
    if (!p.passed) {
      p.detail = p.id;
      p.id = id;
      return p;
    }
  }
  return CheckResult{std::move(id), true, {}, {}};
}

void require_shape(const LinMap& f, std::size_t dom, std::size_t cod, const char* name) {
  if (f.domain_dim() != dom || f.codomain_dim() != cod) {
    throw DimensionMismatch(std::string(name) + " has shape " + std::to_string(f.codomain_dim()) +
                            "x" + std::to_string(f.domain_dim()) + ", expected " +
                            std::to_string(cod) + "x" + std::to_string(dom));
  }
}

SparseVec as_vector(const Scalar& x) {
  if (x.is_zero()) return {};
  return {{0, x}};
}

}  // namespace uprod::detail
