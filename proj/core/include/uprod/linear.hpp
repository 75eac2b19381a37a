#ifndef UPROD_LINEAR_HPP
#define UPROD_LINEAR_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uprod/scalar.hpp"

namespace uprod {

using Index = std::uint32_t;

/// A vector space with a fixed, labelled basis.
///
/// Tensor-product spaces keep their factors instead of materialized labels;
/// the label of index i*dim(b)+j in a (x) b is "(label_a(i),label_b(j))".
/// This row-major convention is the one used by the file format.
class BasedSpace {
 public:
  /// The ground field k, dimension 1 with label "1".
  BasedSpace();
  /// Throws Error when labels are empty or not distinct.
  explicit BasedSpace(std::vector<std::string> labels);
  /// Labels "<prefix>0", ..., "<prefix><dim-1>".
  static BasedSpace indexed(std::size_t dim, const std::string& prefix = "e");
  static BasedSpace ground() { return BasedSpace(); }

  std::size_t dim() const { return node_->dim; }
  std::string label(Index i) const;
  std::vector<std::string> labels() const;
  bool is_tensor() const { return !node_->factors.empty(); }
  /// Direct tensor factors; empty for a leaf space.
  const std::vector<BasedSpace>& factors() const { return node_->factors; }

  friend BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b);
  friend BasedSpace tensor_space(std::span<const BasedSpace> factors);
  /// Same dimension and same label sequence.
  friend bool operator==(const BasedSpace& a, const BasedSpace& b);

 private:
  struct Node {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<BasedSpace> factors;
  };
  explicit BasedSpace(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b);
BasedSpace tensor_space(std::span<const BasedSpace> factors);

struct Term {
  Index index;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

/// Sorts, merges equal indices and drops zeros.
void normalize(SparseVec& v);
/// acc += scale * v; both normalized.
void add_scaled(SparseVec& acc, const SparseVec& v, const Scalar& scale);
SparseVec scaled(const SparseVec& v, const Scalar& scale);
SparseVec basis_vector(const Field& field, Index i);
/// e_i (x) e_j coordinates for a row-major pair of vectors.
SparseVec tensor_vectors(const SparseVec& a, const SparseVec& b, std::size_t dim_b);

/// A linear map between based spaces, stored column-wise: column i is the
/// image of the i-th domain basis vector.
class LinMap {
 public:
  LinMap() = default;
  /// The zero map.
  LinMap(Field field, BasedSpace domain, BasedSpace codomain);
  /// Normalizes every column; throws DimensionMismatch on out-of-range indices.
  LinMap(Field field, BasedSpace domain, BasedSpace codomain,
         std::vector<SparseVec> columns);

  static LinMap identity(const Field& field, const BasedSpace& space);
  /// The map sending e_i to e_{image[i]}.
  static LinMap from_function(const Field& field, const BasedSpace& domain,
                              const BasedSpace& codomain,
                              std::span<const Index> image);
  /// Linear form (codomain = ground field) with the given values.
  static LinMap form(const Field& field, const BasedSpace& domain,
                     std::span<const Scalar> values);
  /// Map k -> V picking out `vector`.
  static LinMap point(const Field& field, const BasedSpace& codomain, SparseVec vector);

  const Field& field() const { return field_; }
  const BasedSpace& domain() const { return domain_; }
  const BasedSpace& codomain() const { return codomain_; }
  std::size_t domain_dim() const { return domain_.dim(); }
  std::size_t codomain_dim() const { return codomain_.dim(); }

  const SparseVec& column(Index i) const { return columns_[i]; }
  const std::vector<SparseVec>& columns() const { return columns_; }
  /// Coefficient of codomain vector `row` in the image of domain vector `col`.
  Scalar entry(Index row, Index col) const;
  SparseVec apply(const SparseVec& v) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  /// First domain index where the two maps differ; nullopt when equal.
  /// Throws DimensionMismatch when the shapes differ.
  std::optional<Index> first_difference(const LinMap& other) const;

  /// Exact equality of shape and coefficients (labels are not compared).
  friend bool operator==(const LinMap& a, const LinMap& b);

  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  LinMap scaled(const Scalar& s) const;

 private:
  Field field_;
  BasedSpace domain_;
  BasedSpace codomain_;
  std::vector<SparseVec> columns_;
};

/// f o g. Throws DimensionMismatch unless codomain(g) and domain(f) agree in
/// dimension.
LinMap compose(const LinMap& f, const LinMap& g);
/// Composition of a chain, applied right to left: maps[0] o maps[1] o ...
LinMap compose(std::span<const LinMap> chain);
LinMap tensor_map(const LinMap& f, const LinMap& g);
LinMap tensor_map(std::span<const LinMap> factors);

/// e_i (x) e_j -> e_j (x) e_i.
LinMap twist(const Field& field, const BasedSpace& a, const BasedSpace& b);
/// Reorders tensor factors: the k-th output factor is input factor perm[k].
LinMap tensor_permutation(const Field& field, std::span<const BasedSpace> factors,
                          std::span<const std::size_t> perm);

/// Rank by exact elimination.
std::size_t rank(const LinMap& f);
/// Exact inverse by fraction-free Gauss-Jordan elimination over Q (plain
/// Gauss-Jordan over F_p). Throws NotBijective carrying the rank.
LinMap invert(const LinMap& f);
/// L with L o f = id for injective f. Throws NotInjective.
LinMap left_inverse(const LinMap& f);

/// Result of a sparse linear solve A x = b.
struct SolveResult {
  bool consistent = false;
  std::size_t rank = 0;
  /// A particular solution (free variables set to zero) when consistent.
  std::vector<Scalar> solution;
  bool unique() const { return consistent && rank == solution.size(); }
};

/// Sparse Gauss-Jordan elimination. Each row is a sparse equation over
/// `num_unknowns` variables with right-hand side rhs[row].
SolveResult solve_sparse(const Field& field, const std::vector<SparseVec>& rows,
                         const std::vector<Scalar>& rhs, std::size_t num_unknowns);

}  // namespace uprod

#endif  // UPROD_LINEAR_HPP
