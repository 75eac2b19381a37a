#ifndef UPROD_GROUPS_HPP
#define UPROD_GROUPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uprod/coalgebra.hpp"
#include "uprod/extending_datum.hpp"
#include "uprod/report.hpp"

namespace uprod {

/// Finite group given by its multiplication table; the identity is index 0.
class GroupTable {
 public:
  /// Checks closure, associativity, identity at index 0 and inverses; throws
  /// PreconditionFailed with ids closure, identity, associativity, inverse.
  explicit GroupTable(std::vector<std::vector<Index>> mult, std::vector<std::string> labels = {});
  /// The trivial group.
  GroupTable() : mult_{{0}}, inverse_{0}, labels_{"e"} {}

  /// Rotations of {0..n-1}; element k is rotation by k.
  static GroupTable cyclic(std::size_t n);
  /// Closure of permutations of {0..d-1} under (p q)(i) = p(q(i)), elements
  /// ordered lexicographically by image tuple, labelled in cycle notation.
  static GroupTable from_permutations(const std::vector<std::vector<Index>>& generators);
  /// Pairs (a, b) at index a * |B| + b.
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

  std::size_t order() const { return mult_.size(); }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const { return mult_[a][b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  const std::vector<std::vector<Index>>& table() const { return mult_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Image tuples when built from permutations, else empty.
  const std::vector<std::vector<Index>>& permutations() const { return perms_; }
  std::size_t element_order(Index a) const;
  /// Index of a permutation; throws Error when absent.
  Index index_of(const std::vector<Index>& perm) const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.mult_ == b.mult_; }

 private:
  std::vector<std::vector<Index>> mult_;
  std::vector<Index> inverse_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Index>> perms_;
};

/// The built-in groups by name: C1 ... C12, C2xC2, S3, D4, Q8, A4, S4 and,
/// when requested, A6.
std::vector<std::pair<std::string, GroupTable>> group_corpus(bool include_a6 = false);
GroupTable named_group(const std::string& name);

/// True when the indices contain the identity and are closed under products
/// and inverses.
bool is_subgroup(const GroupTable& g, const std::vector<Index>& elements);
/// Every subgroup as a sorted index list, by joining cyclic subgroups until
/// nothing new appears. Intended for orders up to a few dozen.
std::vector<std::vector<Index>> subgroups(const GroupTable& g);

/// Set-level extending structure of a group A by a pointed set X (basepoint
/// index 0). These are the conditions on the four maps obtained by
/// evaluating the nine unified-product conditions on group-like bases.
struct GroupExtendingStructure {
  GroupTable a;
  std::vector<std::string> x_labels;
  std::vector<std::vector<Index>> ract;   // x <| a in X
  std::vector<std::vector<Index>> lact;   // x |> a in A
  std::vector<std::vector<Index>> cocyc;  // f(x, y) in A
  std::vector<std::vector<Index>> star;   // x * y in X

  std::size_t nx() const { return x_labels.size(); }
};

/// Ids and the set identities they stand for:
///   normalization  x<|e = x, 1<|a = 1, x|>e = e, 1|>a = a,
///                  f(x,1) = f(1,x) = e, 1*x = x*1 = x
///   2a  vacuous on group-likes
///   2b  (x<|a)<|b = x<|(ab)
///   2c  (x*y)*z = (x<|f(y,z)) * (y*z)
///   2d  x|>(ab) = (x|>a)((x<|a)|>b)
///   2e  (x*y)<|a = (x<|(y|>a)) * (y<|a)
///   2f  (x|>(y|>a)) f(x<|(y|>a), y<|a) = f(x,y) ((x*y)|>a)
///   2g  (x|>f(y,z)) f(x<|f(y,z), y*z) = f(x,y) f(x*y, z)
///   2h, 2i  vacuous on group-likes
/// Throws DimensionMismatch when a table has the wrong shape or range.
Report validate_ges(const GroupExtendingStructure& s);

/// Coset decomposition of G over a subgroup A: X is a set of right-coset
/// representatives with the identity representing A, and
///   x a = (x |> a)(x <| a),   x y = f(x, y)(x * y)
/// read off in G. `to_g[a * |X| + x]` is the G-index of a x.
struct CosetStructure {
  GroupExtendingStructure ges;
  std::vector<Index> a_elements;  // G-indices of A, increasing
  std::vector<Index> reps;        // G-indices of X
  std::vector<Index> to_g;
};

/// Uses the smallest index of each right coset; throws Error when the
/// indices do not form a subgroup.
CosetStructure coset_extending_structure(const GroupTable& g, const std::vector<Index>& subgroup);
/// Same with caller-chosen representatives, one per right coset, including
/// the identity.
CosetStructure coset_extending_structure(const GroupTable& g, const std::vector<Index>& subgroup,
                                         const std::vector<Index>& representatives);

/// Group algebra with basis G, group-like comultiplication, inverse antipode.
Hopf group_algebra(const Field& field, const GroupTable& g);
/// Group-like coalgebra on the labels; the first label is the basepoint.
Coalgebra grouplike_coalgebra(const Field& field, const std::vector<std::string>& labels);

/// Linearizes the four set maps; A carries its group algebra antipode.
ExtendingDatum lift_to_hopf(const Field& field, const GroupExtendingStructure& s);
/// A x X with (a,x)(b,y) = (a (x|>b) f(x<|b, y), (x<|b) * y) at index
/// a * |X| + x. The GroupTable constructor re-checks the group axioms.
GroupTable group_unified_product(const GroupExtendingStructure& s);
/// x -> y with x*y = y*x = 1 for every x, when such y exist.
std::optional<std::vector<Index>> star_inverses(const GroupExtendingStructure& s);

/// Brute-force isomorphism search: returns phi with phi(ab) = phi(a)phi(b).
std::optional<std::vector<Index>> find_isomorphism(const GroupTable& g, const GroupTable& h);

}  // namespace uprod

#endif  // UPROD_GROUPS_HPP
