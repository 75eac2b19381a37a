#include "uprod/examples.hpp"

#include <functional>
#include <map>

#include "uprod/errors.hpp"
#include "uprod/factorization.hpp"

namespace uprod::io {

namespace {

const Field Q = Field::rationals();

std::vector<Index> indices_of(const GroupTable& g, const std::vector<std::vector<Index>>& perms) {
  std::vector<Index> out;
  for (const auto& p : perms) out.push_back(g.index_of(p));
  return out;
}

/// S3 = C3 . C2 with C3 normal.
MatchedPair s3_bicrossed() {
  const GroupTable s3 = named_group("S3");
  const std::vector<Index> c3 = indices_of(s3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  const std::vector<Index> c2 = indices_of(s3, {{0, 1, 2}, {1, 0, 2}});
  const GroupExtendingStructure s = coset_extending_structure(s3, c3, c2).ges;
  ExtendingDatum d = lift_to_hopf(Q, s);
  Hopf h = group_algebra(Q, GroupTable(s.star, s.x_labels));
  return MatchedPair{d.a, h.bialgebra, d.ract, d.lact, d.a_antipode, h.antipode};
}

/// k[C2] by k[C2] with trivial action and f(x, x) = t when twisted.
CrossedDatum c2_by_c2(bool twisted) {
  Hopf c2 = group_algebra(Q, GroupTable::cyclic(2));
  const Coalgebra& c = c2.bialgebra.coalgebra;
  LinMap f = trivial_cocycle(c, c2.bialgebra);
  if (twisted) {
    std::vector<SparseVec> cols = f.columns();
    cols[3] = basis_vector(Q, 1);
    f = LinMap(Q, f.domain(), f.codomain(), std::move(cols));
  }
  return CrossedDatum{c2.bialgebra, c2.bialgebra, trivial_lact(c, c), f, c2.antipode};
}

/// A4 over its first subgroup of order 2.
FactorizationInput a4_input() {
  const GroupTable a4 = named_group("A4");
  std::vector<Index> sub;
  for (const auto& s : subgroups(a4))
    if (s.size() == 2) {
      sub = s;
      break;
    }
  const CosetStructure c = coset_extending_structure(a4, sub);
  return group_factorization(Q, a4, c.a_elements, c.reps);
}

FactorizationInput z4_input() { return group_factorization(Q, GroupTable::cyclic(4), {0, 2}, {0, 1}); }

const std::map<std::string, std::function<Document()>>& registry() {
  static const std::map<std::string, std::function<Document()>> r{
      {"trivial-coalgebra", [] { return Document{Q, grouplike_coalgebra(Q, {"1"})}; }},
      {"trivial-datum",
       [] {
         Hopf k = ground_hopf(Q);
         return Document{Q, trivial_datum(k.bialgebra, k.bialgebra, k.antipode)};
       }},
      {"k-c2", [] { return Document{Q, group_algebra(Q, GroupTable::cyclic(2))}; }},
      {"k-s3", [] { return Document{Q, group_algebra(Q, named_group("S3"))}; }},
      {"k-z4", [] { return Document{Q, group_algebra(Q, GroupTable::cyclic(4))}; }},
      {"z4-sub-a", [] { return Document{Q, z4_input().incl_a}; }},
      {"z4-sub-h", [] { return Document{Q, z4_input().incl_h}; }},
      {"s3-bicrossed", [] { return Document{Q, s3_bicrossed()}; }},
      {"z4-crossed", [] { return Document{Q, c2_by_c2(true)}; }},
      {"z2xz2-crossed", [] { return Document{Q, c2_by_c2(false)}; }},
      {"a4-unified", [] { return Document{Q, recover_datum(a4_input())}; }},
      {"a6-group-level",
       [] {
         const GroupTable a6 = named_group("A6");
         std::vector<Index> a4;
         for (Index i = 0; i < a6.order(); ++i)
           if (a6.permutations()[i][4] == 4 && a6.permutations()[i][5] == 5) a4.push_back(i);
         return Document{Q, group_unified_product(coset_extending_structure(a6, a4).ges)};
       }},
  };
  return r;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"trivial-coalgebra", "trivial-datum", "k-c2", "k-s3",         "k-z4",          "z4-sub-a",      "z4-sub-h",
          "s3-bicrossed",      "z4-crossed",    "z2xz2-crossed", "a4-unified",    "a6-group-level"};
}

Document example(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw FormatError("unknown example \"" + name + "\"");
  return it->second();
}

}  // namespace uprod::io
