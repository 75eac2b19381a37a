#include "uprod/groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "uprod/errors.hpp"

namespace uprod {

namespace {

using Perm = std::vector<Index>;

Perm compose_perm(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (Index i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (Index j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

std::vector<Index> closure(const GroupTable& g, std::vector<Index> gens) {
  std::set<Index> seen{g.identity()};
  std::deque<Index> queue{g.identity()};
  while (!queue.empty()) {
    Index x = queue.front();
    queue.pop_front();
    for (Index s : gens) {
      Index y = g.mul(x, s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<Index>(seen.begin(), seen.end());
}

void require_table(const std::vector<std::vector<Index>>& t, std::size_t rows, std::size_t cols,
                   std::size_t range, const char* name) {
  if (t.size() != rows) throw DimensionMismatch(std::string(name) + ": wrong number of rows");
  for (const auto& row : t) {
    if (row.size() != cols) throw DimensionMismatch(std::string(name) + ": wrong row length");
    for (Index v : row)
      if (v >= range) throw DimensionMismatch(std::string(name) + ": value out of range");
  }
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<Index>> mult, std::vector<std::string> labels)
    : mult_(std::move(mult)), labels_(std::move(labels)) {
  const std::size_t n = mult_.size();
  Report r("group table");
  if (n == 0) throw Error("group table is empty");
  CheckResult closed{"closure", true, {}, {}};
  for (Index a = 0; a < n && closed.passed; ++a) {
    if (mult_[a].size() != n) {
      closed = {"closure", false, {a}, "row has the wrong length"};
      break;
    }
    for (Index b = 0; b < n; ++b)
      if (mult_[a][b] >= n) {
        closed = {"closure", false, {a, b}, "product out of range"};
        break;
      }
  }
  r.add(closed);
  if (!closed.passed) throw PreconditionFailed("not a group", r);

  CheckResult ident{"identity", true, {}, {}};
  for (Index a = 0; a < n; ++a)
    if (mult_[0][a] != a || mult_[a][0] != a) {
      ident = {"identity", false, {a}, "element 0 is not the identity"};
      break;
    }
  r.add(ident);

  CheckResult assoc{"associativity", true, {}, {}};
  for (Index a = 0; a < n && assoc.passed; ++a)
    for (Index b = 0; b < n && assoc.passed; ++b) {
      const Index ab = mult_[a][b];
      for (Index c = 0; c < n; ++c)
        if (mult_[ab][c] != mult_[a][mult_[b][c]]) {
          assoc = {"associativity", false, {a, b, c}, {}};
          break;
        }
    }
  r.add(assoc);

  inverse_.assign(n, 0);
  CheckResult inv{"inverse", true, {}, {}};
  for (Index a = 0; a < n; ++a) {
    auto it = std::find(mult_[a].begin(), mult_[a].end(), 0u);
    if (it == mult_[a].end() || mult_[static_cast<Index>(it - mult_[a].begin())][a] != 0) {
      inv = {"inverse", false, {a}, {}};
      break;
    }
    inverse_[a] = static_cast<Index>(it - mult_[a].begin());
  }
  r.add(inv);
  if (!r.all_passed()) throw PreconditionFailed("not a group", r);

  if (labels_.empty()) {
    for (Index a = 0; a < n; ++a) labels_.push_back("g" + std::to_string(a));
  } else if (labels_.size() != n) {
    throw DimensionMismatch("group labels: wrong count");
  }
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group of order 0");
  Perm rot(n);
  for (Index i = 0; i < n; ++i) rot[i] = static_cast<Index>((i + 1) % n);
  GroupTable g = from_permutations({rot});
  // Rotation by k has image tuple (k, k+1, ...), so lexicographic order is by k.
  for (Index k = 0; k < n; ++k) g.labels_[k] = std::to_string(k);
  return g;
}

GroupTable GroupTable::from_permutations(const std::vector<std::vector<Index>>& generators) {
  if (generators.empty()) throw Error("no generators");
  const std::size_t d = generators[0].size();
  Perm id(d);
  for (Index i = 0; i < d; ++i) id[i] = i;
  for (const auto& gen : generators) {
    Perm sorted = gen;
    std::sort(sorted.begin(), sorted.end());
    if (gen.size() != d || sorted != id) throw Error("generator is not a permutation of the common degree");
  }
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      Perm q = compose_perm(p, gen);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  std::vector<Perm> elems(seen.begin(), seen.end());
  std::map<Perm, Index> index;
  for (Index i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::vector<Index>> mult(elems.size(), std::vector<Index>(elems.size()));
  std::vector<std::string> labels;
  for (Index i = 0; i < elems.size(); ++i) {
    labels.push_back(cycle_notation(elems[i]));
    for (Index j = 0; j < elems.size(); ++j) mult[i][j] = index.at(compose_perm(elems[i], elems[j]));
  }
  GroupTable g(std::move(mult), std::move(labels));
  g.perms_ = std::move(elems);
  return g;
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Index>> mult(na * nb, std::vector<Index>(na * nb));
  std::vector<std::string> labels;
  for (Index i = 0; i < na * nb; ++i) {
    labels.push_back("(" + a.labels_[i / nb] + "," + b.labels_[i % nb] + ")");
    for (Index j = 0; j < na * nb; ++j)
      mult[i][j] = static_cast<Index>(a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb));
  }
  return GroupTable(std::move(mult), std::move(labels));
}

std::size_t GroupTable::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

Index GroupTable::index_of(const std::vector<Index>& perm) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), perm);
  if (it == perms_.end() || *it != perm) throw Error("permutation is not in the group");
  return static_cast<Index>(it - perms_.begin());
}

namespace {

GroupTable quaternion8() {
  // Elements s * u with s in {+1, -1} and u in {1, i, j, k}, encoded 2u + (s < 0).
  static const std::array<std::array<int, 4>, 4> unit_prod = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static const std::array<std::array<int, 4>, 4> unit_sign = {
      {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
  auto mul = [&](int p, int q) {
    int sign = (p % 2 ? -1 : 1) * (q % 2 ? -1 : 1) * unit_sign[p / 2][q / 2];
    return 2 * unit_prod[p / 2][q / 2] + (sign < 0 ? 1 : 0);
  };
  std::vector<std::vector<Index>> gens;
  for (int g : {2, 4}) {  // left multiplication by i and by j
    Perm p(8);
    for (int x = 0; x < 8; ++x) p[x] = static_cast<Index>(mul(g, x));
    gens.push_back(p);
  }
  return GroupTable::from_permutations(gens);
}

}  // namespace

std::vector<std::pair<std::string, GroupTable>> group_corpus(bool include_a6) {
  std::vector<std::pair<std::string, GroupTable>> out;
  for (std::size_t n = 1; n <= 12; ++n) out.emplace_back("C" + std::to_string(n), GroupTable::cyclic(n));
  out.emplace_back("C2xC2", GroupTable::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}));
  out.emplace_back("S3", GroupTable::from_permutations({{1, 0, 2}, {1, 2, 0}}));
  out.emplace_back("D4", GroupTable::from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}}));
  out.emplace_back("Q8", quaternion8());
  out.emplace_back("A4", GroupTable::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}));
  out.emplace_back("S4", GroupTable::from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}}));
  if (include_a6) {
    out.emplace_back("A6", GroupTable::from_permutations({{1, 2, 0, 3, 4, 5}, {0, 2, 3, 4, 5, 1}}));
  }
  return out;
}

GroupTable named_group(const std::string& name) {
  for (auto& [n, g] : group_corpus(name == "A6"))
    if (n == name) return g;
  throw Error("unknown group '" + name + "'");
}

bool is_subgroup(const GroupTable& g, const std::vector<Index>& elements) {
  std::set<Index> s(elements.begin(), elements.end());
  if (!s.count(g.identity())) return false;
  for (Index a : s) {
    if (a >= g.order() || !s.count(g.inverse(a))) return false;
    for (Index b : s)
      if (!s.count(g.mul(a, b))) return false;
  }
  return true;
}

std::vector<std::vector<Index>> subgroups(const GroupTable& g) {
  std::set<std::vector<Index>> cyclic;
  for (Index a = 0; a < g.order(); ++a) cyclic.insert(closure(g, {a}));
  std::set<std::vector<Index>> all(cyclic.begin(), cyclic.end());
  std::deque<std::vector<Index>> queue(all.begin(), all.end());
  while (!queue.empty()) {
    std::vector<Index> h = queue.front();
    queue.pop_front();
    for (const auto& c : cyclic) {
      if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
      std::vector<Index> gens = h;
      gens.insert(gens.end(), c.begin(), c.end());
      std::vector<Index> j = closure(g, gens);
      if (all.insert(j).second) queue.push_back(j);
    }
  }
  std::vector<std::vector<Index>> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Report validate_ges(const GroupExtendingStructure& s) {
  const std::size_t na = s.a.order(), nx = s.nx();
  if (nx == 0) throw DimensionMismatch("extending structure: X is empty");
  require_table(s.ract, nx, na, nx, "right action");
  require_table(s.lact, nx, na, na, "left action");
  require_table(s.cocyc, nx, nx, na, "cocycle");
  require_table(s.star, nx, nx, nx, "multiplication on X");
  const GroupTable& a = s.a;
  auto R = [&](Index x, Index b) { return s.ract[x][b]; };
  auto L = [&](Index x, Index b) { return s.lact[x][b]; };
  auto F = [&](Index x, Index y) { return s.cocyc[x][y]; };
  auto M = [&](Index x, Index y) { return s.star[x][y]; };
  auto A = [&](Index p, Index q) { return a.mul(p, q); };

  Report r("group extending structure");
  auto run = [&](const char* id, std::vector<std::size_t> dims,
                 const std::function<bool(Index, Index, Index)>& holds) {
    CheckResult c{id, true, {}, {}};
    const std::size_t d0 = dims[0], d1 = dims.size() > 1 ? dims[1] : 1, d2 = dims.size() > 2 ? dims[2] : 1;
    for (Index i = 0; i < d0 && c.passed; ++i)
      for (Index j = 0; j < d1 && c.passed; ++j)
        for (Index k = 0; k < d2; ++k)
          if (!holds(i, j, k)) {
            c.passed = false;
            c.witness = {i, j, k};
            c.witness.resize(dims.size());
            break;
          }
    r.add(c);
  };

  CheckResult norm{"normalization", true, {}, {}};
  for (Index x = 0; x < nx && norm.passed; ++x) {
    if (R(x, 0) != x) norm = {"normalization", false, {x}, "x <| e != x"};
    else if (L(x, 0) != 0) norm = {"normalization", false, {x}, "x |> e != e"};
    else if (F(x, 0) != 0 || F(0, x) != 0) norm = {"normalization", false, {x}, "f(x,1) or f(1,x) != e"};
    else if (M(x, 0) != x || M(0, x) != x) norm = {"normalization", false, {x}, "1 is not a unit for *"};
  }
  for (Index b = 0; b < na && norm.passed; ++b) {
    if (R(0, b) != 0) norm = {"normalization", false, {b}, "1 <| a != 1"};
    else if (L(0, b) != b) norm = {"normalization", false, {b}, "1 |> a != a"};
  }
  r.add(norm);
  r.add(CheckResult{"2a", true, {}, "vacuous on group-likes"});
  run("2b", {nx, na, na}, [&](Index x, Index p, Index q) { return R(R(x, p), q) == R(x, A(p, q)); });
  run("2c", {nx, nx, nx},
      [&](Index x, Index y, Index z) { return M(M(x, y), z) == M(R(x, F(y, z)), M(y, z)); });
  run("2d", {nx, na, na},
      [&](Index x, Index p, Index q) { return L(x, A(p, q)) == A(L(x, p), L(R(x, p), q)); });
  run("2e", {nx, nx, na},
      [&](Index x, Index y, Index p) { return R(M(x, y), p) == M(R(x, L(y, p)), R(y, p)); });
  run("2f", {nx, nx, na}, [&](Index x, Index y, Index p) {
    const Index yp = L(y, p);
    return A(L(x, yp), F(R(x, yp), R(y, p))) == A(F(x, y), L(M(x, y), p));
  });
  run("2g", {nx, nx, nx}, [&](Index x, Index y, Index z) {
    const Index fyz = F(y, z);
    return A(L(x, fyz), F(R(x, fyz), M(y, z))) == A(F(x, y), F(M(x, y), z));
  });
  r.add(CheckResult{"2h", true, {}, "vacuous on group-likes"});
  r.add(CheckResult{"2i", true, {}, "vacuous on group-likes"});
  return r;
}

CosetStructure coset_extending_structure(const GroupTable& g, const std::vector<Index>& subgroup) {
  if (!is_subgroup(g, subgroup)) throw Error("not a subgroup");
  std::vector<Index> reps;
  std::vector<bool> covered(g.order(), false);
  for (Index e = 0; e < g.order(); ++e) {
    if (covered[e]) continue;
    reps.push_back(e);  // smallest element of its coset
    for (Index a : subgroup) covered[g.mul(a, e)] = true;
  }
  return coset_extending_structure(g, subgroup, reps);
}

CosetStructure coset_extending_structure(const GroupTable& g, const std::vector<Index>& subgroup,
                                         const std::vector<Index>& representatives) {
  if (!is_subgroup(g, subgroup)) throw Error("not a subgroup");
  const std::size_t n = g.order();
  CosetStructure out;
  out.a_elements = subgroup;
  std::sort(out.a_elements.begin(), out.a_elements.end());
  out.a_elements.erase(std::unique(out.a_elements.begin(), out.a_elements.end()), out.a_elements.end());
  out.reps = representatives;
  std::sort(out.reps.begin(), out.reps.end());
  const std::size_t na = out.a_elements.size(), nx = out.reps.size();

  std::vector<int> a_index(n, -1), coset_rep(n, -1);
  for (Index i = 0; i < na; ++i) a_index[out.a_elements[i]] = static_cast<int>(i);
  for (Index x = 0; x < nx; ++x) {
    const Index r = out.reps.at(x);
    if (r >= n) throw Error("representative out of range");
    for (Index a : out.a_elements) {
      const Index e = g.mul(a, r);
      if (coset_rep[e] != -1) throw Error("two representatives of one right coset");
      coset_rep[e] = static_cast<int>(x);
    }
  }
  if (na * nx != n) throw Error("representatives do not cover every right coset");
  if (out.reps[0] != g.identity()) throw Error("the identity must represent the subgroup");

  // e = a . x with a in A, x in X.
  auto split = [&](Index e) {
    const Index x = static_cast<Index>(coset_rep[e]);
    const Index a = g.mul(e, g.inverse(out.reps[x]));
    return std::pair<Index, Index>{static_cast<Index>(a_index[a]), x};
  };

  std::vector<std::vector<Index>> amult(na, std::vector<Index>(na));
  std::vector<std::string> alabels;
  for (Index i = 0; i < na; ++i) {
    alabels.push_back(g.labels()[out.a_elements[i]]);
    for (Index j = 0; j < na; ++j)
      amult[i][j] = static_cast<Index>(a_index[g.mul(out.a_elements[i], out.a_elements[j])]);
  }
  GroupExtendingStructure& s = out.ges;
  s.a = GroupTable(std::move(amult), std::move(alabels));
  for (Index x = 0; x < nx; ++x) s.x_labels.push_back(g.labels()[out.reps[x]]);
  s.ract.assign(nx, std::vector<Index>(na));
  s.lact.assign(nx, std::vector<Index>(na));
  s.cocyc.assign(nx, std::vector<Index>(nx));
  s.star.assign(nx, std::vector<Index>(nx));
  for (Index x = 0; x < nx; ++x) {
    for (Index a = 0; a < na; ++a) {
      auto [l, r] = split(g.mul(out.reps[x], out.a_elements[a]));
      s.lact[x][a] = l;
      s.ract[x][a] = r;
    }
    for (Index y = 0; y < nx; ++y) {
      auto [f, m] = split(g.mul(out.reps[x], out.reps[y]));
      s.cocyc[x][y] = f;
      s.star[x][y] = m;
    }
  }
  out.to_g.resize(n);
  for (Index a = 0; a < na; ++a)
    for (Index x = 0; x < nx; ++x) out.to_g[a * nx + x] = g.mul(out.a_elements[a], out.reps[x]);
  return out;
}

Hopf group_algebra(const Field& k, const GroupTable& g) {
  const Index n = static_cast<Index>(g.order());
  BasedSpace v(g.labels());
  BasedSpace vv = tensor_space(v, v);
  std::vector<SparseVec> delta(n), counit(n), mult(n * n), s(n);
  for (Index i = 0; i < n; ++i) {
    delta[i] = basis_vector(k, i * n + i);
    counit[i] = basis_vector(k, 0);
    s[i] = basis_vector(k, g.inverse(i));
    for (Index j = 0; j < n; ++j) mult[i * n + j] = basis_vector(k, g.mul(i, j));
  }
  Coalgebra c{v, LinMap(k, v, vv, std::move(delta)), LinMap(k, v, BasedSpace::ground(), std::move(counit))};
  Algebra a{v, LinMap(k, vv, v, std::move(mult)), basis_vector(k, 0), Associativity::yes};
  return Hopf{Bialgebra{std::move(c), std::move(a)}, LinMap(k, v, v, std::move(s))};
}

Coalgebra grouplike_coalgebra(const Field& k, const std::vector<std::string>& labels) {
  BasedSpace v(labels);
  const Index n = static_cast<Index>(v.dim());
  std::vector<SparseVec> delta(n), counit(n);
  for (Index i = 0; i < n; ++i) {
    delta[i] = basis_vector(k, i * n + i);
    counit[i] = basis_vector(k, 0);
  }
  return Coalgebra{v, LinMap(k, v, tensor_space(v, v), std::move(delta)),
                   LinMap(k, v, BasedSpace::ground(), std::move(counit))};
}

ExtendingDatum lift_to_hopf(const Field& k, const GroupExtendingStructure& s) {
  validate_ges(s);  // throws on malformed tables
  Hopf a = group_algebra(k, s.a);
  Coalgebra h = grouplike_coalgebra(k, s.x_labels);
  const Index na = static_cast<Index>(s.a.order()), nx = static_cast<Index>(s.nx());
  std::vector<SparseVec> ract(nx * na), lact(nx * na), f(nx * nx), dot(nx * nx);
  for (Index x = 0; x < nx; ++x) {
    for (Index b = 0; b < na; ++b) {
      ract[x * na + b] = basis_vector(k, s.ract[x][b]);
      lact[x * na + b] = basis_vector(k, s.lact[x][b]);
    }
    for (Index y = 0; y < nx; ++y) {
      f[x * nx + y] = basis_vector(k, s.cocyc[x][y]);
      dot[x * nx + y] = basis_vector(k, s.star[x][y]);
    }
  }
  const BasedSpace& av = a.bialgebra.space();
  const BasedSpace hv = h.space;
  const BasedSpace ha = tensor_space(hv, av), hh = tensor_space(hv, hv);
  return ExtendingDatum{a.bialgebra,
                        a.antipode,
                        std::move(h),
                        basis_vector(k, 0),
                        LinMap(k, hh, hv, std::move(dot)),
                        LinMap(k, ha, hv, std::move(ract)),
                        LinMap(k, ha, av, std::move(lact)),
                        LinMap(k, hh, av, std::move(f))};
}

GroupTable group_unified_product(const GroupExtendingStructure& s) {
  const std::size_t na = s.a.order(), nx = s.nx();
  std::vector<std::vector<Index>> mult(na * nx, std::vector<Index>(na * nx));
  std::vector<std::string> labels;
  for (Index a = 0; a < na; ++a)
    for (Index x = 0; x < nx; ++x) {
      labels.push_back("(" + s.a.labels()[a] + "," + s.x_labels[x] + ")");
      for (Index b = 0; b < na; ++b)
        for (Index y = 0; y < nx; ++y) {
          const Index xb = s.ract[x][b];
          const Index first = s.a.mul(s.a.mul(a, s.lact[x][b]), s.cocyc[xb][y]);
          mult[a * nx + x][b * nx + y] = static_cast<Index>(first * nx + s.star[xb][y]);
        }
    }
  return GroupTable(std::move(mult), std::move(labels));
}

std::optional<std::vector<Index>> star_inverses(const GroupExtendingStructure& s) {
  std::vector<Index> inv(s.nx());
  for (Index x = 0; x < s.nx(); ++x) {
    bool found = false;
    for (Index y = 0; y < s.nx() && !found; ++y)
      if (s.star[x][y] == 0 && s.star[y][x] == 0) {
        inv[x] = y;
        found = true;
      }
    if (!found) return std::nullopt;
  }
  return inv;
}

std::optional<std::vector<Index>> find_isomorphism(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order();
  if (h.order() != n) return std::nullopt;
  // Greedy generating set of g.
  std::vector<Index> gens;
  std::vector<Index> span{g.identity()};
  for (Index a = 0; a < n && span.size() < n; ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = closure(g, gens);
  }
  // Each element of g as (parent, generator) in a BFS tree.
  std::vector<std::pair<Index, std::size_t>> parent(n, {0, 0});
  std::vector<Index> bfs{g.identity()};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Index y = g.mul(bfs[i], gens[k]);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = {bfs[i], k};
        bfs.push_back(y);
      }
    }

  std::vector<Index> images(gens.size());
  std::function<std::optional<std::vector<Index>>(std::size_t)> search =
      [&](std::size_t k) -> std::optional<std::vector<Index>> {
    if (k == gens.size()) {
      std::vector<Index> phi(n);
      phi[0] = h.identity();
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        const Index x = bfs[i];
        phi[x] = h.mul(phi[parent[x].first], images[parent[x].second]);
      }
      std::vector<bool> hit(n, false);
      for (Index v : phi) {
        if (hit[v]) return std::nullopt;
        hit[v] = true;
      }
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return std::nullopt;
      return phi;
    }
    const std::size_t ord = g.element_order(gens[k]);
    for (Index c = 0; c < n; ++c) {
      if (h.element_order(c) != ord) continue;
      images[k] = c;
      if (auto r = search(k + 1)) return r;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace uprod
