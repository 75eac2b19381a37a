#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace oracle {

namespace {

mpq_class reduce(const mpq_class& x, std::uint32_t p) {
  if (p == 0) return x;
  mpz_class m(p);
  mpz_class num = x.get_num() % m;
  mpz_class den = x.get_den() % m;
  if (num < 0) num += m;
  if (den < 0) den += m;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = (num * inv) % m;
  return mpq_class(r);
}

}  // namespace

Mat dense(const uprod::LinMap& f) {
  Mat m(f.codomain_dim(), std::vector<mpq_class>(f.domain_dim(), 0));
  for (uprod::Index c = 0; c < f.domain_dim(); ++c) {
    for (const auto& t : f.column(c)) {
      m[t.index][c] = mpq_class(t.coeff.numerator(), t.coeff.denominator());
    }
  }
  return m;
}

Mat identity(std::size_t n) {
  Mat m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b, std::uint32_t p) {
  const std::size_t r = a.size();
  const std::size_t k = b.size();
  const std::size_t c = k == 0 ? 0 : b[0].size();
  Mat out(r, std::vector<mpq_class>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      mpq_class s = 0;
      for (std::size_t l = 0; l < k; ++l) s += a[i][l] * b[l][j];
      out[i][j] = reduce(s, p);
    }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Mat out(ar * br, std::vector<mpq_class>(ac * bc, 0));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

std::size_t rank(Mat m, std::uint32_t p) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = reduce(x, p);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class factor = m[i][c] / m[r][c];
      if (p != 0) {
        mpz_class inv;
        mpz_class piv_val = m[r][c].get_num();
        mpz_class mod(p);
        mpz_invert(inv.get_mpz_t(), piv_val.get_mpz_t(), mod.get_mpz_t());
        factor = reduce(mpq_class(m[i][c].get_num() * inv), p);
      }
      for (std::size_t j = c; j < cols; ++j) m[i][j] = reduce(m[i][j] - factor * m[r][j], p);
    }
    ++r;
  }
  return r;
}

bool equal(const Mat& a, const Mat& b, std::uint32_t p) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (reduce(a[i][j], p) != reduce(b[i][j], p)) return false;
  }
  return true;
}

int Table::inverse(int g) const {
  for (int h = 0; h < size(); ++h)
    if (mult[g][h] == 0 && mult[h][g] == 0) return h;
  throw std::logic_error("element has no inverse");
}

Table cyclic(int n) {
  Table t;
  t.mult.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.mult[i][j] = (i + j) % n;
  return t;
}

Table permutation_group(const std::vector<std::vector<int>>& generators,
                        std::vector<std::vector<int>>* elements) {
  const std::size_t deg = generators.at(0).size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        auto q = compose(p, g);
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> elems(seen.begin(), seen.end());
  Table t;
  const int n = static_cast<int>(elems.size());
  t.mult.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto prod = compose(elems[i], elems[j]);
      t.mult[i][j] = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), prod) - elems.begin());
    }
  if (elements) *elements = elems;
  return t;
}

Table direct_product(const Table& a, const Table& b) {
  const int na = a.size(), nb = b.size();
  Table t;
  t.mult.assign(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      t.mult[i][j] = a.mult[i / nb][j / nb] * nb + b.mult[i % nb][j % nb];
  return t;
}

uprod::Bialgebra monoid_bialgebra(const uprod::Field& k, const Table& t) {
  using namespace uprod;
  const Index n = static_cast<Index>(t.size());
  BasedSpace v = BasedSpace::indexed(n, "g");
  BasedSpace vv = tensor_space(v, v);
  std::vector<SparseVec> delta(n), counit(n), mult(n * n);
  for (Index i = 0; i < n; ++i) {
    delta[i] = {{i * n + i, k.one()}};
    counit[i] = {{0, k.one()}};
    for (Index j = 0; j < n; ++j) mult[i * n + j] = {{static_cast<Index>(t.mult[i][j]), k.one()}};
  }
  Coalgebra c{v, LinMap(k, v, vv, delta), LinMap(k, v, BasedSpace::ground(), counit)};
  Algebra a{v, LinMap(k, vv, v, mult), basis_vector(k, 0), Associativity::unknown};
  return Bialgebra{c, a};
}

uprod::Hopf group_hopf(const uprod::Field& k, const Table& t) {
  using namespace uprod;
  Bialgebra b = monoid_bialgebra(k, t);
  b.algebra.associative = Associativity::yes;
  std::vector<SparseVec> s(t.size());
  for (int g = 0; g < t.size(); ++g) s[g] = basis_vector(k, static_cast<Index>(t.inverse(g)));
  LinMap anti(k, b.space(), b.space(), s);
  return Hopf{b, anti};
}

uprod::Coalgebra grouplike(const uprod::Field& k, int n) {
  return monoid_bialgebra(k, cyclic(n)).coalgebra;
}

uprod::Hopf sweedler(const uprod::Field& k) {
  using namespace uprod;
  // Basis order: 0 = 1, 1 = g, 2 = x, 3 = gx. Products are +-(basis element)
  // or zero: write g^a x^b with x g = -g x.
  BasedSpace v({"1", "g", "x", "gx"});
  BasedSpace vv = tensor_space(v, v);
  auto encode = [](int a, int b) { return static_cast<Index>(a + 2 * b); };
  std::vector<SparseVec> mult(16);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      int a1 = p % 2, b1 = p / 2, a2 = q % 2, b2 = q / 2;
      if (b1 + b2 > 1) continue;
      // g^a1 x^b1 g^a2 x^b2 = (-1)^(b1 a2) g^(a1+a2) x^(b1+b2)
      long sign = (b1 * a2) % 2 ? -1 : 1;
      mult[p * 4 + q] = {{encode((a1 + a2) % 2, b1 + b2), k.from_int(sign)}};
    }
  std::vector<SparseVec> delta(4);
  delta[0] = {{0, k.one()}};
  delta[1] = {{1 * 4 + 1, k.one()}};
  delta[2] = {{2 * 4 + 0, k.one()}, {1 * 4 + 2, k.one()}};          // x (x) 1 + g (x) x
  delta[3] = {{3 * 4 + 1, k.one()}, {0 * 4 + 3, k.one()}};          // gx (x) g + 1 (x) gx
  std::vector<SparseVec> counit = {{{0, k.one()}}, {{0, k.one()}}, {}, {}};
  std::vector<SparseVec> s = {{{0, k.one()}}, {{1, k.one()}}, {{3, -k.one()}}, {{2, k.one()}}};
  Coalgebra c{v, LinMap(k, v, vv, delta), LinMap(k, v, BasedSpace::ground(), counit)};
  Algebra a{v, LinMap(k, vv, v, mult), basis_vector(k, 0), Associativity::unknown};
  return Hopf{Bialgebra{c, a}, LinMap(k, v, v, s)};
}

CosetData coset_data(const Table& g, const std::vector<int>& sub) {
  const int n = g.size();
  CosetData out;
  out.a_elements = sub;
  std::sort(out.a_elements.begin(), out.a_elements.end());
  std::vector<int> a_index(n, -1);
  for (std::size_t i = 0; i < out.a_elements.size(); ++i) a_index[out.a_elements[i]] = static_cast<int>(i);
  // rep_of[e] = smallest element of the right coset A e.
  std::vector<int> rep_of(n, n);
  for (int e = 0; e < n; ++e)
    for (int a : out.a_elements) rep_of[e] = std::min(rep_of[e], g.mult[a][e]);
  std::set<int> reps(rep_of.begin(), rep_of.end());
  out.reps.assign(reps.begin(), reps.end());
  std::vector<int> x_index(n, -1);
  for (std::size_t i = 0; i < out.reps.size(); ++i) x_index[out.reps[i]] = static_cast<int>(i);
  const int na = static_cast<int>(out.a_elements.size());
  const int nx = static_cast<int>(out.reps.size());

  // e = a.x uniquely; returns (a-index, x-index).
  auto split = [&](int e) {
    int x = rep_of[e];
    int a = g.mult[e][g.inverse(x)];
    return std::pair<int, int>{a_index[a], x_index[x]};
  };

  SetDatum& d = out.datum;
  d.a.mult.assign(na, std::vector<int>(na));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) d.a.mult[i][j] = a_index[g.mult[out.a_elements[i]][out.a_elements[j]]];
  d.nx = nx;
  d.ract.assign(nx, std::vector<int>(na));
  d.lact.assign(nx, std::vector<int>(na));
  d.cocyc.assign(nx, std::vector<int>(nx));
  d.star.assign(nx, std::vector<int>(nx));
  for (int x = 0; x < nx; ++x) {
    for (int a = 0; a < na; ++a) {
      auto [l, r] = split(g.mult[out.reps[x]][out.a_elements[a]]);
      d.lact[x][a] = l;
      d.ract[x][a] = r;
    }
    for (int y = 0; y < nx; ++y) {
      auto [f, st] = split(g.mult[out.reps[x]][out.reps[y]]);
      d.cocyc[x][y] = f;
      d.star[x][y] = st;
    }
  }
  out.to_g.resize(na * nx);
  for (int a = 0; a < na; ++a)
    for (int x = 0; x < nx; ++x) out.to_g[a * nx + x] = g.mult[out.a_elements[a]][out.reps[x]];
  return out;
}

uprod::ExtendingDatum linearize(const uprod::Field& k, const SetDatum& s) {
  using namespace uprod;
  const Index na = static_cast<Index>(s.a.size());
  const Index nx = static_cast<Index>(s.nx);
  Hopf a = group_hopf(k, s.a);
  Coalgebra h = grouplike(k, s.nx);
  BasedSpace hv = h.space, av = a.bialgebra.space();
  std::vector<SparseVec> ract(nx * na), lact(nx * na), f(nx * nx), dot(nx * nx);
  for (Index x = 0; x < nx; ++x) {
    for (Index b = 0; b < na; ++b) {
      ract[x * na + b] = basis_vector(k, static_cast<Index>(s.ract[x][b]));
      lact[x * na + b] = basis_vector(k, static_cast<Index>(s.lact[x][b]));
    }
    for (Index y = 0; y < nx; ++y) {
      f[x * nx + y] = basis_vector(k, static_cast<Index>(s.cocyc[x][y]));
      dot[x * nx + y] = basis_vector(k, static_cast<Index>(s.star[x][y]));
    }
  }
  BasedSpace ha = tensor_space(hv, av), hh = tensor_space(hv, hv);
  return ExtendingDatum{a.bialgebra,
                        a.antipode,
                        h,
                        basis_vector(k, 0),
                        LinMap(k, hh, hv, dot),
                        LinMap(k, ha, hv, ract),
                        LinMap(k, ha, av, lact),
                        LinMap(k, hh, av, f)};
}

Table set_product(const SetDatum& s) {
  const int na = s.a.size(), nx = s.nx;
  Table t;
  t.mult.assign(na * nx, std::vector<int>(na * nx));
  for (int a = 0; a < na; ++a)
    for (int x = 0; x < nx; ++x)
      for (int b = 0; b < na; ++b)
        for (int y = 0; y < nx; ++y) {
          int xb = s.ract[x][b];
          int first = s.a.mult[s.a.mult[a][s.lact[x][b]]][s.cocyc[xb][y]];
          t.mult[a * nx + x][b * nx + y] = first * nx + s.star[xb][y];
        }
  return t;
}

uprod::LinMap transported_mult(const uprod::Field& k, const Table& g, const std::vector<int>& to_g) {
  using namespace uprod;
  const Index n = static_cast<Index>(to_g.size());
  std::vector<int> from_g(n);
  for (Index i = 0; i < n; ++i) from_g[to_g[i]] = static_cast<int>(i);
  std::vector<SparseVec> cols(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      cols[i * n + j] = basis_vector(k, static_cast<Index>(from_g[g.mult[to_g[i]][to_g[j]]]));
  BasedSpace v = BasedSpace::indexed(n);
  return LinMap(k, tensor_space(v, v), v, cols);
}

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

bool Rng::chance(double p) { return std::bernoulli_distribution(p)(gen_); }

uprod::Scalar Rng::scalar(const uprod::Field& field, bool nonzero) {
  for (;;) {
    int num = uniform(-9, 9);
    int den = field.is_rational() ? uniform(1, 5) : 1;
    uprod::Scalar s = field.from_fraction(mpz_class(num), mpz_class(den));
    if (!nonzero || !s.is_zero()) return s;
  }
}

uprod::LinMap Rng::map(const uprod::Field& field, std::size_t rows, std::size_t cols,
                       double density) {
  std::vector<uprod::SparseVec> columns(cols);
  for (auto& col : columns)
    for (uprod::Index r = 0; r < rows; ++r)
      if (chance(density)) col.push_back({r, scalar(field, true)});
  return uprod::LinMap(field, uprod::BasedSpace::indexed(cols), uprod::BasedSpace::indexed(rows),
                       std::move(columns));
}

uprod::LinMap Rng::invertible(const uprod::Field& field, std::size_t n, int steps) {
  // Columns of an upper-unitriangular-times-permutation-times-diagonal product,
  // written out directly so invert() is not needed to build test input.
  Mat m = identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    uprod::Scalar d = scalar(field, true);
    m[i][i] = mpq_class(d.numerator(), d.denominator());
  }
  for (int s = 0; s < steps && n > 1; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    uprod::Scalar c = scalar(field);
    mpq_class cq(c.numerator(), c.denominator());
    for (std::size_t k = 0; k < n; ++k) m[i][k] = reduce(m[i][k] + cq * m[j][k], field.modulus());
    if (chance(0.3)) std::swap(m[i], m[j]);
  }
  std::vector<uprod::SparseVec> columns(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (m[r][c] != 0)
        columns[c].push_back({static_cast<uprod::Index>(r),
                              field.from_fraction(m[r][c].get_num(), m[r][c].get_den())});
  return uprod::LinMap(field, uprod::BasedSpace::indexed(n), uprod::BasedSpace::indexed(n),
                       std::move(columns));
}

}  // namespace oracle
