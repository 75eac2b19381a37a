#include "uprod/linear.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "uprod/errors.hpp"

namespace uprod {

// ---------------------------------------------------------------------------
// BasedSpace

BasedSpace::BasedSpace() {
  auto node = std::make_shared<Node>();
  node->dim = 1;
  node->labels = {"1"};
  node_ = std::move(node);
}

BasedSpace::BasedSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw Error("a based space needs at least one basis vector");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error("basis labels must be distinct");
  auto node = std::make_shared<Node>();
  node->dim = labels.size();
  node->labels = std::move(labels);
  node_ = std::move(node);
}

BasedSpace BasedSpace::indexed(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return BasedSpace(std::move(labels));
}

std::string BasedSpace::label(Index i) const {
  if (!is_tensor()) return node_->labels.at(i);
  const auto& fs = node_->factors;
  std::vector<Index> digits(fs.size());
  Index rest = i;
  for (std::size_t k = fs.size(); k-- > 0;) {
    digits[k] = static_cast<Index>(rest % fs[k].dim());
    rest /= static_cast<Index>(fs[k].dim());
  }
  std::string out = "(";
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) out += ',';
    out += fs[k].label(digits[k]);
  }
  return out + ")";
}

std::vector<std::string> BasedSpace::labels() const {
  if (!is_tensor()) return node_->labels;
  std::vector<std::string> out;
  out.reserve(dim());
  for (Index i = 0; i < dim(); ++i) out.push_back(label(i));
  return out;
}

BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b) {
  const BasedSpace pair[] = {a, b};
  return tensor_space(pair);
}

BasedSpace tensor_space(std::span<const BasedSpace> factors) {
  if (factors.empty()) return BasedSpace::ground();
  if (factors.size() == 1) return factors[0];
  auto node = std::make_shared<BasedSpace::Node>();
  node->dim = 1;
  for (const auto& f : factors) node->dim *= f.dim();
  node->factors.assign(factors.begin(), factors.end());
  return BasedSpace(std::shared_ptr<const BasedSpace::Node>(std::move(node)));
}

bool operator==(const BasedSpace& a, const BasedSpace& b) {
  if (a.node_ == b.node_) return true;
  if (a.dim() != b.dim()) return false;
  if (!a.is_tensor() && !b.is_tensor()) return a.node_->labels == b.node_->labels;
  if (a.is_tensor() && b.is_tensor() && a.factors().size() == b.factors().size()) {
    return a.factors() == b.factors();
  }
  for (Index i = 0; i < a.dim(); ++i) {
    if (a.label(i) != b.label(i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sparse vectors

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Term acc = std::move(v[i]);
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].index == acc.index; ++j) acc.coeff += v[j].coeff;
    if (!acc.coeff.is_zero()) v[out++] = std::move(acc);
    i = j;
  }
  v.resize(out);
}

void add_scaled(SparseVec& acc, const SparseVec& v, const Scalar& scale) {
  if (scale.is_zero() || v.empty()) return;
  SparseVec merged;
  merged.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].index < v[j].index)) {
      merged.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || v[j].index < acc[i].index) {
      merged.push_back({v[j].index, v[j].coeff * scale});
      ++j;
    } else {
      Scalar c = acc[i].coeff + v[j].coeff * scale;
      if (!c.is_zero()) merged.push_back({acc[i].index, std::move(c)});
      ++i;
      ++j;
    }
  }
  acc = std::move(merged);
}

SparseVec scaled(const SparseVec& v, const Scalar& scale) {
  if (scale.is_zero()) return {};
  SparseVec out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({t.index, t.coeff * scale});
  return out;
}

SparseVec basis_vector(const Field& field, Index i) { return {{i, field.one()}}; }

SparseVec tensor_vectors(const SparseVec& a, const SparseVec& b, std::size_t dim_b) {
  SparseVec out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      out.push_back({static_cast<Index>(x.index * dim_b + y.index), x.coeff * y.coeff});
    }
  }
  return out;  // already sorted: row-major order of sorted inputs
}

// ---------------------------------------------------------------------------
// LinMap

LinMap::LinMap(Field field, BasedSpace domain, BasedSpace codomain)
    : field_(field),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      columns_(domain_.dim()) {}

LinMap::LinMap(Field field, BasedSpace domain, BasedSpace codomain,
               std::vector<SparseVec> columns)
    : field_(field),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      columns_(std::move(columns)) {
  if (columns_.size() != domain_.dim()) {
    throw DimensionMismatch("column count " + std::to_string(columns_.size()) +
                            " != domain dimension " + std::to_string(domain_.dim()));
  }
  for (auto& col : columns_) {
    normalize(col);
    if (!col.empty() && col.back().index >= codomain_.dim()) {
      throw DimensionMismatch("coefficient index " + std::to_string(col.back().index) +
                              " outside codomain of dimension " +
                              std::to_string(codomain_.dim()));
    }
    for (const auto& t : col) {
      if (t.coeff.field() != field_) throw FieldMismatch("map coefficient from another field");
    }
  }
}

LinMap LinMap::identity(const Field& field, const BasedSpace& space) {
  std::vector<SparseVec> cols(space.dim());
  for (Index i = 0; i < space.dim(); ++i) cols[i] = basis_vector(field, i);
  return LinMap(field, space, space, std::move(cols));
}

LinMap LinMap::from_function(const Field& field, const BasedSpace& domain,
                             const BasedSpace& codomain, std::span<const Index> image) {
  if (image.size() != domain.dim()) throw DimensionMismatch("function table size != domain dimension");
  std::vector<SparseVec> cols(domain.dim());
  for (Index i = 0; i < domain.dim(); ++i) cols[i] = basis_vector(field, image[i]);
  return LinMap(field, domain, codomain, std::move(cols));
}

LinMap LinMap::form(const Field& field, const BasedSpace& domain, std::span<const Scalar> values) {
  if (values.size() != domain.dim()) throw DimensionMismatch("form size != domain dimension");
  std::vector<SparseVec> cols(domain.dim());
  for (Index i = 0; i < domain.dim(); ++i) {
    if (!values[i].is_zero()) cols[i] = {{0, values[i]}};
  }
  return LinMap(field, domain, BasedSpace::ground(), std::move(cols));
}

LinMap LinMap::point(const Field& field, const BasedSpace& codomain, SparseVec vector) {
  std::vector<SparseVec> cols{std::move(vector)};
  return LinMap(field, BasedSpace::ground(), codomain, std::move(cols));
}

Scalar LinMap::entry(Index row, Index col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Term& t, Index r) { return t.index < r; });
  if (it != c.end() && it->index == row) return it->coeff;
  return field_.zero();
}

SparseVec LinMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& t : v) {
    if (t.index >= columns_.size()) throw DimensionMismatch("vector index outside domain");
    for (const auto& s : columns_[t.index]) out.push_back({s.index, s.coeff * t.coeff});
  }
  normalize(out);
  return out;
}

bool LinMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

std::size_t LinMap::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::optional<Index> LinMap::first_difference(const LinMap& other) const {
  if (domain_dim() != other.domain_dim() || codomain_dim() != other.codomain_dim()) {
    throw DimensionMismatch("comparing maps of different shapes");
  }
  for (Index i = 0; i < columns_.size(); ++i) {
    if (columns_[i] != other.columns_[i]) return i;
  }
  return std::nullopt;
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.field_ == b.field_ && a.domain_dim() == b.domain_dim() &&
         a.codomain_dim() == b.codomain_dim() && a.columns_ == b.columns_;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  if (a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim()) {
    throw DimensionMismatch("adding maps of different shapes");
  }
  LinMap out = a;
  for (std::size_t i = 0; i < out.columns_.size(); ++i) {
    add_scaled(out.columns_[i], b.columns_[i], a.field_.one());
  }
  return out;
}

LinMap operator-(const LinMap& a, const LinMap& b) { return a + b.scaled(-b.field_.one()); }

LinMap LinMap::scaled(const Scalar& s) const {
  LinMap out = *this;
  for (auto& c : out.columns_) c = uprod::scaled(c, s);
  return out;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.codomain_dim() != f.domain_dim()) {
    throw DimensionMismatch("compose: codomain dimension " + std::to_string(g.codomain_dim()) +
                            " != domain dimension " + std::to_string(f.domain_dim()));
  }
  if (f.field() != g.field()) throw FieldMismatch("compose: maps over different fields");
  std::vector<SparseVec> cols(g.domain_dim());
  for (Index i = 0; i < g.domain_dim(); ++i) {
    const auto& gc = g.column(i);
    if (gc.size() == 1) {
      cols[i] = scaled(f.column(gc[0].index), gc[0].coeff);
      continue;
    }
    SparseVec acc;
    for (const auto& t : gc) {
      for (const auto& s : f.column(t.index)) acc.push_back({s.index, s.coeff * t.coeff});
    }
    normalize(acc);
    cols[i] = std::move(acc);
  }
  return LinMap(f.field(), g.domain(), f.codomain(), std::move(cols));
}

LinMap compose(std::span<const LinMap> chain) {
  if (chain.empty()) throw Error("compose: empty chain");
  LinMap out = chain.back();
  for (std::size_t k = chain.size() - 1; k-- > 0;) out = compose(chain[k], out);
  return out;
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
  if (f.field() != g.field()) throw FieldMismatch("tensor_map: maps over different fields");
  const std::size_t dg = g.domain_dim();
  const std::size_t cg = g.codomain_dim();
  std::vector<SparseVec> cols(f.domain_dim() * dg);
  for (Index i = 0; i < f.domain_dim(); ++i) {
    for (Index j = 0; j < dg; ++j) {
      cols[i * dg + j] = tensor_vectors(f.column(i), g.column(j), cg);
    }
  }
  return LinMap(f.field(), tensor_space(f.domain(), g.domain()),
                tensor_space(f.codomain(), g.codomain()), std::move(cols));
}

LinMap tensor_map(std::span<const LinMap> factors) {
  if (factors.empty()) throw Error("tensor_map: no factors");
  LinMap out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = tensor_map(out, factors[k]);
  // Rebuild flat domain/codomain labels so that nesting does not leak into labels.
  std::vector<BasedSpace> dom, cod;
  for (const auto& f : factors) {
    dom.push_back(f.domain());
    cod.push_back(f.codomain());
  }
  return LinMap(out.field(), tensor_space(dom), tensor_space(cod), out.columns());
}

LinMap twist(const Field& field, const BasedSpace& a, const BasedSpace& b) {
  const BasedSpace fs[] = {a, b};
  const std::size_t perm[] = {1, 0};
  return tensor_permutation(field, fs, perm);
}

LinMap tensor_permutation(const Field& field, std::span<const BasedSpace> factors,
                          std::span<const std::size_t> perm) {
  const std::size_t k = factors.size();
  if (perm.size() != k) throw DimensionMismatch("permutation length != number of factors");
  std::vector<BasedSpace> out_factors;
  for (std::size_t p : perm) {
    if (p >= k) throw DimensionMismatch("permutation entry out of range");
    out_factors.push_back(factors[p]);
  }
  BasedSpace domain = tensor_space(factors);
  BasedSpace codomain = tensor_space(out_factors);

  std::vector<Index> digits(k);
  std::vector<Index> image(domain.dim());
  for (Index i = 0; i < domain.dim(); ++i) {
    Index rest = i;
    for (std::size_t f = k; f-- > 0;) {
      digits[f] = static_cast<Index>(rest % factors[f].dim());
      rest /= static_cast<Index>(factors[f].dim());
    }
    Index j = 0;
    for (std::size_t p : perm) j = static_cast<Index>(j * factors[p].dim() + digits[p]);
    image[i] = j;
  }
  return LinMap::from_function(field, domain, codomain, image);
}

// ---------------------------------------------------------------------------
// Dense elimination

namespace {

using Dense = std::vector<std::vector<Scalar>>;

/// Row-major matrix M with M[r][c] = coefficient of e_r in f(e_c).
Dense to_dense(const LinMap& f) {
  Dense m(f.codomain_dim(), std::vector<Scalar>(f.domain_dim(), f.field().zero()));
  for (Index c = 0; c < f.domain_dim(); ++c) {
    for (const auto& t : f.column(c)) m[t.index][c] = t.coeff;
  }
  return m;
}

/// Gauss-Jordan on a copy; returns the pivot columns in row order.
std::vector<std::size_t> row_reduce(Dense& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Integer matrix B = D M with D the diagonal of per-row denominator lcms.
std::vector<std::vector<mpz_class>> clear_denominators(const Dense& m, std::vector<mpz_class>& d) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> b(n);
  d.assign(n, mpz_class(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : m[i]) {
      mpz_lcm(d[i].get_mpz_t(), d[i].get_mpz_t(), x.denominator().get_mpz_t());
    }
    b[i].reserve(m[i].size());
    for (const auto& x : m[i]) b[i].push_back(x.numerator() * (d[i] / x.denominator()));
  }
  return b;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("fraction-free elimination: inexact division");
  return q;
}

/// Fraction-free Gauss-Jordan on [B | I]; returns nullopt when singular.
std::optional<Dense> bareiss_inverse(const Dense& m, const Field& field) {
  const std::size_t n = m.size();
  std::vector<mpz_class> d;
  auto b = clear_denominators(m, d);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = b[i][j];
    a[i][n + i] = 1;
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  // Left block is prev * I; right block is prev * B^-1. M^-1 = B^-1 D.
  Dense inv(n, std::vector<Scalar>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(a[i][n + j]) == 0) continue;
      inv[i][j] = field.from_fraction(a[i][n + j] * d[j], prev);
    }
  }
  return inv;
}

std::optional<Dense> gauss_jordan_inverse(const Dense& m, const Field& field) {
  const std::size_t n = m.size();
  Dense a(n, std::vector<Scalar>(2 * n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = field.one();
  }
  auto pivots = row_reduce(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Dense inv(n, std::vector<Scalar>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

LinMap from_dense(const Field& field, const BasedSpace& domain, const BasedSpace& codomain,
                  const Dense& m) {
  std::vector<SparseVec> cols(domain.dim());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (!m[r][c].is_zero()) cols[c].push_back({static_cast<Index>(r), m[r][c]});
    }
  }
  return LinMap(field, domain, codomain, std::move(cols));
}

}  // namespace

std::size_t rank(const LinMap& f) {
  Dense m = to_dense(f);
  return row_reduce(m).size();
}

LinMap invert(const LinMap& f) {
  if (f.domain_dim() != f.codomain_dim()) {
    throw DimensionMismatch("invert: map is not square");
  }
  Dense m = to_dense(f);
  auto inv = f.field().is_rational() ? bareiss_inverse(m, f.field())
                                     : gauss_jordan_inverse(m, f.field());
  if (!inv) throw NotBijective(rank(f), f.domain_dim());
  return from_dense(f.field(), f.codomain(), f.domain(), *inv);
}

LinMap left_inverse(const LinMap& f) {
  // Pick codomain coordinates R on which f restricts to an invertible square
  // block M_R; then L = M_R^-1 o (projection onto R).
  const std::size_t n = f.domain_dim();
  Dense t(n, std::vector<Scalar>(f.codomain_dim(), f.field().zero()));
  for (Index c = 0; c < n; ++c) {
    for (const auto& x : f.column(c)) t[c][x.index] = x.coeff;
  }
  auto rows = row_reduce(t);
  if (rows.size() < n) {
    throw NotInjective("map of rank " + std::to_string(rows.size()) + " on a domain of dimension " +
                       std::to_string(n) + " is not injective");
  }
  std::vector<SparseVec> block_cols(n);
  for (Index c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < n; ++k) {
      Scalar x = f.entry(static_cast<Index>(rows[k]), c);
      if (!x.is_zero()) block_cols[c].push_back({static_cast<Index>(k), x});
    }
  }
  BasedSpace block_space = BasedSpace::indexed(n, "r");
  LinMap block(f.field(), f.domain(), block_space, std::move(block_cols));
  LinMap block_inv = invert(block);
  std::vector<SparseVec> proj_cols(f.codomain_dim());
  for (std::size_t k = 0; k < n; ++k) {
    proj_cols[rows[k]] = basis_vector(f.field(), static_cast<Index>(k));
  }
  LinMap proj(f.field(), f.codomain(), block_space, std::move(proj_cols));
  return compose(block_inv, proj);
}

// ---------------------------------------------------------------------------
// Sparse solve

SolveResult solve_sparse(const Field& field, const std::vector<SparseVec>& rows,
                         const std::vector<Scalar>& rhs, std::size_t num_unknowns) {
  if (rows.size() != rhs.size()) throw DimensionMismatch("solve_sparse: rhs size");
  // Reduced pivot rows: pivot column -> (row, rhs). Each stored row has
  // coefficient 1 at its pivot and no entries in other pivot columns.
  struct Pivot {
    SparseVec row;
    Scalar rhs;
  };
  std::vector<std::optional<Pivot>> pivots(num_unknowns);
  std::vector<Index> pivot_cols;
  // For each column, the pivot columns whose rows mention it.
  std::vector<std::set<Index>> users(num_unknowns);

  SolveResult result;
  result.consistent = true;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseVec row = rows[r];
    normalize(row);
    Scalar b = rhs[r];
    SparseVec reduced;
    std::vector<std::pair<Index, Scalar>> eliminations;
    for (const auto& t : row) {
      if (t.index >= num_unknowns) throw DimensionMismatch("solve_sparse: unknown out of range");
      if (pivots[t.index]) {
        eliminations.emplace_back(t.index, t.coeff);
      } else {
        reduced.push_back(t);
      }
    }
    for (const auto& [col, coeff] : eliminations) {
      const Pivot& p = *pivots[col];
      SparseVec rest;
      for (const auto& t : p.row) {
        if (t.index != col) rest.push_back(t);
      }
      add_scaled(reduced, rest, -coeff);
      b -= coeff * p.rhs;
    }
    if (reduced.empty()) {
      if (!b.is_zero()) result.consistent = false;
      continue;
    }
    const Index col = reduced.front().index;
    Scalar inv = reduced.front().coeff.inverse();
    reduced = scaled(reduced, inv);
    b *= inv;
    // Eliminate the new pivot column from existing pivot rows.
    std::vector<Index> affected(users[col].begin(), users[col].end());
    for (Index pc : affected) {
      Pivot& p = *pivots[pc];
      Scalar coeff = field.zero();
      for (const auto& t : p.row) {
        if (t.index == col) coeff = t.coeff;
      }
      if (coeff.is_zero()) continue;
      for (const auto& t : p.row) users[t.index].erase(pc);
      add_scaled(p.row, reduced, -coeff);
      p.rhs -= coeff * b;
      for (const auto& t : p.row) users[t.index].insert(pc);
    }
    for (const auto& t : reduced) users[t.index].insert(col);
    pivots[col] = Pivot{std::move(reduced), std::move(b)};
    pivot_cols.push_back(col);
  }
  result.rank = pivot_cols.size();
  result.solution.assign(num_unknowns, field.zero());
  if (result.consistent) {
    for (Index c : pivot_cols) result.solution[c] = pivots[c]->rhs;
  }
  return result;
}

}  // namespace uprod
