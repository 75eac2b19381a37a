#include <gtest/gtest.h>

#include "oracles.hpp"
#include "uprod/coalgebra.hpp"
#include "uprod/errors.hpp"

using namespace uprod;

namespace {

const Field Q = Field::rationals();

oracle::Table s3() { return oracle::permutation_group({{1, 0, 2}, {1, 2, 0}}); }
oracle::Table d4() { return oracle::permutation_group({{1, 2, 3, 0}, {3, 2, 1, 0}}); }

std::vector<std::string> failing(const Report& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks())
    if (!c.passed) out.push_back(c.id);
  return out;
}

/// The linear map induced by a set map between group-like bases.
LinMap induced(const Field& k, int from, int to, const std::vector<int>& image) {
  std::vector<Index> img(image.begin(), image.end());
  return LinMap::from_function(k, BasedSpace::indexed(from, "g"), BasedSpace::indexed(to, "g"), img);
}

}  // namespace

TEST(CheckCoalgebra, GrouplikeAndGroundPass) {
  for (int n : {1, 2, 5}) EXPECT_TRUE(check_coalgebra(oracle::grouplike(Q, n)).all_passed());
  EXPECT_TRUE(check_coalgebra(ground_hopf(Q).bialgebra.coalgebra).all_passed());
}

TEST(CheckCoalgebra, CorruptedDeltaIsLocalized) {
  Coalgebra c = oracle::grouplike(Q, 3);
  std::vector<SparseVec> cols = c.delta.columns();
  // delta(e2) = e2 (x) e2 + e2 (x) e1: the two iterates differ by e2 (x) e1 (x) e2.
  cols[2] = {{2 * 3 + 1, Q.one()}, {2 * 3 + 2, Q.one()}};
  c.delta = LinMap(Q, c.delta.domain(), c.delta.codomain(), cols);
  Report r = check_coalgebra(c);
  const CheckResult* co = r.find("coassociativity");
  ASSERT_NE(co, nullptr);
  EXPECT_FALSE(co->passed);
  EXPECT_EQ(co->witness, std::vector<std::uint32_t>{2});
}

TEST(CheckCoalgebra, SweedlerPasses) {
  EXPECT_TRUE(check_coalgebra(oracle::sweedler(Q).bialgebra.coalgebra).all_passed());
}

TEST(CheckBialgebra, GroupAlgebrasPass) {
  EXPECT_TRUE(check_bialgebra(oracle::monoid_bialgebra(Q, oracle::cyclic(2))).all_passed());
  EXPECT_TRUE(check_bialgebra(oracle::monoid_bialgebra(Q, s3())).all_passed());
  EXPECT_TRUE(check_hopf(oracle::group_hopf(Field::prime(3), d4())).all_passed());
  EXPECT_TRUE(check_hopf(oracle::sweedler(Q)).all_passed());
  EXPECT_TRUE(check_hopf(ground_hopf(Q)).all_passed());
}

TEST(CheckBialgebra, TensorProductOfGroupAlgebras) {
  Bialgebra a = oracle::monoid_bialgebra(Q, oracle::cyclic(2));
  Bialgebra b = oracle::monoid_bialgebra(Q, oracle::cyclic(3));
  Bialgebra ab = tensor_bialgebra(a, b);
  Report r = check_bialgebra(ab);
  EXPECT_TRUE(r.all_passed()) << r;
  Bialgebra direct = oracle::monoid_bialgebra(Q, oracle::direct_product(oracle::cyclic(2), oracle::cyclic(3)));
  EXPECT_EQ(ab.algebra.mult, direct.algebra.mult);
  EXPECT_EQ(ab.coalgebra.delta, direct.coalgebra.delta);
  EXPECT_EQ(ab.coalgebra.counit, direct.coalgebra.counit);
  EXPECT_EQ(ab.algebra.unit, direct.algebra.unit);
}

TEST(CheckBialgebra, BrokenCounitOnUnit) {
  // The counit laws force counit(1) = 1 once delta(1) = 1 (x) 1, so breaking
  // counit(1) necessarily breaks the counit laws at 1 as well; the delta and
  // algebra axioms stay intact.
  Bialgebra b = oracle::monoid_bialgebra(Q, oracle::cyclic(2));
  std::vector<SparseVec> eps = b.coalgebra.counit.columns();
  eps[0] = {{0, Q.from_int(2)}};
  b.coalgebra.counit = LinMap(Q, b.space(), BasedSpace::ground(), eps);
  Report r = check_bialgebra(b);
  EXPECT_FALSE(r.passed("counit-unit"));
  EXPECT_EQ(r.find("counit-left")->witness, std::vector<std::uint32_t>{0});
  for (const char* ok : {"coassociativity", "unit-left", "unit-right", "associativity",
                         "delta-multiplicative", "delta-unit"})
    EXPECT_TRUE(r.passed(ok)) << ok;
}

TEST(CheckBialgebra, NonMultiplicativeDeltaIsLocalized) {
  Hopf h = oracle::sweedler(Q);
  Bialgebra b = h.bialgebra;
  // Flip the sign of x^2-adjacent structure: declare x * x = 1 instead of 0.
  std::vector<SparseVec> m = b.algebra.mult.columns();
  m[2 * 4 + 2] = {{0, Q.one()}};
  b.algebra.mult = LinMap(Q, b.algebra.mult.domain(), b.space(), m);
  Report r = check_bialgebra(b);
  const CheckResult* dm = r.find("delta-multiplicative");
  ASSERT_FALSE(dm->passed);
  EXPECT_EQ(dm->witness.size(), 2u);
}

TEST(MakeBialgebra, RejectsNonAssociative) {
  Bialgebra b = oracle::monoid_bialgebra(Q, oracle::cyclic(3));
  std::vector<SparseVec> m = b.algebra.mult.columns();
  std::swap(m[1 * 3 + 1], m[1 * 3 + 2]);  // g1*g1 = 0 and g1*g2 = g2: unital but not associative
  b.algebra.mult = LinMap(Q, b.algebra.mult.domain(), b.space(), m);
  b.algebra.associative = Associativity::unknown;
  EXPECT_THROW(make_bialgebra(b.coalgebra, b.algebra), PreconditionFailed);
  Bialgebra good = make_bialgebra(oracle::grouplike(Q, 3),
                                  oracle::monoid_bialgebra(Q, oracle::cyclic(3)).algebra);
  EXPECT_EQ(good.algebra.associative, Associativity::yes);
}

TEST(CoalgebraMaps, Identity) {
  Coalgebra c = oracle::sweedler(Q).bialgebra.coalgebra;
  EXPECT_TRUE(is_coalgebra_map(LinMap::identity(Q, c.space), c, c));
}

TEST(CoalgebraMaps, SumOfGrouplikesIsNotACoalgebraMap) {
  Coalgebra x = oracle::grouplike(Q, 2), y = oracle::grouplike(Q, 3);
  std::vector<SparseVec> cols = {{{0, Q.one()}}, {{1, Q.one()}, {2, Q.one()}}};
  LinMap f(Q, x.space, y.space, cols);
  Report r = coalgebra_map_report(f, x, y);
  EXPECT_FALSE(r.passed("delta"));
  EXPECT_EQ(r.find("delta")->witness, std::vector<std::uint32_t>{1});
  EXPECT_FALSE(is_coalgebra_map(f, x, y));
}

TEST(CoalgebraMaps, EverySetMapOfGrouplikesIsACoalgebraMap) {
  oracle::Rng rng(31);
  Coalgebra x = oracle::grouplike(Q, 4), y = oracle::grouplike(Q, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> img(4);
    for (auto& v : img) v = rng.uniform(0, 2);
    EXPECT_TRUE(is_coalgebra_map(induced(Q, 4, 3, img), x, y));
  }
}

TEST(CoalgebraAntimaps, Examples) {
  Hopf g = oracle::group_hopf(Q, s3());
  const Coalgebra& c = g.bialgebra.coalgebra;
  EXPECT_TRUE(is_coalgebra_antimap(LinMap::identity(Q, c.space), c, c));
  EXPECT_TRUE(is_coalgebra_antimap(g.antipode, c, c));
  Hopf sw = oracle::sweedler(Q);
  const Coalgebra& sc = sw.bialgebra.coalgebra;
  EXPECT_FALSE(is_coalgebra_antimap(LinMap::identity(Q, sc.space), sc, sc));
  EXPECT_TRUE(is_coalgebra_antimap(sw.antipode, sc, sc));
}

TEST(Convolution, UnitLaw) {
  oracle::Rng rng(32);
  Hopf h = oracle::sweedler(Q);
  const Coalgebra& c = h.bialgebra.coalgebra;
  const Algebra& a = h.bialgebra.algebra;
  LinMap e = convolution_unit(c, a);
  for (int trial = 0; trial < 10; ++trial) {
    LinMap f = rng.map(Q, 4, 4);
    EXPECT_EQ(convolution(f, e, c, a), f);
    EXPECT_EQ(convolution(e, f, c, a), f);
  }
}

TEST(Convolution, PointwiseProductOnGrouplikes) {
  oracle::Rng rng(33);
  oracle::Table g = s3();
  Hopf kg = oracle::group_hopf(Q, g);
  Coalgebra x = oracle::grouplike(Q, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> u(3), v(3), uv(3);
    for (int i = 0; i < 3; ++i) {
      u[i] = rng.uniform(0, 5);
      v[i] = rng.uniform(0, 5);
      uv[i] = g.mult[u[i]][v[i]];
    }
    EXPECT_EQ(convolution(induced(Q, 3, 6, u), induced(Q, 3, 6, v), x, kg.bialgebra.algebra),
              induced(Q, 3, 6, uv));
  }
}

TEST(Convolution, AntipodeInvertsCoalgebraMaps) {
  oracle::Rng rng(34);
  Hopf kg = oracle::group_hopf(Q, d4());
  Coalgebra x = oracle::grouplike(Q, 4);
  LinMap e = convolution_unit(x, kg.bialgebra.algebra);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> img(4);
    for (auto& v : img) v = rng.uniform(0, 7);
    LinMap u = induced(Q, 4, 8, img);
    EXPECT_EQ(convolution(compose(kg.antipode, u), u, x, kg.bialgebra.algebra), e);
    EXPECT_EQ(convolution(u, compose(kg.antipode, u), x, kg.bialgebra.algebra), e);
  }
}

TEST(Convolution, IsAssociative) {
  oracle::Rng rng(35);
  Hopf h = oracle::sweedler(Q);
  const Coalgebra& c = h.bialgebra.coalgebra;
  const Algebra& a = h.bialgebra.algebra;
  for (int trial = 0; trial < 10; ++trial) {
    LinMap f = rng.map(Q, 4, 4), g = rng.map(Q, 4, 4), k = rng.map(Q, 4, 4);
    EXPECT_EQ(convolution(convolution(f, g, c, a), k, c, a),
              convolution(f, convolution(g, k, c, a), c, a));
  }
}

TEST(AntipodeSolve, GroupAlgebraGivesInverses) {
  for (const auto& t : {s3(), d4(), oracle::cyclic(5)}) {
    Hopf kg = oracle::group_hopf(Q, t);
    EXPECT_EQ(antipode_solve(kg.bialgebra), kg.antipode);
  }
}

TEST(AntipodeSolve, GroundFieldIsIdentity) {
  Hopf k = ground_hopf(Q);
  EXPECT_EQ(antipode_solve(k.bialgebra), LinMap::identity(Q, BasedSpace::ground()));
}

TEST(AntipodeSolve, IdempotentMonoidHasNone) {
  oracle::Table monoid;
  monoid.mult = {{0, 1}, {1, 1}};  // {1, e} with e*e = e
  Bialgebra b = oracle::monoid_bialgebra(Q, monoid);
  ASSERT_TRUE(check_bialgebra(b).all_passed());
  EXPECT_THROW(antipode_solve(b), NoAntipode);
}

TEST(AntipodeSolve, SweedlerOverSeveralFields) {
  for (std::uint32_t p : {0u, 3u, 7u}) {
    Field k = p == 0 ? Q : Field::prime(p);
    Hopf h = oracle::sweedler(k);
    LinMap s = antipode_solve(h.bialgebra);
    EXPECT_EQ(s, h.antipode);
    EXPECT_TRUE(is_coalgebra_antimap(s, h.bialgebra.coalgebra, h.bialgebra.coalgebra));
    EXPECT_TRUE(is_algebra_antimap(s, h.bialgebra.algebra, h.bialgebra.algebra));
  }
}

TEST(AntipodeSolve, ConstructedHopfAlgebrasHaveAntimapAntipodes) {
  std::vector<Bialgebra> corpus = {
      oracle::monoid_bialgebra(Q, s3()),
      oracle::monoid_bialgebra(Q, oracle::permutation_group({{1, 2, 0, 3}, {0, 2, 3, 1}})),
      tensor_bialgebra(oracle::sweedler(Q).bialgebra, oracle::monoid_bialgebra(Q, oracle::cyclic(2))),
  };
  for (const auto& b : corpus) {
    Hopf h = make_hopf(b);
    EXPECT_TRUE(check_hopf(h).all_passed());
    EXPECT_TRUE(is_coalgebra_antimap(h.antipode, b.coalgebra, b.coalgebra));
    EXPECT_TRUE(is_algebra_antimap(h.antipode, b.algebra, b.algebra));
  }
}

TEST(Grouplike, DetectsBasisGrouplikes) {
  Coalgebra c = oracle::sweedler(Q).bialgebra.coalgebra;
  EXPECT_TRUE(is_grouplike(c, 0));
  EXPECT_TRUE(is_grouplike(c, 1));
  EXPECT_FALSE(is_grouplike(c, 2));
  EXPECT_FALSE(is_grouplike(c, 3));
}
