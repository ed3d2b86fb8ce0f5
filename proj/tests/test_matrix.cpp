#include <gtest/gtest.h>

#include <sstream>

#include "fqc/matrix.hpp"
#include "support.hpp"

using namespace fqc;

namespace {

Partition L(std::vector<int> p) { return Partition(std::move(p)); }
Poly P(const Field& F, const char* s) { return poly::parse(F, s); }

int span_dim(const Field& F, int n, const std::vector<Matrix>& ms) {
  Subspace S(F, n * n);
  for (const auto& m : ms) S.add(m.data());
  return S.dim();
}

// A random element of the span of basis.
Matrix random_combination(testkit::Gen& g, const Field& F, int n, const std::vector<Matrix>& basis) {
  Matrix Y(F, n);
  for (const auto& b : basis) Y = mat::add(Y, mat::scale(b, g.elem(F)));
  return Y;
}

// A random primary cycle type f^λ with deg f = d and |λ| = s.
CycleType random_primary(testkit::Gen& g, const Field& F, int d, int s) {
  return CycleType(F, {{g.irreducible(F, d), g.partition(s)}});
}

}  // namespace

TEST(Matrix, BundleExamples) {
  const Field F2 = Field::make(2, 1);
  EXPECT_EQ(mat::rank(mat::jordan(F2, L({3}))), 2);
  EXPECT_EQ(mat::nullity(mat::direct_sum({mat::jordan(F2, L({2})), mat::jordan(F2, L({1}))})), 2);
  const Matrix J21 = mat::jordan(F2, L({2, 1}));
  EXPECT_EQ(J21.n(), 3);
  int ones = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ones += J21(i, j) != 0;
  EXPECT_EQ(ones, 1);
  EXPECT_EQ(J21(0, 1), 1u);
  EXPECT_THROW(mat::mul(J21, Matrix::identity(F2, 2)), ShapeMismatch);
  EXPECT_THROW(mat::add(J21, Matrix::identity(Field::make(3, 1), 3)), ShapeMismatch);
}

TEST(Matrix, RankNullityAndKernel) {
  testkit::Gen g(31);
  for (int t = 0; t < 100; ++t) {
    const Field F = g.field(9);
    const int n = g.uniform(1, 7);
    Matrix A = g.matrix(F, n);
    if (g.uniform(0, 1)) A = mat::mul(A, mat::jordan(F, g.partition(n)));
    const auto K = mat::kernel(A);
    EXPECT_EQ(mat::rank(A) + static_cast<int>(K.size()), n);
    for (const auto& v : K) EXPECT_EQ(mat::vecmul(v, A), Vec(n, 0));
    EXPECT_EQ(mat::det(A) != 0, mat::rank(A) == n);
    if (mat::det(A)) {
      EXPECT_EQ(mat::mul(A, mat::inverse(A)), Matrix::identity(F, n));
    }
    const Matrix B = g.matrix(F, n);
    EXPECT_EQ(mat::det(mat::mul(A, B)), F.mul(mat::det(A), mat::det(B)));
  }
}

TEST(Matrix, MinPolyExamples) {
  const Field F2 = Field::make(2, 1);
  EXPECT_EQ(mat::min_poly(Matrix(F2, 4)), P(F2, "x"));
  EXPECT_EQ(mat::min_poly(mat::jordan(F2, L({3}))), P(F2, "x^3"));
  EXPECT_EQ(mat::min_poly(mat::companion(F2, P(F2, "x^2+x+1"))), P(F2, "x^2+x+1"));
}

TEST(Matrix, MinPolyAnnihilatesAndIsInvariant) {
  testkit::Gen g(2);
  for (int t = 0; t < 60; ++t) {
    const Field F = g.field(5);
    const int n = g.uniform(1, 6);
    const Matrix A = g.matrix(F, n);
    const Poly m = mat::min_poly(A);
    EXPECT_TRUE(m.is_monic());
    EXPECT_TRUE(mat::eval(m, A).is_zero());
    for (int e = 0; e < m.deg(); ++e) EXPECT_FALSE(mat::pow(A, static_cast<unsigned>(e)).is_zero() && e == 0);
    EXPECT_EQ(mat::min_poly(g.conjugate(A)), m);
  }
}

TEST(Matrix, NilpotentPartitionExamples) {
  const Field F2 = Field::make(2, 1);
  EXPECT_EQ(mat::nilpotent_partition(mat::jordan(F2, L({3, 1}))), L({3, 1}));
  EXPECT_EQ(mat::nilpotent_partition(Matrix(F2, 4)), L({1, 1, 1, 1}));
  EXPECT_THROW(mat::nilpotent_partition(Matrix::identity(F2, 2)), NotNilpotent);
}

TEST(Matrix, NilpotentPartitionRoundTrip) {
  testkit::Gen g(17);
  for (int n = 1; n <= 10; ++n)
    for (const auto& l : partitions_of(n)) {
      const Field F = g.field(5);
      const Matrix J = mat::jordan(F, l);
      EXPECT_EQ(mat::nilpotent_partition(J), l);
      EXPECT_EQ(mat::nilpotent_partition(g.conjugate(J)), l);
    }
}

TEST(Matrix, RankSequenceOrdersAsDominance) {
  const Field F2 = Field::make(2, 1);
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    std::vector<std::vector<int>> ranks;
    for (const auto& l : ps) {
      const Matrix J = mat::jordan(F2, l);
      std::vector<int> r;
      for (int j = 1; j <= n; ++j) r.push_back(mat::rank(mat::pow(J, static_cast<unsigned>(j))));
      ranks.push_back(r);
    }
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = 0; b < ps.size(); ++b) {
        bool le = true;
        for (int j = 0; j < n; ++j) le = le && ranks[a][j] <= ranks[b][j];
        EXPECT_EQ(le, dominates(ps[b], ps[a])) << ps[a].str() << " " << ps[b].str();
      }
  }
}

TEST(Matrix, CycleTypeExamples) {
  const Field F2 = Field::make(2, 1);
  const Poly r = P(F2, "x^2+x+1");
  const Matrix C = mat::companion(F2, r);
  EXPECT_EQ(mat::cycle_type(C), CycleType(F2, {{r, L({1})}}));
  EXPECT_EQ(mat::class_type(C), ClassType::parse("2^(1)"));
  const Matrix D = mat::direct_sum({C, C});
  EXPECT_EQ(mat::cycle_type(D), CycleType(F2, {{r, L({1, 1})}}));
  EXPECT_EQ(mat::class_type(D), ClassType::parse("2^(1,1)"));
  const CycleType T(F2, {{P(F2, "x"), L({12, 12})},
                         {P(F2, "x+1"), L({2, 2, 2})},
                         {r, L({3})},
                         {P(F2, "x^3+x+1"), L({1})}});
  const Matrix R = mat::class_rep(T);
  EXPECT_EQ(R.n(), 39);
  EXPECT_EQ(mat::cycle_type(R), T);
  const CycleType T2(F2, {{r, L({7, 5})}, {P(F2, "x^3+x+1"), L({2, 2, 1})}});
  EXPECT_EQ(mat::class_rep(T2).n(), 39);
  EXPECT_EQ(mat::cycle_type(mat::class_rep(T2)), T2);
}

TEST(Matrix, CycleTypeRoundTripAllSmallTypes) {
  testkit::Gen g(23);
  for (auto [p, a, nmax] : std::vector<std::tuple<int, int, int>>{{2, 1, 5}, {3, 1, 4}, {2, 2, 3}}) {
    const Field F = Field::make(p, a);
    for (int n = 1; n <= nmax; ++n)
      for (const auto& T : testkit::all_cycle_types(F, n)) {
        const Matrix R = mat::class_rep(T);
        EXPECT_EQ(mat::cycle_type(g.conjugate(R)), T) << T.str();
      }
  }
}

TEST(Matrix, BuildExamples) {
  const Field F2 = Field::make(2, 1);
  const Matrix Pk = mat::pk_block(mat::companion(F2, P(F2, "x^2+x+1")), 3);
  EXPECT_EQ(Pk.n(), 6);
  EXPECT_EQ(mat::class_type(Pk), ClassType::parse("2^(3)"));
  EXPECT_THROW(mat::cyclic_block(F2, P(F2, "x^2+1"), 1), NotIrreducible);
  const Matrix Cb = mat::cyclic_block(F2, P(F2, "x^2+x+1"), 2);
  EXPECT_EQ(mat::min_poly(Cb), poly::pow(F2, P(F2, "x^2+x+1"), 2));
}

TEST(Matrix, KroneckerConstructionCommutes) {
  testkit::Gen g(5);
  for (int t = 0; t < 40; ++t) {
    const Field F = g.field(5);
    const int d = g.uniform(1, 3), k = g.uniform(1, 4);
    const Poly f = g.irreducible(F, d);
    const Matrix Pk = mat::pk_block(mat::companion(F, f), k);
    const Matrix N = mat::kronecker(mat::jordan(F, L({k})), Matrix::identity(F, d));
    EXPECT_TRUE(mat::commutes(Pk, N));
    EXPECT_EQ(mat::class_type(Pk), ClassType({{d, L({k})}}));
    EXPECT_EQ(mat::class_type(N), ClassType({{1, times(d, L({k}))}}));
  }
}

TEST(Matrix, PrimaryPowerIsNilpotentOfUnionType) {
  testkit::Gen g(41);
  for (int t = 0; t < 100; ++t) {
    const Field F = g.field(4);
    const int d = g.uniform(1, 3);
    const int s = g.uniform(1, 9 / d);
    const CycleType T = random_primary(g, F, d, s);
    const Poly& f = T.components()[0].poly;
    const Matrix M = g.conjugate(mat::class_rep(T));
    const Matrix fM = mat::eval(f, M);
    ASSERT_TRUE(mat::is_nilpotent(fM));
    EXPECT_EQ(mat::nilpotent_partition(fM), times(d, T.components()[0].partition));
  }
}

TEST(Matrix, PolynomialImageOfPrimaryType) {
  testkit::Gen g(43);
  for (int t = 0; t < 100; ++t) {
    const Field F = g.field(4);
    const int d = g.uniform(1, 3);
    const int s = g.uniform(1, 8 / d);
    const CycleType T = random_primary(g, F, d, s);
    const Partition& l = T.components()[0].partition;
    const Matrix M = mat::class_rep(T);
    std::vector<Elem> c(static_cast<size_t>(g.uniform(1, 6)));
    for (auto& x : c) x = g.elem(F);
    const ClassType U = mat::class_type(mat::eval(Poly(c), M));
    ASSERT_EQ(U.components().size(), 1u) << U.str();
    const int e = U.components()[0].degree;
    const Partition& mu = U.components()[0].partition;
    EXPECT_EQ(d % e, 0);
    EXPECT_TRUE(dominates(times(d, l), times(e, mu))) << T.str() << " -> " << U.str();
  }
}

TEST(Matrix, RegularEmbedExamples) {
  const Field F2 = Field::make(2, 1), F4 = Field::make(2, 2);
  const Matrix g1 = Matrix::scalar(F4, 1, F4.generator());
  const Matrix E = mat::regular_embed(g1, F2);
  EXPECT_EQ(E.n(), 2);
  EXPECT_EQ(mat::min_poly(E), P(F2, "x^2+x+1"));
  EXPECT_EQ(mat::regular_embed(Matrix::identity(F4, 3), F2), Matrix::identity(F2, 6));
  const Matrix X = mat::add(Matrix::scalar(F4, 12, F4.generator()), mat::jordan(F4, L({6, 6})));
  EXPECT_EQ(mat::class_type(mat::regular_embed(X, F2)), ClassType::parse("2^(6,6)"));
}

TEST(Matrix, RegularEmbedIsAlgebraMap) {
  testkit::Gen g(9);
  const std::vector<std::pair<Field, Field>> pairs{
      {Field::make(2, 2), Field::make(2, 1)}, {Field::make(3, 2), Field::make(3, 1)},
      {Field::make(2, 4), Field::make(2, 2)}, {Field::make(2, 3), Field::make(2, 1)}};
  for (int t = 0; t < 60; ++t) {
    const auto& [big, small] = pairs[static_cast<size_t>(t) % pairs.size()];
    const int n = g.uniform(1, 3);
    const Matrix A = g.matrix(big, n), B = g.matrix(big, n);
    const Matrix eA = mat::regular_embed(A, small), eB = mat::regular_embed(B, small);
    EXPECT_EQ(mat::regular_embed(mat::add(A, B), small), mat::add(eA, eB));
    EXPECT_EQ(mat::regular_embed(mat::mul(A, B), small), mat::mul(eA, eB));
  }
}

TEST(Matrix, CentralizerExamples) {
  const Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  EXPECT_EQ(mat::centralizer_basis(mat::jordan(F2, L({3, 1}))).size(), 6u);
  EXPECT_EQ(testkit::generic_centralizer(mat::jordan(F2, L({3, 1}))).size(), 6u);
  EXPECT_EQ(mat::centralizer_basis(Matrix(F3, 3)).size(), 9u);
  // Cent(J(n)) is spanned by the powers of J(n).
  const Matrix J = mat::jordan(F3, L({5}));
  std::vector<Matrix> powers;
  for (unsigned e = 0; e < 5; ++e) powers.push_back(mat::pow(J, e));
  const auto basis = mat::centralizer_basis(J);
  EXPECT_EQ(basis.size(), 5u);
  auto both = powers;
  both.insert(both.end(), basis.begin(), basis.end());
  EXPECT_EQ(span_dim(F3, 5, both), 5);
}

TEST(Matrix, CentralizerDimensionIsMinSum) {
  for (int p : {2, 3}) {
    const Field F = Field::make(p, 1);
    for (int n = 1; n <= 8; ++n)
      for (const auto& l : partitions_of(n)) {
        const Matrix J = mat::jordan(F, l);
        const int want = testkit::min_sum(l);
        EXPECT_EQ(static_cast<int>(testkit::generic_centralizer(J).size()), want);
        const auto lib = mat::centralizer_basis(J);
        ASSERT_EQ(static_cast<int>(lib.size()), want);
        for (const auto& X : lib) EXPECT_TRUE(mat::commutes(X, J));
        EXPECT_EQ(span_dim(F, n, lib), want);
        const auto jb = mat::jordan_centralizer_basis(F, l.parts());
        EXPECT_EQ(static_cast<int>(jb.size()), want);
        for (const auto& X : jb) EXPECT_TRUE(mat::commutes(X, J));
      }
  }
}

TEST(Matrix, CentralizerOfGeneralMatrices) {
  testkit::Gen g(77);
  for (int t = 0; t < 50; ++t) {
    const Field F = g.field(5);
    const int n = g.uniform(1, 6);
    const Matrix A = g.matrix(F, n);
    const auto lib = mat::centralizer_basis(A);
    EXPECT_EQ(lib.size(), testkit::generic_centralizer(A).size());
    for (const auto& X : lib) EXPECT_TRUE(mat::commutes(X, A));
    EXPECT_EQ(span_dim(F, n, lib), static_cast<int>(lib.size()));
  }
}

TEST(Matrix, SameClassTypeSameCentralizerDimension) {
  testkit::Gen g(13);
  const Field F3 = Field::make(3, 1);
  for (int t = 0; t < 40; ++t) {
    const int d = g.uniform(1, 2);
    const Partition l = g.partition(g.uniform(1, 4 / d));
    const auto polys = poly::enumerate_irreducibles(F3, d);
    const Poly f = g.pick(polys), h = g.pick(polys);
    const Matrix A = g.conjugate(mat::class_rep(CycleType(F3, {{f, l}})));
    const Matrix B = g.conjugate(mat::class_rep(CycleType(F3, {{h, l}})));
    EXPECT_EQ(testkit::generic_centralizer(A).size(), testkit::generic_centralizer(B).size());
  }
}

TEST(Matrix, CyclicBasis) {
  const Field F2 = Field::make(2, 1);
  const auto cb = mat::cyclic_basis(mat::jordan(F2, L({2, 2, 1})));
  EXPECT_EQ(cb.heights, (std::vector<int>{2, 2, 1}));
  EXPECT_THROW(mat::cyclic_basis(Matrix::identity(F2, 2)), NotNilpotent);
  testkit::Gen g(3);
  for (int t = 0; t < 60; ++t) {
    const Field F = g.field(4);
    const Partition l = g.partition(g.uniform(1, 8));
    const Matrix A = g.conjugate(mat::jordan(F, l));
    const auto c = mat::cyclic_basis(A);
    EXPECT_EQ(c.heights, l.parts());
    EXPECT_NE(mat::det(c.basis), 0u);
    int row = 0;
    for (size_t i = 0; i < c.generators.size(); ++i) {
      Vec v = c.generators[i];
      for (int j = 0; j < c.heights[i]; ++j) {
        EXPECT_EQ(c.basis.row(row++), v);
        v = mat::vecmul(v, A);
      }
      EXPECT_EQ(v, Vec(A.n(), 0));
    }
    // In the cyclic basis A is the Jordan matrix.
    EXPECT_EQ(mat::mul(mat::mul(c.basis, A), mat::inverse(c.basis)), mat::jordan(F, l));
  }
}

TEST(Matrix, SimpleModuleDims) {
  const Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  EXPECT_EQ(mat::simple_module_dims(mat::jordan(F2, L({2, 2, 1}))), (std::map<int, int>{{2, 2}, {1, 1}}));
  EXPECT_EQ(mat::simple_module_dims(mat::jordan(F2, L({5}))), (std::map<int, int>{{5, 1}}));
  EXPECT_EQ(mat::simple_module_dims(Matrix(F2, 3)), (std::map<int, int>{{1, 3}}));
  testkit::Gen g(8);
  for (const Field& F : {F2, F3})
    for (int n = 1; n <= 7; ++n)
      for (const auto& l : partitions_of(n)) {
        std::map<int, int> want;
        for (int p : l.parts()) ++want[p];
        EXPECT_EQ(mat::simple_module_dims(g.conjugate(mat::jordan(F, l))), want);
      }
}

TEST(Matrix, DeterminantFactorsThroughSimpleModules) {
  testkit::Gen g(19);
  for (int t = 0; t < 100; ++t) {
    const Field F = g.field(5);
    const Partition l = g.partition(g.uniform(1, 7));
    const Matrix J = mat::jordan(F, l);
    const Matrix Y = random_combination(g, F, J.n(), testkit::generic_centralizer(J));
    // Y_h acts on the tops of the blocks of size h.
    std::map<int, std::vector<int>> starts;
    int s = 0;
    for (int p : l.parts()) {
      starts[p].push_back(s);
      s += p;
    }
    Elem prod = 1;
    for (const auto& [h, st] : starts) {
      const int m = static_cast<int>(st.size());
      Matrix Yh(F, m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) Yh(a, b) = Y(st[a], st[b]);
      prod = F.mul(prod, F.pow(mat::det(Yh), static_cast<std::uint64_t>(h)));
    }
    EXPECT_EQ(mat::det(Y), prod) << l.str();
  }
}

TEST(Matrix, ConjugatingMatrix) {
  const Field F2 = Field::make(2, 1);
  const Matrix J = mat::jordan(F2, L({2, 1}));
  EXPECT_EQ(mat::conjugate(J, mat::conjugating_matrix(J, J)), J);
  const Matrix T = mat::transpose(J);
  EXPECT_EQ(mat::conjugate(J, mat::conjugating_matrix(J, T)), T);
  EXPECT_THROW(mat::conjugating_matrix(mat::jordan(F2, L({2})), mat::jordan(F2, L({1, 1}))), NotSimilar);
  testkit::Gen g(71);
  for (int t = 0; t < 60; ++t) {
    const Field F = g.field(7);
    const int n = g.uniform(1, 6);
    const Matrix A = g.matrix(F, n), B = g.conjugate(A);
    EXPECT_EQ(mat::conjugate(A, mat::conjugating_matrix(A, B)), B);
  }
}

TEST(Matrix, FileRoundTrip) {
  testkit::Gen g(1);
  for (int t = 0; t < 20; ++t) {
    const Field F = g.field(16);
    const Matrix A = g.matrix(F, g.uniform(1, 5));
    std::stringstream ss;
    mat::write(ss, A);
    EXPECT_EQ(mat::read(ss), A);
  }
  std::stringstream bad("field 2 1\ndim 2\n0 1\n");
  EXPECT_THROW(mat::read(bad), ParseError);
}
