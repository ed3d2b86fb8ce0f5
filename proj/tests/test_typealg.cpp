#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <sstream>

#include "fqc/typealg.hpp"
#include "support.hpp"

using namespace fqc;

namespace {

Partition L(std::vector<int> p) { return Partition(std::move(p)); }
Poly P(const Field& F, const char* s) { return poly::parse(F, s); }
ClassType T(const char* s) { return ClassType::parse(s); }

// The cycle type with class type U using the least irreducibles of each
// degree.
CycleType least_cycle_type(const Field& F, const ClassType& U) {
  std::map<int, int> used;
  std::vector<CycleComponent> comps;
  for (const auto& c : U.components()) {
    const auto polys = poly::enumerate_irreducibles(F, c.degree);
    comps.push_back({polys.at(static_cast<size_t>(used[c.degree]++)), c.partition});
  }
  return CycleType(F, comps);
}

// Same class type as C with the irreducibles of each degree permuted at random.
CycleType relabel(testkit::Gen& g, const CycleType& C) {
  const Field& F = C.field();
  std::map<int, std::vector<Poly>> pool;
  std::vector<CycleComponent> comps;
  for (const auto& c : C.components()) {
    const int d = c.poly.deg();
    if (!pool.count(d)) {
      pool[d] = poly::enumerate_irreducibles(F, d);
      std::shuffle(pool[d].begin(), pool[d].end(), g.engine());
    }
    comps.push_back({pool[d].back(), c.partition});
    pool[d].pop_back();
  }
  return CycleType(F, comps);
}

// A random cycle type of dimension n.
CycleType random_cycle_type(testkit::Gen& g, const Field& F, int n) {
  static std::map<std::pair<std::string, int>, std::vector<CycleType>> cache;
  auto& all = cache[{F.name(), n}];
  if (all.empty()) all = testkit::all_cycle_types(F, n);
  return g.pick(all);
}

// Whether the centralizer of a matrix of type fixed contains a matrix of type
// target, by enumerating the generic centralizer; nullopt above limit.
std::optional<bool> brute_types(const ClassType& fixed, const ClassType& target, const Field& F,
                                std::uint64_t limit) {
  const Matrix X = mat::class_rep(least_cycle_type(F, fixed));
  const auto basis = testkit::generic_centralizer(X);
  std::uint64_t size = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    size *= F.q();
    if (size > limit) return std::nullopt;
  }
  return testkit::for_each_in_span(F, X.n(), basis, [&](const Matrix& Y) { return mat::class_type(Y) == target; });
}

void expect_type_witness(const Verdict& v, const ClassType& S, const ClassType& U) {
  ASSERT_EQ(v.status, Status::Yes) << S.str() << " vs " << U.str();
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(mat::commutes(v.witness->first, v.witness->second));
  EXPECT_EQ(mat::class_type(v.witness->first), S);
  EXPECT_EQ(mat::class_type(v.witness->second), U);
}

}  // namespace

TEST(Types, ParseAndFormat) {
  const ClassType t = T("2^(7,5) 3^(2,2,1)");
  EXPECT_EQ(t.dim(), 39);
  EXPECT_EQ(t.str(), "2^(7,5) 3^(2,2,1)");
  EXPECT_EQ(T(t.str().c_str()), t);
  EXPECT_EQ(T("1^(1)").dim(), 1);
  EXPECT_THROW(T("2^(5,7)"), ParseError);
  EXPECT_THROW(T("2^"), ParseError);
  EXPECT_EQ(T("3^(1) 2^(2)"), T("2^(2) 3^(1)"));
  const Field F2 = Field::make(2, 1);
  const CycleType c = CycleType::parse(F2, "x^2+x+1^(7,5) x^3+x+1^(2,2,1)");
  EXPECT_EQ(c.class_type(), t);
  EXPECT_EQ(CycleType::parse(F2, c.str()), c);
  EXPECT_THROW(CycleType::parse(F2, "x^2+1^(1)"), NotIrreducible);
}

TEST(Types, Representable) {
  const Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  const ClassType t = T("1^(2) 1^(1) 1^(1)");
  EXPECT_FALSE(typealg::representable(t, F2));
  EXPECT_TRUE(typealg::representable(t, F3));
  EXPECT_TRUE(typealg::representable(T("5^(3,1)"), F2));
  EXPECT_FALSE(typealg::representable(T("2^(1) 2^(1)"), F2));
  EXPECT_TRUE(typealg::representable(T("2^(1) 2^(1) 2^(1)"), F3));
}

TEST(Types, SeparationsExamples) {
  auto derived = [](const ClassType& t) {
    std::vector<ClassType> out;
    for (const auto& s : typealg::separations(t)) out.push_back(s.derived);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<ClassType> want{T("2^(2,1)"), T("2^(2) 2^(1)")};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(derived(T("2^(2,1)")), want);
  EXPECT_EQ(typealg::separations(T("1^(1,1,1)")).size(), 3u);
  const auto big = derived(T("2^(7,5) 3^(2,2,1)"));
  EXPECT_TRUE(std::binary_search(big.begin(), big.end(), T("2^(7,5) 3^(2) 3^(2) 3^(1)")));
}

TEST(Types, SeparationsRecoverOriginal) {
  for (const char* s : {"1^(3,2,2,1) 2^(2,1)", "1^(4,1,1) 1^(2)", "3^(2,2,1)"}) {
    const ClassType t = T(s);
    const auto seps = typealg::separations(t);
    std::set<ClassType> seen;
    for (const auto& sep : seps) {
      EXPECT_TRUE(seen.insert(sep.derived).second);
      ASSERT_EQ(sep.provenance.size(), sep.derived.components().size());
      std::vector<std::vector<int>> parts(t.components().size());
      for (size_t i = 0; i < sep.provenance.size(); ++i) {
        const auto& c = sep.derived.components()[i];
        const auto& orig = t.components()[static_cast<size_t>(sep.provenance[i])];
        EXPECT_EQ(c.degree, orig.degree);
        parts[static_cast<size_t>(sep.provenance[i])].insert(parts[static_cast<size_t>(sep.provenance[i])].end(),
                                                             c.partition.parts().begin(), c.partition.parts().end());
      }
      for (size_t k = 0; k < parts.size(); ++k) EXPECT_EQ(Partition::from_parts(parts[k]), t.components()[k].partition);
    }
    EXPECT_TRUE(seen.count(t));
  }
}

TEST(TypeCommute, PrimaryExamples) {
  const Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  EXPECT_EQ(typealg::primary_commute({2, L({8, 4})}, {1, L({12, 12})}, F2).status, Status::No);
  EXPECT_EQ(typealg::primary_commute({2, L({3})}, {1, L({5, 1})}, F2).status, Status::No);
  EXPECT_EQ(typealg::primary_commute({2, L({3})}, {1, L({5})}, F2).status, Status::No);
  for (const Field& F : {F2, F3})
    for (int d = 1; d <= 3; ++d)
      for (int k = 1; k <= 3; ++k) {
        const TypeComponent a{d, L({k})}, b{1, times(d, L({k}))};
        expect_type_witness(typealg::primary_commute(a, b, F), ClassType({a}), ClassType({b}));
      }
}

// The centralizer of a representative of 2^(3,1) over F_2 (4096 elements)
// holds no matrix of type 1^(4,4), and that of 3^(2) (64 elements) none of
// type 2^(3): multiplying a type by t means t copies of its partition.
TEST(TypeCommute, UnionScalingByBruteForce) {
  const Field F2 = Field::make(2, 1);
  EXPECT_EQ(brute_types(T("2^(3,1)"), T("1^(4,4)"), F2, 1u << 12), std::optional<bool>(false));
  EXPECT_EQ(typealg::primary_commute({1, L({4, 4})}, {2, L({3, 1})}, F2).status, Status::No);
  EXPECT_EQ(brute_types(T("3^(2)"), T("2^(3)"), F2, 1u << 12), std::optional<bool>(false));
  EXPECT_EQ(typealg::primary_commute({2, L({3})}, {3, L({2})}, F2).status, Status::No);
  EXPECT_EQ(brute_types(T("2^(2)"), T("1^(2,2)"), F2, 1u << 12), std::optional<bool>(true));
  EXPECT_EQ(typealg::primary_commute({1, L({2, 2})}, {2, L({2})}, F2).status, Status::Yes);
}

TEST(TypeCommute, PrimaryMatchesBruteForce) {
  for (auto [p, nmax] : std::vector<std::pair<int, int>>{{2, 6}, {3, 4}}) {
    const Field F = Field::make(p, 1);
    for (int n = 1; n <= nmax; ++n) {
      std::vector<TypeComponent> prim;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0)
          for (const auto& l : partitions_of(n / d)) prim.push_back({d, l});
      for (const auto& a : prim)
        for (const auto& b : prim) {
          const auto brute = brute_types(ClassType({a}), ClassType({b}), F, 1u << 12);
          if (!brute) continue;
          const auto v = typealg::primary_commute(a, b, F);
          ASSERT_NE(v.status, Status::Unknown);
          EXPECT_EQ(v.status == Status::Yes, *brute)
              << ClassType({a}).str() << " vs " << ClassType({b}).str() << " over " << F.name();
          if (v.status == Status::Yes) expect_type_witness(v, ClassType({a}), ClassType({b}));
        }
    }
  }
}

TEST(TypeCommute, TypesMatchBruteForce) {
  const Field F2 = Field::make(2, 1);
  for (int n = 2; n <= 4; ++n) {
    std::set<ClassType> types;
    for (const auto& c : testkit::all_cycle_types(F2, n)) types.insert(c.class_type());
    for (const auto& a : types)
      for (const auto& b : types) {
        const auto brute = brute_types(a, b, F2, 1u << 12);
        if (!brute) continue;
        const auto v = typealg::types_commute(a, b, F2);
        ASSERT_NE(v.status, Status::Unknown);
        EXPECT_EQ(v.status == Status::Yes, *brute) << a.str() << " vs " << b.str();
        if (v.status == Status::Yes) expect_type_witness(v, a, b);
      }
  }
}

TEST(TypeCommute, WorkedExampleNoOverF2) {
  const Field F2 = Field::make(2, 1);
  const auto v = typealg::types_commute(T("1^(12,12) 1^(2,2,2) 2^(3) 3^(1)"), T("2^(8,4) 3^(2,2,1)"), F2);
  EXPECT_EQ(v.status, Status::No);
  EXPECT_EQ(v.method, "separation-exhaustion");
}

TEST(TypeCommute, SymmetricAndPermutationInvariant) {
  testkit::Gen g(61);
  for (int t = 0; t < 60; ++t) {
    const Field F = g.field(3);
    const int n = g.uniform(1, 5);
    const ClassType a = random_cycle_type(g, F, n).class_type();
    const ClassType b = random_cycle_type(g, F, n).class_type();
    const auto x = typealg::types_commute(a, b, F), y = typealg::types_commute(b, a, F);
    EXPECT_EQ(x.status, y.status) << a.str() << " vs " << b.str();
    if (x.status == Status::Yes) expect_type_witness(x, a, b);
    if (y.status == Status::Yes) expect_type_witness(y, b, a);
    auto comps = a.components();
    std::shuffle(comps.begin(), comps.end(), g.engine());
    const ClassType a2(comps);
    EXPECT_EQ(a2, a);
    EXPECT_EQ(typealg::types_commute(a2, b, F).status, x.status);
  }
}

TEST(TypeCommute, SameTypeCommutes) {
  testkit::Gen g(62);
  for (int t = 0; t < 60; ++t) {
    const Field F = g.field(4);
    const ClassType a = random_cycle_type(g, F, g.uniform(1, 8)).class_type();
    expect_type_witness(typealg::types_commute(a, a, F), a, a);
  }
}

TEST(TypeCommute, Errors) {
  const Field F2 = Field::make(2, 1);
  EXPECT_THROW(typealg::types_commute(T("1^(1) 1^(1) 1^(1)"), T("1^(3)"), F2), NotRepresentable);
  EXPECT_THROW(typealg::types_commute(T("1^(2)"), T("1^(3)"), F2), SizeMismatch);
  const CycleType c(F2, {{P(F2, "x"), L({2})}});
  const CycleType d(F2, {{P(F2, "x"), L({3})}});
  EXPECT_THROW(typealg::classes_commute(c, d), SizeMismatch);
  EXPECT_THROW(typealg::polynomial_map(mat::class_rep(c), CycleType(F2, {{P(F2, "x"), L({1, 1})}})), TypeMismatch);
}

TEST(ClassCommute, SameClassAndWitnessFile) {
  const Field F3 = Field::make(3, 1);
  const CycleType c(F3, {{P(F3, "x+1"), L({2, 1})}, {P(F3, "x^2+1"), L({1})}});
  const auto v = typealg::classes_commute(c, c);
  ASSERT_EQ(v.status, Status::Yes);
  EXPECT_EQ(mat::cycle_type(v.witness->first), c);
  EXPECT_EQ(mat::cycle_type(v.witness->second), c);
  std::ostringstream out;
  typealg::write_witness(out, v.witness->first, v.witness->second);
  const std::string s = out.str();
  EXPECT_NE(s.find("verified commute=yes typesmatch=yes"), std::string::npos);
  std::istringstream in(s);
  EXPECT_EQ(mat::read(in), v.witness->first);
  EXPECT_EQ(mat::read(in), v.witness->second);
}

TEST(ClassCommute, RandomPairsHaveExactCycleTypes) {
  testkit::Gen g(63);
  for (int t = 0; t < 40; ++t) {
    const Field F = g.field(4);
    const int n = g.uniform(1, 5);
    const CycleType c = random_cycle_type(g, F, n), d = random_cycle_type(g, F, n);
    const auto v = typealg::classes_commute(c, d);
    EXPECT_EQ(v.status, typealg::types_commute(c.class_type(), d.class_type(), F).status);
    if (v.status != Status::Yes) continue;
    EXPECT_TRUE(mat::commutes(v.witness->first, v.witness->second));
    EXPECT_EQ(mat::cycle_type(v.witness->first), c);
    EXPECT_EQ(mat::cycle_type(v.witness->second), d);
  }
}

TEST(PolynomialMap, Examples) {
  const Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  const Matrix X = mat::companion(F3, P(F3, "x^2+1"));
  const CycleType target(F3, {{P(F3, "x^2+x+2"), L({1})}});
  const Poly f = typealg::polynomial_map(X, target);
  EXPECT_EQ(mat::cycle_type(mat::eval(f, X)), target);
  // Linear oracle: the polynomials aX + b that land in the target class.
  int hits = 0;
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) hits += mat::min_poly(mat::eval(Poly(std::vector<Elem>{b, a}), X)) == P(F3, "x^2+x+2");
  EXPECT_GT(hits, 0);
  const CycleType own = mat::cycle_type(X);
  EXPECT_EQ(mat::cycle_type(mat::eval(typealg::polynomial_map(X, own), X)), own);
  const CycleType r3(F2, {{P(F2, "x^2+x+1"), L({3})}});
  const Matrix Y = mat::pk_block(mat::companion(F2, P(F2, "x^2+x+1")), 3);
  EXPECT_EQ(mat::cycle_type(mat::eval(typealg::polynomial_map(Y, r3), Y)), r3);
}

TEST(PolynomialMap, RoundTripOnSameTypePairs) {
  testkit::Gen g(64);
  for (int t = 0; t < 60; ++t) {
    const Field F = g.field(4);
    const CycleType c = random_cycle_type(g, F, g.uniform(1, 8));
    const CycleType d = relabel(g, c);
    const Matrix X = g.conjugate(mat::class_rep(c));
    const Poly f = typealg::polynomial_map(X, d);
    const Matrix Y = mat::eval(f, X);
    ASSERT_EQ(mat::cycle_type(Y), d) << c.str() << " -> " << d.str();
    const Poly h = typealg::polynomial_map(Y, c);
    EXPECT_EQ(mat::cycle_type(mat::eval(h, Y)), c);
  }
}
