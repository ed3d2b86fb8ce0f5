#pragma once

// Generators and brute-force oracles shared by the test programs.  The
// oracles use only generic linear algebra (no Jordan-form shortcuts).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "fqc/matrix.hpp"
#include "fqc/types.hpp"

namespace fqc {

// Readable gtest output.
inline void PrintTo(const Partition& l, std::ostream* os) { *os << l.str(); }
inline void PrintTo(const Matrix& A, std::ostream* os) { mat::write(*os, A); }

}  // namespace fqc

namespace fqc::testkit {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : r_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r_); }
  Elem elem(const Field& F) { return static_cast<Elem>(uniform(0, static_cast<int>(F.q()) - 1)); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  Field field(int max_q) {
    std::vector<std::pair<int, int>> all{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}};
    std::vector<std::pair<int, int>> ok;
    for (auto [p, a] : all) {
      int q = 1;
      for (int i = 0; i < a; ++i) q *= p;
      if (q <= max_q) ok.emplace_back(p, a);
    }
    auto [p, a] = pick(ok);
    return Field::make(p, a);
  }

  Partition partition(int n) { return pick(partitions_of(n)); }

  Matrix matrix(const Field& F, int n) {
    Matrix M(F, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = elem(F);
    return M;
  }

  Matrix invertible(const Field& F, int n) {
    while (true) {
      Matrix g = matrix(F, n);
      if (mat::det(g) != 0) return g;
    }
  }

  // A random element of the similarity class of A.
  Matrix conjugate(const Matrix& A) { return mat::conjugate(A, invertible(A.field(), A.n())); }

  Poly irreducible(const Field& F, int d) { return pick(poly::enumerate_irreducibles(F, d)); }

  std::mt19937_64& engine() { return r_; }

 private:
  std::mt19937_64 r_;
};

// Every cycle type of dimension n over F.
inline std::vector<CycleType> all_cycle_types(const Field& F, int n) {
  std::vector<Poly> polys;
  for (int d = 1; d <= n; ++d)
    for (auto& f : poly::enumerate_irreducibles(F, d)) polys.push_back(f);
  std::vector<CycleType> out;
  std::vector<CycleComponent> cur;
  auto rec = [&](auto&& self, size_t start, int rem) -> void {
    if (rem == 0) {
      out.emplace_back(F, cur);
      return;
    }
    for (size_t i = start; i < polys.size(); ++i) {
      const int d = polys[i].deg();
      for (int s = 1; d * s <= rem; ++s)
        for (const auto& l : partitions_of(s)) {
          cur.push_back({polys[i], l});
          self(self, i + 1, rem - d * s);
          cur.pop_back();
        }
    }
  };
  rec(rec, 0, n);
  return out;
}

// Calls visit(Y) for every Y in the span of basis over F (q^|basis| calls);
// stops early when visit returns true.
template <class Visit>
bool for_each_in_span(const Field& F, int n, const std::vector<Matrix>& basis, Visit visit) {
  Matrix Y(F, n);
  std::vector<Elem> coeff(basis.size(), 0);
  while (true) {
    if (visit(static_cast<const Matrix&>(Y))) return true;
    size_t i = 0;
    for (; i < basis.size(); ++i) {
      // Step coefficient i through F in encoding order; adjust Y by the difference.
      const Elem old = coeff[i];
      const Elem nxt = old + 1 == F.q() ? 0 : old + 1;
      Y = mat::add(Y, mat::scale(basis[i], F.sub(nxt, old)));
      coeff[i] = nxt;
      if (nxt != 0) break;
    }
    if (i == basis.size()) return false;
  }
}

// Basis of {X : XA = AX} from the n^2 x n^2 linear system, solved with the
// generic kernel routine.
inline std::vector<Matrix> generic_centralizer(const Matrix& A) {
  const Field& F = A.field();
  const int n = A.n();
  // Row (u,v) holds the coefficients of X_uv in the equations (i,j).
  Matrix L(F, n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Elem c = 0;
          if (u == i) c = F.add(c, A(v, j));
          if (v == j) c = F.sub(c, A(i, u));
          L(u * n + v, i * n + j) = c;
        }
  std::vector<Matrix> out;
  for (const Vec& x : mat::kernel(L)) {
    Matrix X(F, n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) X(u, v) = x[u * n + v];
    out.push_back(std::move(X));
  }
  return out;
}

// Whether some Y in Cent(J(l)) has nilpotent type m, by enumerating all of
// Cent(J(l)) through a generic centralizer solve.  nullopt when the
// centralizer has more than `limit` elements.
inline std::optional<bool> brute_nil_commute(const Partition& l, const Partition& m, const Field& F,
                                             std::uint64_t limit) {
  const Matrix X = mat::jordan(F, l);
  const auto basis = generic_centralizer(X);
  std::uint64_t size = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    size *= F.q();
    if (size > limit) return std::nullopt;
  }
  return for_each_in_span(F, X.n(), basis, [&](const Matrix& Y) {
    return mat::is_nilpotent(Y) && mat::nilpotent_partition(Y) == m;
  });
}

// Sum of min over pairs of parts.
inline int min_sum(const Partition& l) {
  int s = 0;
  for (int a : l.parts())
    for (int b : l.parts()) s += std::min(a, b);
  return s;
}

}  // namespace fqc::testkit
