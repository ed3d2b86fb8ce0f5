#include "fqc/cent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fqc::cent {

namespace {

Elem flat_det(const Field& F, std::vector<Elem> a, int n) {
  Elem det = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (a[r * n + col]) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[col * n + j]);
      det = F.neg(det);
    }
    const Elem piv = a[col * n + col];
    det = F.mul(det, piv);
    const Elem s = F.inv(piv);
    for (int r = col + 1; r < n; ++r) {
      const Elem v = a[r * n + col];
      if (!v) continue;
      const Elem c = F.mul(v, s);
      for (int j = col; j < n; ++j)
        if (a[col * n + j]) a[r * n + j] = F.sub(a[r * n + j], F.mul(c, a[col * n + j]));
    }
  }
  return det;
}

std::vector<Elem> sorted(const std::set<Elem>& s) { return {s.begin(), s.end()}; }

std::vector<Elem> brute_det_set(const Matrix& M, std::uint64_t budget) {
  const Field& F = M.field();
  const int n = M.n();
  const auto basis = mat::centralizer_basis(M);
  std::uint64_t total = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (total > budget / F.q()) throw BudgetExceeded("centralizer too large for brute force");
    total *= F.q();
  }
  if (total > budget) throw BudgetExceeded("centralizer too large for brute force");
  // F_p digits: basis element k times the a-th power basis element.
  struct Digit {
    const Matrix* b;
    Elem w;
  };
  std::vector<Digit> digits;
  for (const auto& b : basis) {
    Elem w = 1;
    for (int i = 0; i < F.a(); ++i) {
      digits.push_back({&b, w});
      w *= static_cast<Elem>(F.p());
    }
  }
  std::vector<Elem> X(static_cast<size_t>(n) * n, 0);
  std::vector<int> dig(digits.size(), 0);
  std::set<Elem> dets;
  while (true) {
    dets.insert(flat_det(F, X, n));
    if (dets.size() == F.q()) break;
    size_t i = 0;
    for (; i < digits.size(); ++i) {
      const auto& d = digits[i];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          const Elem v = (*d.b)(r, c);
          if (v) X[r * n + c] = F.add(X[r * n + c], F.mul(v, d.w));
        }
      if (++dig[i] < F.p()) break;
      dig[i] = 0;
    }
    if (i == digits.size()) break;
  }
  return sorted(dets);
}

// Products over components of the per-component determinant, for injective
// assignments of the irreducibles of one degree.
std::set<Elem> degree_products(const Field& F, const std::vector<Elem>& norms,
                               const std::vector<int>& sizes) {
  std::set<Elem> out;
  std::vector<bool> used(norms.size(), false);
  auto rec = [&](auto&& self, size_t i, Elem acc) -> void {
    if (i == sizes.size()) {
      out.insert(acc);
      return;
    }
    for (size_t f = 0; f < norms.size(); ++f) {
      if (used[f]) continue;
      used[f] = true;
      self(self, i + 1, F.mul(acc, F.pow(norms[f], static_cast<std::uint64_t>(sizes[i]))));
      used[f] = false;
    }
  };
  rec(rec, 0, 1);
  return out;
}

std::vector<Elem> exhaustive_coverage(const ClassType& T, const Field& F) {
  std::map<int, std::vector<int>> sizes;
  for (const auto& c : T.components()) sizes[c.degree].push_back(c.partition.size());
  double count = 1;
  for (const auto& [d, s] : sizes) {
    const double N = static_cast<double>(poly::count_irreducibles(F.q(), d));
    for (size_t i = 0; i < s.size(); ++i) count *= N - static_cast<double>(i);
  }
  if (count > static_cast<double>(kCoverageCap)) throw BudgetExceeded("too many polynomial assignments");
  std::set<Elem> acc{1};
  for (const auto& [d, s] : sizes) {
    std::vector<Elem> norms;
    for (const auto& f : poly::enumerate_irreducibles(F, d)) {
      const Elem c = f[0];
      norms.push_back(d % 2 == 0 ? c : F.neg(c));
    }
    const auto prods = degree_products(F, norms, s);
    std::set<Elem> next;
    for (Elem x : acc)
      for (Elem y : prods) next.insert(F.mul(x, y));
    acc = std::move(next);
  }
  return sorted(acc);
}

}  // namespace

int part_size_invariant_of(const ClassType& T) {
  std::vector<Partition> ls;
  for (const auto& c : T.components()) ls.push_back(c.partition);
  return part_size_invariant(ls);
}

int part_size_invariant_of(const CycleType& T) { return part_size_invariant_of(T.class_type()); }

int part_size_invariant_of(const Matrix& M) {
  if (M.n() == 0) throw EmptyInput("0 x 0 matrix");
  return part_size_invariant_of(mat::class_type(M));
}

std::vector<Elem> det_set(const Matrix& M, DetMode mode, std::uint64_t budget) {
  if (mode == DetMode::Theorem) return kth_powers(M.field(), static_cast<std::uint64_t>(part_size_invariant_of(M)));
  return brute_det_set(M, budget);
}

std::uint64_t centralizing_index(const Matrix& M) {
  return std::gcd<std::uint64_t, std::uint64_t>(M.field().q() - 1, part_size_invariant_of(M));
}

std::uint64_t centralizing_index(const CycleType& T) {
  return std::gcd<std::uint64_t, std::uint64_t>(T.field().q() - 1, part_size_invariant_of(T));
}

std::vector<Elem> type_det_coverage(const ClassType& T, const Field& F, CoverageMode mode) {
  std::map<int, std::uint64_t> per;
  for (const auto& c : T.components()) ++per[c.degree];
  for (const auto& [d, k] : per)
    if (k > poly::count_irreducibles(F.q(), d)) throw NotRepresentable(T.str() + " over " + F.name());
  if (T.components().empty()) throw EmptyInput("empty type");
  if (mode == CoverageMode::Exhaustive) return exhaustive_coverage(T, F);

  const bool zero = per.count(1) > 0;
  const std::uint64_t m = F.q() - 1;
  // Every linear polynomial in use, x among them.
  if (zero && per[1] == F.q()) return {0};
  std::map<int, std::uint64_t> L;
  for (const auto& c : T.components()) L[c.degree] += static_cast<std::uint64_t>(c.partition.size());
  std::vector<Elem> out;
  if (zero) out.push_back(0);
  for (const auto& [d, l] : L)
    if (std::gcd(static_cast<std::uint64_t>(d) * l, m) == 1) {
      for (Elem x = 1; x < F.q(); ++x) out.push_back(x);
      return out;
    }
  const bool linear = per.size() == 1 && zero;
  if (linear && per[1] <= m) {
    std::vector<long long> pi;
    for (const auto& c : T.components()) pi.push_back(c.partition.size());
    for (int e : pi_expressible_set(static_cast<int>(m), canonical_pi(static_cast<int>(m), pi)))
      out.push_back(F.exp(static_cast<std::uint64_t>(e)));
    std::sort(out.begin(), out.end());
    return out;
  }
  return exhaustive_coverage(T, F);
}

std::vector<int> canonical_pi(int m, const std::vector<long long>& pi) {
  if (m < 1) throw InvalidDegree("group order must be positive");
  if (pi.size() > static_cast<size_t>(m)) throw ShapeMismatch("more exponents than group elements");
  std::vector<int> out;
  for (long long v : pi) out.push_back(static_cast<int>(((v % m) + m) % m));
  out.resize(m, 0);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> pi_expressible_set(int m, const std::vector<int>& pi) {
  if (m < 1) throw InvalidDegree("group order must be positive");
  if (pi.size() != static_cast<size_t>(m)) throw ShapeMismatch("pi must have m entries");
  // Distinct exponent values and their multiplicities.
  std::map<int, int> mult;
  for (int v : pi) ++mult[((v % m) + m) % m];
  std::vector<int> vals, cnt, radix;
  int states = 1;
  for (const auto& [v, c] : mult) {
    vals.push_back(v);
    cnt.push_back(c);
    radix.push_back(states);
    states *= c + 1;
  }
  // reach[used-counts index][sum]: after assigning group elements 0..g-1.
  std::vector<std::vector<char>> reach(states, std::vector<char>(m, 0));
  reach[0][0] = 1;
  for (int g = 0; g < m; ++g) {
    std::vector<std::vector<char>> next(states, std::vector<char>(m, 0));
    for (int s = 0; s < states; ++s)
      for (int sum = 0; sum < m; ++sum) {
        if (!reach[s][sum]) continue;
        for (size_t k = 0; k < vals.size(); ++k) {
          if ((s / radix[k]) % (cnt[k] + 1) == cnt[k]) continue;
          next[s + radix[k]][(sum + static_cast<long long>(vals[k]) * g) % m] = 1;
        }
      }
    reach = std::move(next);
  }
  std::vector<int> out;
  for (int sum = 0; sum < m; ++sum)
    if (reach[states - 1][sum]) out.push_back(sum);
  return out;
}

bool pi_predicted_full(int m, const std::vector<int>& pi) {
  const std::vector<int> c = canonical_pi(m, std::vector<long long>(pi.begin(), pi.end()));
  // Fullness is unchanged by a common shift, so π' ranges over every shift
  // that makes some entry 0.
  for (int s : c) {
    std::vector<int> d;
    for (int v : c) d.push_back(((v - s) % m + m) % m);
    std::vector<int> nz;
    for (int v : d)
      if (v) nz.push_back(v);
    if (nz.size() == 2 && nz[0] + nz[1] == m) return false;
    for (int p = 2; p <= m; ++p) {
      if (m % p) continue;
      if (std::all_of(d.begin(), d.end(), [p](int v) { return v % p == 0; })) return false;
    }
  }
  return true;
}

std::vector<PiDisagreement> pi_conjecture_check(int m) {
  if (m < 1) throw InvalidDegree("group order must be positive");
  std::vector<PiDisagreement> out;
  std::vector<int> pi(m, m - 1);
  // Weakly decreasing sequences over [0, m), in reverse lexicographic order.
  while (true) {
    const auto set = pi_expressible_set(m, pi);
    const bool full = static_cast<int>(set.size()) == m;
    const bool pred = pi_predicted_full(m, pi);
    if (full != pred) out.push_back({pi, set, pred});
    int i = m - 1;
    while (i >= 0 && pi[i] == 0) --i;
    if (i < 0) break;
    const int v = pi[i] - 1;
    for (int j = i; j < m; ++j) pi[j] = v;
  }
  return out;
}

}  // namespace fqc::cent
