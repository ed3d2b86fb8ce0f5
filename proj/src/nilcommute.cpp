#include "fqc/nilcommute.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace fqc::nil {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
// Raw candidates allowed when listing nilpotent m x m blocks.
constexpr std::uint64_t kBlockListCap = std::uint64_t{1} << 22;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSat / b) return kSat;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, q);
  return r;
}

bool all_le_two(const Partition& l) { return l.largest() <= 2; }

bool universal(const Partition& l) {
  return all_le_two(l) || l == Partition(std::vector<int>{3});
}

bool is_n1(const Partition& l) { return l.length() == 2 && l[1] == 1 && l[0] >= 2; }

Matrix jordan_power(const Field& F, int n, int k) {
  return mat::pow(mat::jordan(F, Partition(std::vector<int>{n})), static_cast<unsigned>(k));
}

using Pair = std::pair<Matrix, Matrix>;

Pair sum_pairs(const std::vector<Pair>& ps) {
  std::vector<Matrix> xs, ys;
  for (const auto& [x, y] : ps) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return {mat::direct_sum(xs), mat::direct_sum(ys)};
}

bool verify_pair(const Pair& w, const Partition& l, const Partition& m) {
  const auto& [X, Y] = w;
  if (X.n() != l.size() || Y.n() != m.size()) return false;
  if (!mat::commutes(X, Y)) return false;
  if (!mat::is_nilpotent(X) || !mat::is_nilpotent(Y)) return false;
  return mat::nilpotent_partition(X) == l && mat::nilpotent_partition(Y) == m;
}

Pair swap_pair(Pair p) { return {std::move(p.second), std::move(p.first)}; }

// (X in N(2^s), Y in N(nu)) with |nu| = 2s.
Pair all_twos_witness(const Field& F, const Partition& nu) {
  const int n = nu.size();
  const auto& p = nu.parts();
  if (nu.length() == 1) return {jordan_power(F, n, n / 2), mat::jordan(F, nu)};
  std::vector<int> sub;
  if (nu.length() >= 3) {
    for (int i = 0; i < 3 && sub.empty(); ++i)
      for (int j = i + 1; j < 3 && sub.empty(); ++j)
        if ((p[i] - p[j]) % 2 == 0) sub = {p[i], p[j]};
  } else if (p[0] % 2 == 0 && p[1] % 2 == 0) {
    sub = {p[0]};
  }
  if (!sub.empty()) {
    std::vector<int> rest(p);
    for (int x : sub) rest.erase(std::find(rest.begin(), rest.end(), x));
    return sum_pairs({all_twos_witness(F, Partition::from_parts(sub)),
                      all_twos_witness(F, Partition::from_parts(rest))});
  }
  // Two odd parts s + t and s - t; e_i = 2(i-1), f_i = 2(i-1) + 1.
  const int s = n / 2, t = (p[0] - p[1]) / 2;
  auto e = [](int i) { return 2 * (i - 1); };
  auto f = [](int i) { return 2 * (i - 1) + 1; };
  Matrix X = mat::jordan(F, Partition(std::vector<int>(s, 2)));
  Matrix Y(F, n);
  for (int i = 1; i < s; ++i) {
    Y(e(i), e(i + 1)) = 1;
    Y(f(i), f(i + 1)) = 1;
  }
  if (t > 0) Y(e(s), f(s - t + 1)) = 1;
  return {X, Y};
}

// (X in N(u), Y in N(nu)) for u universal.
Pair universal_witness(const Field& F, const Partition& u, const Partition& nu) {
  if (u.length() == 1) return {mat::jordan(F, u), jordan_power(F, u[0], nu.length())};
  if (u.smallest() == 2) return all_twos_witness(F, nu);
  std::vector<Pair> blocks;
  int twos = u.multiplicity(2), ones = u.multiplicity(1);
  std::vector<int> rest(nu.parts());
  while (!rest.empty()) {
    if (ones == 0) {
      blocks.push_back(all_twos_witness(F, Partition::from_parts(rest)));
      break;
    }
    const int m = rest.front();
    rest.erase(rest.begin());
    const int k2 = std::min(twos, m / 2);
    const int k1 = m - 2 * k2;
    twos -= k2;
    ones -= k1;
    blocks.push_back({jordan_power(F, m, k1 + k2), mat::jordan(F, Partition(std::vector<int>{m}))});
  }
  return sum_pairs(blocks);
}

// Y in Cent(J(n-1,1)) of type mu, from sparse combinations of the basis.
std::optional<Pair> n1_witness(const Field& F, const Partition& mu) {
  const int n = mu.size();
  const Matrix X = mat::jordan(F, Partition(std::vector<int>{n - 1, 1}));
  const auto B = mat::jordan_centralizer_basis(F, {n - 1, 1});
  // B[t] shifts block 0 by t; B[n-1] is the top corner, B[n] the bottom one.
  std::vector<std::vector<int>> supports{{}};
  for (int a = 1; a <= n - 2; ++a) supports.push_back({a});
  for (int a = 1; a <= n - 2; ++a)
    for (int b = a + 1; b <= n - 2; ++b) supports.push_back({a, b});
  for (const auto& S : supports)
    for (int bg = 0; bg < 4; ++bg) {
      Matrix Y(F, n);
      for (int a : S) Y = mat::add(Y, B[a]);
      if (bg & 1) Y = mat::add(Y, B[n - 1]);
      if (bg & 2) Y = mat::add(Y, B[n]);
      if (mat::nilpotent_partition(Y) == mu) return Pair{X, Y};
    }
  return std::nullopt;
}

Pair conjugate_witness(const Field& F, const Partition& l) {
  const int n = l.size();
  std::vector<int> start;
  int off = 0;
  for (int h : l.parts()) {
    start.push_back(off);
    off += h;
  }
  Matrix Y(F, n);
  for (int i = 0; i + 1 < l.length(); ++i)
    for (int j = 0; j < l[i + 1]; ++j) Y(start[i] + j, start[i + 1] + j) = 1;
  return {mat::jordan(F, l), Y};
}

Pair ar_witness(const Field& F, const std::vector<ArGroup>& groups) {
  std::vector<Pair> blocks;
  for (const auto& g : groups)
    blocks.push_back({jordan_power(F, g.size, g.piece1.length()),
                      jordan_power(F, g.size, g.piece2.length())});
  return sum_pairs(blocks);
}

// Decision for λ = (n-1,1) against μ.
bool n1_commutes(const Partition& mu) {
  const int n = mu.size();
  if (mu.multiplicity(1) > 0) {
    std::vector<int> rest(mu.parts());
    rest.pop_back();
    if (is_almost_rectangular(Partition(rest))) return true;
  }
  if (n % 2 == 0 && mu.smallest() == 2 && mu.largest() == 2) return true;
  if (mu.largest() == 3 && mu.multiplicity(3) == 1 && mu.multiplicity(1) >= 1) return true;
  if (n == 3 && mu == Partition(std::vector<int>{3})) return true;
  return false;
}

}  // namespace

std::uint64_t exponent_pgl2(int p, int r) {
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  if (r < 1) throw InvalidDegree("r must be positive");
  const std::uint64_t pp = sat_pow(static_cast<std::uint64_t>(p), 2 * static_cast<std::uint64_t>(r));
  if (pp == kSat) throw InvalidDegree("exponent overflows");
  const std::uint64_t e = p == 2 ? 1 : 2;
  const std::uint64_t v = sat_mul(static_cast<std::uint64_t>(p), pp - 1);
  if (v == kSat) throw InvalidDegree("exponent overflows");
  return v / e;
}

OracleResult theorem_oracle(const Partition& l, const Partition& m, const Field& F) {
  if (l.size() != m.size()) throw SizeMismatch(l.str() + " vs " + m.str());
  if (l.empty()) throw EmptyInput("empty partitions");
  auto yes = [](const char* t) { return OracleResult{Oracle::Yes, t}; };
  auto no = [](const char* t) { return OracleResult{Oracle::No, t}; };
  if (l == m) return yes("equal");
  if (universal(l) || universal(m)) return yes("universal");
  if (l.length() == 1) return is_almost_rectangular(m) ? yes("one-part") : no("one-part");
  if (m.length() == 1) return is_almost_rectangular(l) ? yes("one-part") : no("one-part");
  if (is_n1(l)) return n1_commutes(m) ? yes("n-1-one") : no("n-1-one");
  if (is_n1(m)) return n1_commutes(l) ? yes("n-1-one") : no("n-1-one");
  if (l.length() == 2 && m.length() == 2) {
    const Partition& a = l[0] >= m[0] ? l : m;
    const Partition& b = l[0] >= m[0] ? m : l;
    if (b[0] == b[1] && a[0] - a[1] == 2) {
      const std::uint64_t ex = exponent_pgl2(F.p(), F.a());
      return static_cast<std::uint64_t>(b[0]) % ex != 0 ? yes("nn-criterion") : no("nn-criterion");
    }
    return no("two-part");
  }
  if (common_ar_groups(l, m)) return yes("ar-refinement");
  if (conjugate(l) == m) return yes("conjugate");
  return {};
}

std::optional<std::pair<Matrix, Matrix>> theorem_witness(const Partition& l, const Partition& m,
                                                         const Field& F) {
  const OracleResult o = theorem_oracle(l, m, F);
  if (o.result != Oracle::Yes) return std::nullopt;
  std::optional<Pair> w;
  const std::string& t = o.theorem;
  if (t == "equal") {
    w = Pair{mat::jordan(F, l), mat::jordan(F, l)};
  } else if (t == "universal") {
    w = universal(l) ? universal_witness(F, l, m) : swap_pair(universal_witness(F, m, l));
  } else if (t == "one-part") {
    w = l.length() == 1 ? Pair{mat::jordan(F, l), jordan_power(F, l[0], m.length())}
                        : Pair{jordan_power(F, m[0], l.length()), mat::jordan(F, m)};
  } else if (t == "n-1-one") {
    if (is_n1(l)) {
      w = n1_witness(F, m);
    } else if (auto r = n1_witness(F, l)) {
      w = swap_pair(*r);
    }
  } else if (t == "nn-criterion") {
    const int half = l.size() / 2;
    Pair p = nn_witness(half, F);
    w = l[0] == l[1] ? swap_pair(std::move(p)) : std::move(p);
  } else if (t == "ar-refinement") {
    w = ar_witness(F, *common_ar_groups(l, m));
  } else if (t == "conjugate") {
    w = conjugate_witness(F, l);
  }
  if (w && !verify_pair(*w, l, m)) return std::nullopt;
  return w;
}

std::pair<Matrix, Matrix> nn_witness(int n, const Field& F) {
  if (n < 1) throw InvalidDegree("n must be positive");
  if (static_cast<std::uint64_t>(n) % exponent_pgl2(F.p(), F.a()) == 0)
    throw NoWitnessExists("the PGL_2 exponent over " + F.name() + " divides " + std::to_string(n));
  if (n == 1) return {mat::jordan(F, Partition(std::vector<int>{2})), Matrix(F, 2)};
  const Partition big(std::vector<int>{n + 1, n - 1}), nn(std::vector<int>{n, n});
  const Elem q = F.q();
  // Entries of A: alpha, beta / gamma, delta.
  Elem al = 0, be = 0, ga = 0, de = 0;
  bool found = false;
  const std::uint64_t total = static_cast<std::uint64_t>(q) * q * q * q;
  for (std::uint64_t idx = 0; idx < total && !found; ++idx) {
    std::uint64_t r = idx;
    const Elem a11 = static_cast<Elem>(r % q);
    r /= q;
    const Elem a12 = static_cast<Elem>(r % q);
    r /= q;
    const Elem a21 = static_cast<Elem>(r % q);
    r /= q;
    const Elem a22 = static_cast<Elem>(r % q);
    if (F.sub(F.mul(a11, a22), F.mul(a12, a21)) == 0) continue;
    if (a12 == 0 && a21 == 0 && a11 == a22) continue;
    // Top left entry of A^n.
    Elem p11 = 1, p12 = 0, p21 = 0, p22 = 1;
    for (int k = 0; k < n; ++k) {
      const Elem n11 = F.add(F.mul(p11, a11), F.mul(p12, a21));
      const Elem n12 = F.add(F.mul(p11, a12), F.mul(p12, a22));
      const Elem n21 = F.add(F.mul(p21, a11), F.mul(p22, a21));
      const Elem n22 = F.add(F.mul(p21, a12), F.mul(p22, a22));
      p11 = n11, p12 = n12, p21 = n21, p22 = n22;
    }
    if (p11 != 0) continue;
    al = a11, be = a12, ga = a21, de = a22;
    found = true;
  }
  if (!found) throw InternalError("no suitable 2x2 matrix found");
  // u_i = e_{n-i} (0 <= i <= n), w_j = e_{2n-j} (1 <= j <= n-1).
  auto u = [n](int i) { return n - i; };
  auto w = [n](int j) { return 2 * n - j; };
  const Matrix M = mat::jordan(F, big);
  Matrix Y(F, 2 * n);
  for (int k = 1; k <= n; ++k) {
    Y(u(k), u(k - 1)) = F.add(Y(u(k), u(k - 1)), al);
    if (k - 1 >= 1) Y(u(k), w(k - 1)) = F.add(Y(u(k), w(k - 1)), ga);
  }
  for (int k = 1; k <= n - 1; ++k) {
    Y(w(k), u(k - 1)) = F.add(Y(w(k), u(k - 1)), be);
    if (k - 1 >= 1) Y(w(k), w(k - 1)) = F.add(Y(w(k), w(k - 1)), de);
  }
  if (!verify_pair({M, Y}, big, nn)) throw InternalError("nn witness failed to verify");
  return {M, Y};
}

Doubled double_construction(const Matrix& X, const Matrix& Y) {
  if (X.n() != Y.n() || X.field() != Y.field()) throw ShapeMismatch("double construction inputs");
  if (!mat::commutes(X, Y)) throw NotCommuting("X and Y do not commute");
  const Field& F = X.field();
  const int n = X.n();
  Matrix D = mat::direct_sum({X, X});
  Matrix E = mat::direct_sum({Y, Y});
  for (int i = 0; i < n; ++i) E(i, n + i) = 1;
  Doubled out{D, E, mat::class_type(D), mat::class_type(E)};
  (void)F;
  return out;
}

int centralizer_dim(const Partition& l) {
  int s = 0;
  for (int a : l.parts())
    for (int b : l.parts()) s += std::min(a, b);
  return s;
}

namespace {

// Nilpotent part of Cent(J(λ)): a semisimple choice (one nilpotent m_h x m_h
// matrix per part size h) plus an arbitrary radical element.
struct Param {
  Field F;
  int n = 0;
  std::vector<int> start;
  // Radical basis, as the positions of its 1 entries.
  std::vector<std::vector<std::pair<int, int>>> radical;
  struct Semi {
    int h;
    std::vector<int> blocks;
    std::vector<std::vector<Elem>> nil;  // row-major m x m
  };
  std::vector<Semi> semis;
  std::uint64_t count = 0;

  Param(const Partition& l, const Field& F_) : F(F_), n(l.size()) {
    const auto& b = l.parts();
    int off = 0;
    for (int h : b) {
      start.push_back(off);
      off += h;
    }
    const int k = l.length();
    int rad = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const int m = std::min(b[i], b[j]);
        for (int t = 0; t < m; ++t) {
          if (t == 0 && b[i] == b[j]) continue;
          std::vector<std::pair<int, int>> e;
          for (int r = 0; r < m - t; ++r) e.emplace_back(start[i] + r, start[j] + b[j] - m + t + r);
          radical.push_back(std::move(e));
          ++rad;
        }
      }
    count = sat_pow(F.q(), static_cast<std::uint64_t>(rad));
    for (int i = 0; i < k;) {
      int j = i;
      while (j < k && b[j] == b[i]) ++j;
      Semi s;
      s.h = b[i];
      for (int x = i; x < j; ++x) s.blocks.push_back(x);
      const std::uint64_t m = s.blocks.size();
      count = sat_mul(count, sat_pow(F.q(), m * m - m));
      semis.push_back(std::move(s));
      i = j;
    }
  }

  // Lists nilpotent blocks; false if the raw enumeration is too large.
  bool list_blocks() {
    for (auto& s : semis) {
      const int m = static_cast<int>(s.blocks.size());
      const std::uint64_t raw = sat_pow(F.q(), static_cast<std::uint64_t>(m) * m);
      if (raw > kBlockListCap) return false;
      std::vector<Elem> cur(static_cast<size_t>(m) * m, 0);
      for (std::uint64_t idx = 0; idx < raw; ++idx) {
        std::uint64_t r = idx;
        for (auto& c : cur) {
          c = static_cast<Elem>(r % F.q());
          r /= F.q();
        }
        Matrix Y(F, m);
        for (int a = 0; a < m; ++a)
          for (int c = 0; c < m; ++c) Y(a, c) = cur[a * m + c];
        if (mat::pow(Y, static_cast<unsigned>(m)).is_zero()) s.nil.push_back(cur);
      }
    }
    return true;
  }

  std::uint64_t semi_combos() const {
    std::uint64_t c = 1;
    for (const auto& s : semis) c = sat_mul(c, s.nil.size());
    return c;
  }

  // Writes the semisimple choice (mixed radix index) into X.
  void semi_matrix(std::uint64_t idx, std::vector<Elem>& X) const {
    std::fill(X.begin(), X.end(), 0);
    for (const auto& s : semis) {
      const auto& y = s.nil[idx % s.nil.size()];
      idx /= s.nil.size();
      const int m = static_cast<int>(s.blocks.size());
      for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c) {
          const Elem v = y[a * m + c];
          if (!v) continue;
          for (int r = 0; r < s.h; ++r)
            X[(start[s.blocks[a]] + r) * n + start[s.blocks[c]] + r] = v;
        }
    }
  }
};

// rank(X^j) for j = 1..max part of τ.
std::vector<int> target_ranks(const Partition& t) {
  std::vector<int> r;
  for (int j = 1; j <= t.largest(); ++j) {
    int s = 0;
    for (int x : t.parts()) s += std::max(x - j, 0);
    r.push_back(s);
  }
  return r;
}

int bit_rank(const std::vector<std::uint64_t>& rows) {
  std::uint64_t a[64];
  const int n = static_cast<int>(rows.size());
  std::copy(rows.begin(), rows.end(), a);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t v = a[i];
    if (!v) continue;
    ++r;
    const std::uint64_t piv = v & (~v + 1);
    for (int k = i + 1; k < n; ++k)
      if (a[k] & piv) a[k] ^= v;
  }
  return r;
}

void bit_mul(const std::vector<std::uint64_t>& A, const std::vector<std::uint64_t>& B,
             std::vector<std::uint64_t>& C) {
  const int n = static_cast<int>(A.size());
  for (int i = 0; i < n; ++i) {
    std::uint64_t row = 0, bits = A[i];
    while (bits) {
      const int j = __builtin_ctzll(bits);
      bits &= bits - 1;
      row ^= B[j];
    }
    C[i] = row;
  }
}

int flat_rank(const Field& F, std::vector<Elem> a, int n) {
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (a[r * n + col]) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < n; ++j) std::swap(a[p * n + j], a[row * n + j]);
    const Elem s = F.inv(a[row * n + col]);
    for (int r = row + 1; r < n; ++r) {
      const Elem v = a[r * n + col];
      if (!v) continue;
      const Elem c = F.mul(v, s);
      for (int j = col; j < n; ++j)
        if (a[row * n + j]) a[r * n + j] = F.sub(a[r * n + j], F.mul(c, a[row * n + j]));
    }
    ++row;
  }
  return row;
}

void flat_mul(const Field& F, const std::vector<Elem>& A, const std::vector<Elem>& B,
              std::vector<Elem>& C, int n) {
  std::fill(C.begin(), C.end(), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Elem a = A[i * n + k];
      if (!a) continue;
      for (int j = 0; j < n; ++j) {
        const Elem b = B[k * n + j];
        if (b) C[i * n + j] = F.add(C[i * n + j], F.mul(a, b));
      }
    }
}

class Checker {
 public:
  Checker(const Field& F, int n, const Partition& target)
      : F_(F), n_(n), ranks_(target_ranks(target)), p_(static_cast<size_t>(n) * n),
        t_(static_cast<size_t>(n) * n), bp_(n), bt_(n) {}

  bool check(const std::vector<Elem>& X) {
    if (flat_rank(F_, X, n_) != ranks_[0]) return false;
    p_ = X;
    for (size_t j = 1; j < ranks_.size(); ++j) {
      flat_mul(F_, p_, X, t_, n_);
      std::swap(p_, t_);
      if (flat_rank(F_, p_, n_) != ranks_[j]) return false;
    }
    return true;
  }

  bool check_bits(const std::vector<std::uint64_t>& X) {
    if (bit_rank(X) != ranks_[0]) return false;
    bp_ = X;
    for (size_t j = 1; j < ranks_.size(); ++j) {
      bit_mul(bp_, X, bt_);
      std::swap(bp_, bt_);
      if (bit_rank(bp_) != ranks_[j]) return false;
    }
    return true;
  }

 private:
  Field F_;
  int n_;
  std::vector<int> ranks_;
  std::vector<Elem> p_, t_;
  std::vector<std::uint64_t> bp_, bt_;
};

Matrix to_matrix(const Field& F, int n, const std::vector<Elem>& X) {
  Matrix M(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = X[i * n + j];
  return M;
}

Matrix bits_to_matrix(const Field& F, const std::vector<std::uint64_t>& X) {
  const int n = static_cast<int>(X.size());
  Matrix M(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = (X[i] >> j) & 1;
  return M;
}

std::optional<Matrix> search_f2(const Param& P, const Partition& target) {
  const int n = P.n;
  Checker ck(P.F, n, target);
  const int R = static_cast<int>(P.radical.size());
  std::vector<std::vector<std::uint64_t>> rad(R, std::vector<std::uint64_t>(n, 0));
  for (int k = 0; k < R; ++k)
    for (auto [i, j] : P.radical[k]) rad[k][i] |= std::uint64_t{1} << j;
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  std::vector<std::uint64_t> X(n);
  const std::uint64_t combos = P.semi_combos();
  for (std::uint64_t s = 0; s < combos; ++s) {
    P.semi_matrix(s, flat);
    for (int i = 0; i < n; ++i) {
      X[i] = 0;
      for (int j = 0; j < n; ++j)
        if (flat[i * n + j]) X[i] |= std::uint64_t{1} << j;
    }
    const std::uint64_t steps = std::uint64_t{1} << R;
    for (std::uint64_t g = 0; g < steps; ++g) {
      if (g) {
        const auto& b = rad[__builtin_ctzll(g)];
        for (int i = 0; i < n; ++i) X[i] ^= b[i];
      }
      if (ck.check_bits(X)) return bits_to_matrix(P.F, X);
    }
  }
  return std::nullopt;
}

std::optional<Matrix> search_generic(const Param& P, const Partition& target) {
  const Field& F = P.F;
  const int n = P.n;
  const int a = F.a();
  const int p = F.p();
  Checker ck(F, n, target);
  // F_p digits: radical element k times the a-th power basis element p^a.
  struct Digit {
    const std::vector<std::pair<int, int>>* entries;
    Elem w;
  };
  std::vector<Digit> digits;
  for (const auto& e : P.radical) {
    Elem w = 1;
    for (int i = 0; i < a; ++i) {
      digits.push_back({&e, w});
      w *= static_cast<Elem>(p);
    }
  }
  std::vector<Elem> X(static_cast<size_t>(n) * n);
  std::vector<int> dig(digits.size());
  const std::uint64_t combos = P.semi_combos();
  for (std::uint64_t s = 0; s < combos; ++s) {
    P.semi_matrix(s, X);
    std::fill(dig.begin(), dig.end(), 0);
    while (true) {
      if (ck.check(X)) return to_matrix(F, n, X);
      size_t i = 0;
      for (; i < digits.size(); ++i) {
        for (auto [r, c] : *digits[i].entries) X[r * n + c] = F.add(X[r * n + c], digits[i].w);
        if (++dig[i] < p) break;
        dig[i] = 0;
      }
      if (i == digits.size()) break;
    }
  }
  return std::nullopt;
}

std::optional<Matrix> search_random(const Param& P, const Partition& target, std::uint64_t samples,
                                    std::uint64_t seed) {
  const Field& F = P.F;
  const int n = P.n;
  Checker ck(F, n, target);
  std::mt19937_64 rng(seed);
  std::vector<Elem> X(static_cast<size_t>(n) * n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t idx = 0, mult = 1;
    for (const auto& sm : P.semis) {
      idx += mult * (rng() % sm.nil.size());
      mult *= sm.nil.size();
    }
    P.semi_matrix(idx, X);
    for (const auto& e : P.radical) {
      const Elem c = static_cast<Elem>(rng() % F.q());
      if (!c) continue;
      for (auto [r, col] : e) X[r * n + col] = F.add(X[r * n + col], c);
    }
    if (ck.check(X)) return to_matrix(F, n, X);
  }
  return std::nullopt;
}

Verdict orient(Verdict v, bool swapped) {
  if (swapped && v.witness) v.witness = swap_pair(std::move(*v.witness));
  return v;
}

}  // namespace

std::uint64_t nilpotent_centralizer_count(const Partition& l, const Field& F) {
  return Param(l, F).count;
}

Verdict exhaustive(const Partition& fixed, const Partition& target, const Field& F,
                   std::uint64_t budget) {
  if (fixed.size() != target.size()) throw SizeMismatch(fixed.str() + " vs " + target.str());
  Verdict v;
  Param P(fixed, F);
  if (P.count > budget || !P.list_blocks()) {
    v.method = "budget";
    return v;
  }
  v.spent = P.count;
  std::optional<Matrix> X;
  if (F.q() == 2 && P.n <= 64)
    X = search_f2(P, target);
  else
    X = search_generic(P, target);
  v.method = "exhaustive";
  if (X) {
    v.status = Status::Yes;
    v.witness = Pair{mat::jordan(F, fixed), *X};
    if (!verify_pair(*v.witness, fixed, target)) throw InternalError("exhaustive witness failed to verify");
  } else {
    v.status = Status::No;
  }
  return v;
}

Verdict decide(const Partition& l, const Partition& m, const Field& F, const DecideOptions& opts) {
  if (l.size() != m.size()) throw SizeMismatch(l.str() + " vs " + m.str());
  if (l.empty()) throw EmptyInput("empty partitions");
  std::string theorem_yes;
  if (opts.use_theorems) {
    const OracleResult o = theorem_oracle(l, m, F);
    if (o.result == Oracle::No) return {Status::No, "theorem: " + o.theorem, std::nullopt, 0};
    if (o.result == Oracle::Yes) {
      if (auto w = theorem_witness(l, m, F)) {
        const std::string method = o.theorem == "nn-criterion" ? "nn-construction" : "theorem: " + o.theorem;
        return {Status::Yes, method, std::move(w), 0};
      }
      theorem_yes = o.theorem;
    }
  }
  bool swapped;
  if (opts.fix == 1) {
    swapped = false;
  } else if (opts.fix == 2) {
    swapped = true;
  } else {
    const int dl = centralizer_dim(l), dm = centralizer_dim(m);
    swapped = dm < dl || (dm == dl && m < l);
  }
  const Partition& fixed = swapped ? m : l;
  const Partition& target = swapped ? l : m;
  Verdict v = exhaustive(fixed, target, F, opts.budget);
  if (v.status != Status::Unknown) {
    if (v.status == Status::No && !theorem_yes.empty())
      throw InternalError("exhaustive search contradicts theorem " + theorem_yes);
    if (!theorem_yes.empty()) v.method = "theorem: " + theorem_yes;
    return orient(std::move(v), swapped);
  }
  if (opts.randomized && opts.budget >= 16) {
    Param P(fixed, F);
    if (P.list_blocks()) {
      const std::uint64_t samples = opts.budget / 16;
      if (auto X = search_random(P, target, samples, opts.seed)) {
        Verdict r{Status::Yes, theorem_yes.empty() ? "randomized" : "theorem: " + theorem_yes,
                  Pair{mat::jordan(F, fixed), *X}, samples};
        if (!verify_pair(*r.witness, fixed, target)) throw InternalError("random witness failed to verify");
        return orient(std::move(r), swapped);
      }
    }
  }
  return {Status::Unknown, "budget", std::nullopt, v.spent};
}

UniversalReport universal_check(int n, const Field& F, const DecideOptions& opts) {
  if (n < 1) throw InvalidDegree("n must be positive");
  UniversalReport rep;
  const auto ps = partitions_of(n);
  for (const auto& l : ps) {
    bool all_yes = true;
    for (const auto& m : ps) {
      const Verdict v = decide(l, m, F, opts);
      if (v.status == Status::Unknown) rep.unknown_cells.emplace_back(l, m);
      if (v.status != Status::Yes) all_yes = false;
    }
    if (all_yes) rep.universal.push_back(l);
  }
  return rep;
}

FieldDependence field_dependence_pair(int p, int r) {
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  if (r < 1) throw InvalidDegree("r must be positive");
  std::uint64_t L = 1;
  for (int s = 1; s <= r; ++s) {
    const std::uint64_t v = sat_pow(static_cast<std::uint64_t>(p), 2 * static_cast<std::uint64_t>(s)) - 1;
    L = sat_mul(L / std::gcd(L, v), v);
    if (L == kSat) throw InvalidDegree("n overflows");
  }
  const std::uint64_t e = p == 2 ? 1 : 2;
  const std::uint64_t n = sat_mul(static_cast<std::uint64_t>(p), L) / e;
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / 2))
    throw InvalidDegree("n too large for a partition");
  FieldDependence out;
  out.n = n;
  out.lambda = Partition(std::vector<int>{static_cast<int>(n), static_cast<int>(n)});
  out.mu = Partition(std::vector<int>{static_cast<int>(n) + 1, static_cast<int>(n) - 1});
  bool ok = true;
  for (int a = 1; a <= r + 3; ++a) {
    std::uint64_t ex;
    try {
      ex = exponent_pgl2(p, a);
    } catch (const InvalidDegree&) {
      ex = kSat;  // larger than n, so it cannot divide n
    }
    const bool divides = ex <= n && n % ex == 0;
    if (a <= r && !divides) ok = false;
    if (a > r && divides) ok = false;
  }
  out.verified = ok;
  return out;
}

}  // namespace fqc::nil
