#include "fqc/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fqc {

Matrix Matrix::identity(const Field& F, int n) { return scalar(F, n, 1); }

Matrix Matrix::scalar(const Field& F, int n, Elem c) {
  Matrix M(F, n);
  for (int i = 0; i < n; ++i) M(i, i) = c;
  return M;
}

Matrix Matrix::from_rows(const Field& F, const std::vector<Vec>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix M(F, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw ShapeMismatch("row length differs from row count");
    for (int j = 0; j < n; ++j) M(i, j) = rows[i][j];
  }
  return M;
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * n_, a_.begin() + static_cast<long>(i + 1) * n_);
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

// --- Subspace --------------------------------------------------------------

Vec Subspace::reduce(Vec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Elem c = v[pivots_[k]];
    if (c == 0) continue;
    const Vec& r = rows_[k];
    for (int j = 0; j < n_; ++j)
      if (r[j]) v[j] = F_.sub(v[j], F_.mul(c, r[j]));
  }
  return v;
}

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (r[j]) {
      p = j;
      break;
    }
  if (p < 0) return false;
  const Elem s = F_.inv(r[p]);
  for (auto& x : r) x = F_.mul(x, s);
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

namespace mat {

namespace {

void same_shape(const Matrix& A, const Matrix& B) {
  if (A.n() != B.n() || A.field() != B.field())
    throw ShapeMismatch("matrices of different size or field");
}

std::vector<Vec> rows_of(const Matrix& A) {
  std::vector<Vec> r(A.n());
  for (int i = 0; i < A.n(); ++i) r[i] = A.row(i);
  return r;
}

// In-place reduced row echelon form, pivoting on the first cols columns;
// returns pivot columns.
std::vector<int> rref(const Field& F, std::vector<Vec>& a, int cols) {
  std::vector<int> piv;
  int row = 0;
  const int nr = static_cast<int>(a.size());
  for (int col = 0; col < cols && row < nr; ++col) {
    int p = -1;
    for (int r = row; r < nr; ++r)
      if (a[r][col]) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    const Elem s = F.inv(a[row][col]);
    for (auto& x : a[row]) x = F.mul(x, s);
    for (int r = 0; r < nr; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Elem c = a[r][col];
      for (size_t j = 0; j < a[r].size(); ++j)
        if (a[row][j]) a[r][j] = F.sub(a[r][j], F.mul(c, a[row][j]));
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

// Basis of {x : a x = 0} for an r x c system a.
std::vector<Vec> right_kernel(const Field& F, std::vector<Vec> a, int cols) {
  auto piv = rref(F, a, cols);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(a[r][f]);
    out.push_back(std::move(v));
  }
  return out;
}

// Annihilator of v under A: least monic g with v g(A) = 0.
Poly local_min_poly(const Matrix& A, const Vec& v0) {
  const Field& F = A.field();
  const int n = A.n();
  std::vector<Vec> vecs, combos;
  std::vector<int> piv;
  Vec v = v0;
  for (int k = 0; k <= n; ++k) {
    Vec combo(k + 1, 0);
    combo[k] = 1;
    Vec r = v;
    for (size_t i = 0; i < vecs.size(); ++i) {
      const Elem c = r[piv[i]];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        if (vecs[i][j]) r[j] = F.sub(r[j], F.mul(c, vecs[i][j]));
      for (size_t j = 0; j < combos[i].size(); ++j)
        if (combos[i][j]) combo[j] = F.sub(combo[j], F.mul(c, combos[i][j]));
    }
    int p = -1;
    for (int j = 0; j < n; ++j)
      if (r[j]) {
        p = j;
        break;
      }
    if (p < 0) return Poly(std::move(combo));
    const Elem s = F.inv(r[p]);
    for (auto& x : r) x = F.mul(x, s);
    for (auto& x : combo) x = F.mul(x, s);
    vecs.push_back(std::move(r));
    combos.push_back(std::move(combo));
    piv.push_back(p);
    v = vecmul(v, A);
  }
  throw InternalError("Krylov sequence did not terminate");
}

}  // namespace

Matrix add(const Matrix& A, const Matrix& B) {
  same_shape(A, B);
  Matrix C(A.field(), A.n());
  const Field& F = A.field();
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) C(i, j) = F.add(A(i, j), B(i, j));
  return C;
}

Matrix sub(const Matrix& A, const Matrix& B) {
  same_shape(A, B);
  Matrix C(A.field(), A.n());
  const Field& F = A.field();
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) C(i, j) = F.sub(A(i, j), B(i, j));
  return C;
}

Matrix scale(const Matrix& A, Elem c) {
  Matrix C(A.field(), A.n());
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) C(i, j) = A.field().mul(c, A(i, j));
  return C;
}

Matrix mul(const Matrix& A, const Matrix& B) {
  same_shape(A, B);
  const Field& F = A.field();
  const int n = A.n();
  Matrix C(F, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Elem a = A(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) {
        const Elem b = B(k, j);
        if (b) C(i, j) = F.add(C(i, j), F.mul(a, b));
      }
    }
  return C;
}

Matrix pow(const Matrix& A, unsigned e) {
  Matrix R = Matrix::identity(A.field(), A.n()), B = A;
  while (e) {
    if (e & 1) R = mul(R, B);
    e >>= 1;
    if (e) B = mul(B, B);
  }
  return R;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.field(), A.n());
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) T(j, i) = A(i, j);
  return T;
}

bool commutes(const Matrix& A, const Matrix& B) { return mul(A, B) == mul(B, A); }

Vec vecmul(const Vec& v, const Matrix& A) {
  const Field& F = A.field();
  const int n = A.n();
  if (static_cast<int>(v.size()) != n) throw ShapeMismatch("vector length");
  Vec r(n, 0);
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (A(i, j)) r[j] = F.add(r[j], F.mul(v[i], A(i, j)));
  }
  return r;
}

int rank(const Matrix& A) {
  auto r = rows_of(A);
  return static_cast<int>(rref(A.field(), r, A.n()).size());
}

int nullity(const Matrix& A) { return A.n() - rank(A); }

std::vector<Vec> kernel(const Matrix& A) {
  auto basis = right_kernel(A.field(), rows_of(transpose(A)), A.n());
  auto piv = rref(A.field(), basis, A.n());
  (void)piv;
  return basis;
}

Elem det(const Matrix& A) {
  const Field& F = A.field();
  auto a = rows_of(A);
  const int n = A.n();
  Elem d = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col]) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      std::swap(a[p], a[col]);
      d = F.neg(d);
    }
    d = F.mul(d, a[col][col]);
    const Elem s = F.inv(a[col][col]);
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Elem c = F.mul(a[r][col], s);
      for (int j = col; j < n; ++j)
        if (a[col][j]) a[r][j] = F.sub(a[r][j], F.mul(c, a[col][j]));
    }
  }
  return d;
}

Matrix inverse(const Matrix& A) {
  const Field& F = A.field();
  const int n = A.n();
  std::vector<Vec> a(n, Vec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = A(i, j);
    a[i][n + i] = 1;
  }
  auto piv = rref(F, a, n);
  if (static_cast<int>(piv.size()) < n) throw DivisionByZero("singular matrix");
  Matrix R(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = a[i][n + j];
  return R;
}

Matrix conjugate(const Matrix& A, const Matrix& g) { return mul(mul(inverse(g), A), g); }

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw EmptyInput("direct sum of no blocks");
  int n = 0;
  for (const auto& b : blocks) {
    if (b.field() != blocks[0].field()) throw ShapeMismatch("blocks over different fields");
    n += b.n();
  }
  Matrix M(blocks[0].field(), n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.n(); ++i)
      for (int j = 0; j < b.n(); ++j) M(off + i, off + j) = b(i, j);
    off += b.n();
  }
  return M;
}

Matrix kronecker(const Matrix& A, const Matrix& B) {
  if (A.field() != B.field()) throw ShapeMismatch("kronecker over different fields");
  const Field& F = A.field();
  const int a = A.n(), b = B.n();
  Matrix K(F, a * b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      if (A(i, j) == 0) continue;
      for (int k = 0; k < b; ++k)
        for (int l = 0; l < b; ++l) K(i * b + k, j * b + l) = F.mul(A(i, j), B(k, l));
    }
  return K;
}

Matrix block(const Matrix& A, int i, int j, int b) {
  Matrix B(A.field(), b);
  for (int k = 0; k < b; ++k)
    for (int l = 0; l < b; ++l) B(k, l) = A(i * b + k, j * b + l);
  return B;
}

Matrix eval(const Poly& f, const Matrix& A) {
  const Field& F = A.field();
  Matrix R(F, A.n());
  for (int i = f.deg(); i >= 0; --i) {
    R = mul(R, A);
    if (f[i])
      for (int k = 0; k < A.n(); ++k) R(k, k) = F.add(R(k, k), f[i]);
  }
  return R;
}

Matrix jordan(const Field& F, const Partition& l) {
  Matrix J(F, l.size());
  int off = 0;
  for (int h : l.parts()) {
    for (int i = 0; i + 1 < h; ++i) J(off + i, off + i + 1) = 1;
    off += h;
  }
  return J;
}

Matrix companion(const Field& F, const Poly& f) {
  if (f.deg() < 1) throw InvalidDegree("companion of a constant");
  const Poly g = poly::monic(F, f);
  const int d = g.deg();
  Matrix C(F, d);
  for (int i = 0; i + 1 < d; ++i) C(i, i + 1) = 1;
  for (int j = 0; j < d; ++j) C(d - 1, j) = F.neg(g[j]);
  return C;
}

Matrix cyclic_block(const Field& F, const Poly& f, int h) {
  if (!poly::is_irreducible(F, f)) throw NotIrreducible(poly::format(f));
  if (h < 1) throw InvalidDegree("cyclic block height must be positive");
  return companion(F, poly::pow(F, poly::monic(F, f), static_cast<unsigned>(h)));
}

Matrix pk_block(const Matrix& P, int k) {
  if (k < 1) throw InvalidDegree("pk_block needs k >= 1");
  const int d = P.n();
  Matrix M(P.field(), d * k);
  for (int b = 0; b < k; ++b) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) M(b * d + i, b * d + j) = P(i, j);
    if (b + 1 < k)
      for (int i = 0; i < d; ++i) M(b * d + i, (b + 1) * d + i) = 1;
  }
  return M;
}

Matrix class_rep(const CycleType& T) {
  std::vector<Matrix> blocks;
  for (const auto& c : T.components())
    for (int h : c.partition.parts()) blocks.push_back(cyclic_block(T.field(), c.poly, h));
  return direct_sum(blocks);
}

Poly min_poly(const Matrix& A) {
  const Field& F = A.field();
  const int n = A.n();
  Poly m = Poly::constant(1);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    // Skip e_i when m(A) already kills it.
    Vec r(n, 0), p = e;
    for (int k = 0; k <= m.deg(); ++k) {
      if (m[k])
        for (int j = 0; j < n; ++j) r[j] = F.add(r[j], F.mul(m[k], p[j]));
      if (k < m.deg()) p = vecmul(p, A);
    }
    if (std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; })) continue;
    Poly g = local_min_poly(A, e);
    Poly d = poly::gcd(F, m, g);
    m = poly::divmod(F, poly::mul(F, m, g), d).first;
  }
  return poly::monic(F, m);
}

bool is_nilpotent(const Matrix& A) {
  const Poly m = min_poly(A);
  return m == Poly::monomial(m.deg());
}

namespace {

std::vector<int> nullity_sequence(const Matrix& N, int upto) {
  std::vector<int> nu{0};
  Matrix P = Matrix::identity(N.field(), N.n());
  for (int j = 1; j <= upto; ++j) {
    P = mul(P, N);
    nu.push_back(nullity(P));
  }
  return nu;
}

// Parts from nullities nu_0..nu_a of powers, scaled by d.
Partition parts_from_nullities(const std::vector<int>& nu, int d) {
  const int a = static_cast<int>(nu.size()) - 1;
  std::vector<int> parts;
  for (int j = a; j >= 1; --j) {
    const int next = j + 1 <= a ? nu[j + 1] : nu[a];
    const int v = (nu[j] - nu[j - 1]) - (next - nu[j]);
    if (v < 0 || v % d != 0) throw InternalError("inconsistent nullity sequence");
    for (int k = 0; k < v / d; ++k) parts.push_back(j);
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition nilpotent_partition(const Matrix& A) {
  const Poly m = min_poly(A);
  if (m != Poly::monomial(m.deg())) throw NotNilpotent("matrix is not nilpotent");
  return parts_from_nullities(nullity_sequence(A, m.deg()), 1);
}

CycleType cycle_type(const Matrix& A) {
  const Field& F = A.field();
  const Poly m = min_poly(A);
  std::vector<CycleComponent> comps;
  int total = 0;
  for (const auto& [f, a] : poly::factor(F, m)) {
    const Matrix N = eval(f, A);
    Partition l = parts_from_nullities(nullity_sequence(N, a), f.deg());
    total += f.deg() * l.size();
    comps.push_back({f, l});
  }
  if (total != A.n()) throw InternalError("cycle type dimension mismatch");
  return CycleType(F, std::move(comps));
}

ClassType class_type(const Matrix& A) { return cycle_type(A).class_type(); }

Matrix regular_embed(const Matrix& A, const Field& base) {
  const Field& big = A.field();
  if (big.p() != base.p() || big.a() % base.a() != 0)
    throw NotASubfield(base.name() + " in " + big.name());
  const int l = big.a() / base.a();
  const int m = A.n();
  const Embedding& emb = embedding(base, big);
  Matrix R(base, l * m);
  if (l == 1) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) R(i, j) = emb.preimage(A(i, j));
    return R;
  }
  // The modulus root of big generates it over every subfield.
  const SubfieldBasis sb(big, base, static_cast<Elem>(big.p()));
  std::vector<Elem> gp(l);
  gp[0] = 1;
  for (int i = 1; i < l; ++i) gp[i] = big.mul(gp[i - 1], sb.generator());
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      const Elem z = A(u, v);
      if (z == 0) continue;
      for (int i = 0; i < l; ++i) {
        auto c = sb.coords(big.mul(gp[i], z));
        for (int j = 0; j < l; ++j) R(u * l + i, v * l + j) = c[j];
      }
    }
  return R;
}

namespace {

// Block sizes if A is a direct sum of Jordan blocks J(h) in some order.
bool jordan_blocks(const Matrix& A, std::vector<int>& blocks) {
  const int n = A.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Elem x = A(i, j);
      if (j == i + 1) {
        if (x > 1) return false;
      } else if (x) {
        return false;
      }
    }
  blocks.clear();
  int len = 1;
  for (int i = 0; i + 1 < n; ++i) {
    if (A(i, i + 1)) {
      ++len;
    } else {
      blocks.push_back(len);
      len = 1;
    }
  }
  if (n > 0) blocks.push_back(len);
  return true;
}

}  // namespace

std::vector<Matrix> jordan_centralizer_basis(const Field& F, const std::vector<int>& blocks) {
  int n = 0;
  std::vector<int> start;
  for (int b : blocks) {
    start.push_back(n);
    n += b;
  }
  std::vector<Matrix> out;
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = 0; j < blocks.size(); ++j) {
      const int a = blocks[i], b = blocks[j], m = std::min(a, b);
      for (int t = 0; t < m; ++t) {
        Matrix X(F, n);
        for (int r = 0; r < m - t; ++r) X(start[i] + r, start[j] + b - m + t + r) = 1;
        out.push_back(std::move(X));
      }
    }
  return out;
}

std::vector<Matrix> centralizer_basis(const Matrix& A) {
  const Field& F = A.field();
  const int n = A.n();
  std::vector<int> blocks;
  if (jordan_blocks(A, blocks)) return jordan_centralizer_basis(F, blocks);
  // (XA - AX)_{ij} = sum_k X_ik A_kj - A_ik X_kj.
  const int N = n * n;
  std::vector<Vec> eq(N, Vec(N, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec& e = eq[i * n + j];
      for (int k = 0; k < n; ++k) {
        e[i * n + k] = F.add(e[i * n + k], A(k, j));
        e[k * n + j] = F.sub(e[k * n + j], A(i, k));
      }
    }
  std::vector<Matrix> out;
  for (const Vec& v : right_kernel(F, std::move(eq), N)) {
    Matrix X(F, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X(i, j) = v[i * n + j];
    out.push_back(std::move(X));
  }
  return out;
}

Matrix rational_basis(const Matrix& A) {
  const Field& F = A.field();
  const int n = A.n();
  const CycleType ct = cycle_type(A);
  std::vector<Vec> rows;
  for (const auto& comp : ct.components()) {
    const int d = comp.poly.deg();
    const int a = comp.partition.largest();
    const Matrix N = eval(comp.poly, A);
    std::vector<std::vector<Vec>> ker(a + 2);
    Matrix P = Matrix::identity(F, n);
    for (int h = 1; h <= a + 1; ++h) {
      P = mul(P, N);
      ker[h] = kernel(P);
    }
    std::vector<std::pair<Vec, int>> gens;
    for (int h = a; h >= 1; --h) {
      const int need = comp.partition.multiplicity(h);
      if (need == 0) continue;
      Subspace W(F, n);
      for (const Vec& v : ker[h - 1]) W.add(v);
      for (const Vec& v : ker[h + 1]) W.add(vecmul(v, N));
      int got = 0;
      for (const Vec& v : ker[h]) {
        if (got == need) break;
        if (W.contains(v)) continue;
        Vec w = v;
        for (int i = 0; i < d; ++i) {
          W.add(w);
          w = vecmul(w, A);
        }
        gens.emplace_back(v, h);
        ++got;
      }
      if (got != need) throw InternalError("rational basis: missing generator");
    }
    for (const auto& [g, h] : gens) {
      Vec w = g;
      for (int i = 0; i < d * h; ++i) {
        rows.push_back(w);
        w = vecmul(w, A);
      }
    }
  }
  Matrix P = Matrix::from_rows(F, rows);
  if (rank(P) != n) throw InternalError("rational basis is singular");
  return P;
}

CyclicBasis cyclic_basis(const Matrix& A) {
  const Partition l = nilpotent_partition(A);
  const Matrix P = rational_basis(A);
  CyclicBasis cb;
  cb.basis = P;
  int off = 0;
  for (int h : l.parts()) {
    cb.generators.push_back(P.row(off));
    cb.heights.push_back(h);
    off += h;
  }
  return cb;
}

std::map<int, int> simple_module_dims(const Matrix& A) {
  const Partition l = nilpotent_partition(A);
  const Field& F = A.field();
  const int n = A.n();
  const int a = l.largest();
  std::vector<std::vector<Vec>> ker(a + 2);
  Matrix P = Matrix::identity(F, n);
  for (int h = 1; h <= a + 1; ++h) {
    P = mul(P, A);
    ker[h] = kernel(P);
  }
  std::map<int, int> out;
  for (int h = 1; h <= a; ++h) {
    Subspace W(F, n);
    for (const Vec& v : ker[h - 1]) W.add(v);
    for (const Vec& v : ker[h + 1]) W.add(vecmul(v, A));
    const int dim = static_cast<int>(ker[h].size()) - W.dim();
    if (dim) out[h] = dim;
  }
  return out;
}

Matrix conjugating_matrix(const Matrix& A, const Matrix& B) {
  same_shape(A, B);
  if (cycle_type(A) != cycle_type(B)) throw NotSimilar("cycle types differ");
  const Matrix g = mul(inverse(rational_basis(A)), rational_basis(B));
  if (conjugate(A, g) != B) throw InternalError("conjugating matrix failed to verify");
  return g;
}

void write(std::ostream& out, const Matrix& A) {
  out << "field " << A.field().p() << " " << A.field().a() << "\n";
  out << "dim " << A.n() << "\n";
  for (int i = 0; i < A.n(); ++i) {
    for (int j = 0; j < A.n(); ++j) out << (j ? " " : "") << A(i, j);
    out << "\n";
  }
}

Matrix read(std::istream& in) {
  std::string kw;
  long long p = 0, a = 0, n = 0;
  if (!(in >> kw) || kw != "field" || !(in >> p >> a)) throw ParseError("expected 'field <p> <a>'");
  if (p < 2 || a < 1 || p > static_cast<long long>(kMaxFieldSize) || a > 20) throw ParseError("bad field line");
  const Field F = Field::make(static_cast<int>(p), static_cast<int>(a));
  if (!(in >> kw) || kw != "dim" || !(in >> n)) throw ParseError("expected 'dim <n>'");
  if (n < 1 || n > 4096) throw ParseError("bad dimension");
  Matrix M(F, static_cast<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long x;
      if (!(in >> x)) throw ParseError("missing matrix entry");
      if (x < 0 || x >= static_cast<long long>(F.q())) throw ParseError("entry out of range: " + std::to_string(x));
      M(i, j) = static_cast<Elem>(x);
    }
  return M;
}

Matrix read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read(in);
}

void write_file(const std::string& path, const Matrix& A) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write(out, A);
}

}  // namespace mat
}  // namespace fqc
