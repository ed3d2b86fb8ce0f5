#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fqc/gf.hpp"
#include "fqc/partition.hpp"
#include "fqc/poly.hpp"
#include "fqc/types.hpp"

namespace fqc {

using Vec = std::vector<Elem>;

// Dense square matrix over a finite field.  Matrices act on row vectors:
// v -> vM.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& F, int n) : F_(F), n_(n), a_(static_cast<size_t>(n) * n, 0) {}
  static Matrix identity(const Field& F, int n);
  static Matrix scalar(const Field& F, int n, Elem c);
  // Rows given as vectors of length n.
  static Matrix from_rows(const Field& F, const std::vector<Vec>& rows);

  const Field& field() const { return F_; }
  int n() const { return n_; }
  Elem operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  Elem& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  Vec row(int i) const;
  const std::vector<Elem>& data() const { return a_; }
  bool is_zero() const;

  bool operator==(const Matrix& o) const { return n_ == o.n_ && F_ == o.F_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field F_;
  int n_ = 0;
  std::vector<Elem> a_;
};

namespace mat {

Matrix add(const Matrix& A, const Matrix& B);
Matrix sub(const Matrix& A, const Matrix& B);
Matrix scale(const Matrix& A, Elem c);
Matrix mul(const Matrix& A, const Matrix& B);
Matrix pow(const Matrix& A, unsigned e);
Matrix transpose(const Matrix& A);
bool commutes(const Matrix& A, const Matrix& B);
// vA.
Vec vecmul(const Vec& v, const Matrix& A);

int rank(const Matrix& A);
int nullity(const Matrix& A);
// Basis of {v : vA = 0}, in reduced echelon form.
std::vector<Vec> kernel(const Matrix& A);
Elem det(const Matrix& A);
// Throws DivisionByZero if A is singular.
Matrix inverse(const Matrix& A);
// g^{-1} A g.
Matrix conjugate(const Matrix& A, const Matrix& g);

Matrix direct_sum(const std::vector<Matrix>& blocks);
Matrix kronecker(const Matrix& A, const Matrix& B);
// Block (i, j) of size b, as a b x b matrix.
Matrix block(const Matrix& A, int i, int j, int b);

// f(A).
Matrix eval(const Poly& f, const Matrix& A);

// J(λ): Jordan blocks with 1 on the superdiagonal.
Matrix jordan(const Field& F, const Partition& l);
// Companion matrix: e_i -> e_{i+1}, e_{d-1} -> -(c_0 e_0 + ... + c_{d-1} e_{d-1}).
Matrix companion(const Field& F, const Poly& f);
// Companion of f^h; throws NotIrreducible for reducible f.
Matrix cyclic_block(const Field& F, const Poly& f, int h);
// P on the diagonal, I on the superdiagonal, k blocks.
Matrix pk_block(const Matrix& P, int k);
Matrix class_rep(const CycleType& T);

Poly min_poly(const Matrix& A);
// Throws NotNilpotent.
Partition nilpotent_partition(const Matrix& A);
bool is_nilpotent(const Matrix& A);
CycleType cycle_type(const Matrix& A);
ClassType class_type(const Matrix& A);

// The algebra map Mat_m(F_{q^l}) -> Mat_{lm}(F_q) given by a basis of
// F_{q^l} over F_q; base must be a subfield of A's field.
Matrix regular_embed(const Matrix& A, const Field& base);

// Basis of {X : XA = AX}.
std::vector<Matrix> centralizer_basis(const Matrix& A);
// Basis of the centralizer of a direct sum of Jordan blocks of the given
// sizes: for blocks i, j and t < min(h_i, h_j), the map sending the chain of
// block i onto the last min(h_i, h_j) - t vectors of block j.
std::vector<Matrix> jordan_centralizer_basis(const Field& F, const std::vector<int>& blocks);

// Rows form a basis in which A is class_rep(cycle_type(A)); P A P^{-1} is
// that representative.
Matrix rational_basis(const Matrix& A);

struct CyclicBasis {
  std::vector<Vec> generators;  // cyclic vectors v_i
  std::vector<int> heights;     // h_i, weakly decreasing
  Matrix basis;                 // rows v_i A^j, 0 <= j < h_i, grouped per i
};
// Throws NotNilpotent.
CyclicBasis cyclic_basis(const Matrix& A);

// h -> dim ker A^h / (ker A^{h+1} A + ker A^{h-1}) for each part size h.
std::map<int, int> simple_module_dims(const Matrix& A);

// g with g^{-1} A g = B; throws NotSimilar.
Matrix conjugating_matrix(const Matrix& A, const Matrix& B);

// File format: "field p a", "dim n", then n rows of encodings.
void write(std::ostream& out, const Matrix& A);
Matrix read(std::istream& in);
Matrix read_file(const std::string& path);
void write_file(const std::string& path, const Matrix& A);

}  // namespace mat

// Row-space bookkeeping in echelon form.
class Subspace {
 public:
  Subspace(const Field& F, int n) : F_(F), n_(n) {}
  int dim() const { return static_cast<int>(rows_.size()); }
  // Adds v; returns false if it was already in the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  Vec reduce(Vec v) const;
  Field F_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace fqc
