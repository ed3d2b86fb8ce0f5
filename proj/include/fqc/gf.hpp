#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fqc/error.hpp"

namespace fqc {

// An element of F_{p^a}: the base-p digits of the integer are the
// coefficients of the element in the power basis of the modulus root,
// constant coefficient least significant.
using Elem = std::uint32_t;

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

namespace detail {
struct FieldData;
}

// The field F_{p^a} defined by the least-encoded monic irreducible of
// degree a over F_p.  Cheap to copy; instances for the same (p, a) share
// their tables.
class Field {
 public:
  Field() = default;

  static Field make(int p, int a);
  // Parses "p^a" (or a bare prime "p").
  static Field parse(const std::string& text);

  bool valid() const { return d_ != nullptr; }
  int p() const;
  int a() const;
  Elem q() const;
  std::string name() const;  // "p^a"
  // Coefficients over F_p, ascending, length a + 1, monic.
  const std::vector<int>& modulus() const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const;
  Elem frobenius(Elem x) const { return pow(x, static_cast<std::uint64_t>(p())); }
  // Least-encoded element of multiplicative order q - 1.
  Elem generator() const;
  // Discrete log to the base generator(); x must be nonzero.
  std::uint32_t log(Elem x) const;
  Elem exp(std::uint64_t k) const;
  // Image of an integer in the prime field.
  Elem from_int(long long v) const;
  bool contains(Elem x) const { return x < q(); }
  // Multiplicative order of a nonzero element.
  std::uint64_t order(Elem x) const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

namespace detail {
struct FieldData {
  int p = 0;
  int a = 0;
  Elem q = 0;
  std::vector<int> modulus;
  Elem generator = 0;
  std::vector<Elem> exp;           // length 2(q-1)
  std::vector<std::uint32_t> log;  // length q, log[0] unused
  // Full tables for q <= 256.
  std::vector<std::uint8_t> add_tab;
  std::vector<std::uint8_t> mul_tab;
};
}  // namespace detail

inline int Field::p() const { return d_->p; }
inline int Field::a() const { return d_->a; }
inline Elem Field::q() const { return d_->q; }
inline const std::vector<int>& Field::modulus() const { return d_->modulus; }
inline Elem Field::generator() const { return d_->generator; }

inline Elem Field::add(Elem x, Elem y) const {
  const auto& d = *d_;
  if (d.p == 2) return x ^ y;
  if (!d.add_tab.empty()) return d.add_tab[x * d.q + y];
  if (d.a == 1) return (x + y) % static_cast<Elem>(d.p);
  Elem r = 0, scale = 1;
  const Elem p = static_cast<Elem>(d.p);
  while (x || y) {
    r += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return r;
}

inline Elem Field::neg(Elem x) const {
  const auto& d = *d_;
  if (d.p == 2) return x;
  if (d.a == 1) return x == 0 ? 0 : static_cast<Elem>(d.p) - x;
  Elem r = 0, scale = 1;
  const Elem p = static_cast<Elem>(d.p);
  while (x) {
    Elem c = x % p;
    r += (c == 0 ? 0 : p - c) * scale;
    x /= p;
    scale *= p;
  }
  return r;
}

inline Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

inline Elem Field::mul(Elem x, Elem y) const {
  const auto& d = *d_;
  if (!d.mul_tab.empty()) return d.mul_tab[x * d.q + y];
  if (x == 0 || y == 0) return 0;
  return d.exp[d.log[x] + d.log[y]];
}

inline Elem Field::inv(Elem x) const {
  if (x == 0) throw DivisionByZero("inverse of zero");
  const auto& d = *d_;
  if (x == 1) return 1;
  return d.exp[(d.q - 1) - d.log[x]];
}

inline std::uint32_t Field::log(Elem x) const {
  if (x == 0) throw DivisionByZero("log of zero");
  return d_->log[x];
}

inline Elem Field::exp(std::uint64_t k) const {
  return d_->exp[k % (d_->q - 1)];
}

// Field embedding small -> big fixing the prime field; the modulus root of
// small goes to the least-encoded root of small's modulus in big.
class Embedding {
 public:
  Embedding(const Field& small, const Field& big);
  const Field& small() const { return small_; }
  const Field& big() const { return big_; }
  Elem operator()(Elem x) const { return image_.at(x); }
  bool in_image(Elem y) const { return preimage_.at(y) != kNone; }
  // Inverse on the image; throws NotASubfield outside it.
  Elem preimage(Elem y) const;

 private:
  static constexpr Elem kNone = 0xffffffffu;
  Field small_, big_;
  std::vector<Elem> image_;
  std::vector<Elem> preimage_;
};

// Shared, cached embedding for a (small, big) pair.
const Embedding& embedding(const Field& small, const Field& big);

// x^{1 + q + ... + q^{d-1}} for x in big = F_{q^d}, returned in base = F_q.
Elem norm(const Field& big, Elem x, const Field& base);

// {x^k : x in F}, sorted.
std::vector<Elem> kth_powers(const Field& F, std::uint64_t k);

// Degree of x over the subfield base (size of its Frobenius orbit).
int degree_over(const Field& big, Elem x, const Field& base);

// Coordinates of elements of big over a subfield base with respect to the
// basis 1, g, ..., g^{l-1} of a generator g of big over base.
class SubfieldBasis {
 public:
  SubfieldBasis(const Field& big, const Field& base, Elem gen);
  int degree() const { return l_; }
  Elem generator() const { return gen_; }
  // Returns l coefficients in base.
  std::vector<Elem> coords(Elem x) const;
  Elem combine(const std::vector<Elem>& coeffs) const;

 private:
  Field big_, base_;
  Elem gen_;
  int l_;
  // Inverse of the A x A matrix over F_p taking digit vectors to the
  // coefficient layout (basis index, base digit).
  std::vector<std::vector<int>> inv_;
};

bool is_prime(long long n);

}  // namespace fqc
