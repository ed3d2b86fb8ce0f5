#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqc/gf.hpp"

namespace fqc {

// Univariate polynomial with coefficients in some Field, ascending degree,
// no trailing zeros.  The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly x() { return Poly(std::vector<Elem>{0, 1}); }
  static Poly monomial(int k, Elem c = 1);
  static Poly x_minus(const Field& F, Elem a);

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

// Encoding order: by degree, then coefficients from the top down.
bool encoding_less(const Poly& f, const Poly& g);

namespace poly {

Poly add(const Field& F, const Poly& f, const Poly& g);
Poly sub(const Field& F, const Poly& f, const Poly& g);
Poly neg(const Field& F, const Poly& f);
Poly scale(const Field& F, const Poly& f, Elem c);
Poly mul(const Field& F, const Poly& f, const Poly& g);
Poly pow(const Field& F, const Poly& f, unsigned e);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& f, const Poly& g);
Poly mod(const Field& F, const Poly& f, const Poly& g);
Poly mulmod(const Field& F, const Poly& f, const Poly& g, const Poly& m);
Poly powmod(const Field& F, const Poly& f, std::uint64_t e, const Poly& m);
Poly monic(const Field& F, const Poly& f);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, const Poly& f, const Poly& g);
// Returns (g, s, t) with s f + t g = gcd monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Field& F, const Poly& f, const Poly& g);
// f^{-1} mod m; throws NotCoprime.
Poly inverse_mod(const Field& F, const Poly& f, const Poly& m);
Elem eval(const Field& F, const Poly& f, Elem x);
// f o g.
Poly compose(const Field& F, const Poly& f, const Poly& g);
Poly derivative(const Field& F, const Poly& f);

bool is_irreducible(const Field& F, const Poly& f);

// Number of monic irreducibles of degree d over F_q (Moebius count).
std::uint64_t count_irreducibles(std::uint64_t q, int d);

// All monic irreducibles of degree d, sorted by encoding.  `limit` stops
// after that many have been found (0 = no limit).
std::vector<Poly> enumerate_irreducibles(const Field& F, int d, std::size_t limit = 0);

// (1/(d(q-1))) sum over k | d with theta a k-th power of
// mu(k) hcf(q-1,k) (q^{d/k} - 1).
std::uint64_t count_irreducibles_with_constant(const Field& F, int d, Elem theta);

struct Factor {
  Poly f;
  int mult;
};
// Factorization of the monic associate of f; factors sorted by encoding.
// The unit (leading coefficient) is returned through `unit` when given.
std::vector<Factor> factor(const Field& F, const Poly& f, Elem* unit = nullptr);

// Minimum polynomial over base of an element of big.
Poly min_poly_of_element(const Field& big, Elem x, const Field& base);

// F with F = F_i mod m_i for all i; deg F < sum deg m_i.
Poly crt_combine(const Field& F, const std::vector<std::pair<Poly, Poly>>& pairs);

// Text form: terms `c*x^k`, `1*` omitted, e.g. `x^3+x+1`.
std::string format(const Poly& f);
Poly parse(const Field& F, const std::string& text);

}  // namespace poly

long long moebius(long long n);
std::vector<long long> divisors(long long n);

}  // namespace fqc
