#include "fqc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace fqc {

Poly Poly::monomial(int k, Elem c) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::x_minus(const Field& F, Elem a) { return Poly(std::vector<Elem>{F.neg(a), 1}); }

bool encoding_less(const Poly& f, const Poly& g) {
  if (f.deg() != g.deg()) return f.deg() < g.deg();
  for (int i = f.deg(); i >= 0; --i)
    if (f[i] != g[i]) return f[i] < g[i];
  return false;
}

long long moebius(long long n) {
  long long r = 1;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace poly {

Poly add(const Field& F, const Poly& f, const Poly& g) {
  const int n = std::max(f.deg(), g.deg()) + 1;
  std::vector<Elem> r(n);
  for (int i = 0; i < n; ++i) r[i] = F.add(f[i], g[i]);
  return Poly(std::move(r));
}

Poly neg(const Field& F, const Poly& f) {
  std::vector<Elem> r(f.coeffs());
  for (auto& c : r) c = F.neg(c);
  return Poly(std::move(r));
}

Poly sub(const Field& F, const Poly& f, const Poly& g) { return add(F, f, neg(F, g)); }

Poly scale(const Field& F, const Poly& f, Elem c) {
  std::vector<Elem> r(f.coeffs());
  for (auto& x : r) x = F.mul(x, c);
  return Poly(std::move(r));
}

Poly mul(const Field& F, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  std::vector<Elem> r(f.deg() + g.deg() + 1, 0);
  for (int i = 0; i <= f.deg(); ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; j <= g.deg(); ++j) r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  return Poly(std::move(r));
}

Poly pow(const Field& F, const Poly& f, unsigned e) {
  Poly r = Poly::constant(1), b = f;
  while (e) {
    if (e & 1) r = mul(F, r, b);
    e >>= 1;
    if (e) b = mul(F, b, b);
  }
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.deg() < g.deg()) return {Poly(), f};
  std::vector<Elem> r(f.coeffs());
  std::vector<Elem> qt(f.deg() - g.deg() + 1, 0);
  const Elem li = F.inv(g.lead());
  const int dg = g.deg();
  for (int k = f.deg(); k >= dg; --k) {
    const Elem c = F.mul(r[k], li);
    if (c == 0) continue;
    qt[k - dg] = c;
    for (int i = 0; i <= dg; ++i) r[k - dg + i] = F.sub(r[k - dg + i], F.mul(c, g[i]));
  }
  r.resize(dg);
  return {Poly(std::move(qt)), Poly(std::move(r))};
}

Poly mod(const Field& F, const Poly& f, const Poly& g) { return divmod(F, f, g).second; }

Poly mulmod(const Field& F, const Poly& f, const Poly& g, const Poly& m) {
  return mod(F, mul(F, f, g), m);
}

Poly powmod(const Field& F, const Poly& f, std::uint64_t e, const Poly& m) {
  Poly r = mod(F, Poly::constant(1), m), b = mod(F, f, m);
  while (e) {
    if (e & 1) r = mulmod(F, r, b, m);
    e >>= 1;
    if (e) b = mulmod(F, b, b, m);
  }
  return r;
}

Poly monic(const Field& F, const Poly& f) {
  if (f.is_zero()) return f;
  return scale(F, f, F.inv(f.lead()));
}

Poly gcd(const Field& F, const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

XGcd xgcd(const Field& F, const Poly& f, const Poly& g) {
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [qt, r] = divmod(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, qt, s1));
    Poly t2 = sub(F, t0, mul(F, qt, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = F.inv(r0.lead());
  return {scale(F, r0, li), scale(F, s0, li), scale(F, t0, li)};
}

Poly inverse_mod(const Field& F, const Poly& f, const Poly& m) {
  XGcd x = xgcd(F, mod(F, f, m), m);
  if (x.g.deg() != 0) throw NotCoprime("polynomial not invertible modulo m");
  return mod(F, x.s, m);
}

Elem eval(const Field& F, const Poly& f, Elem x) {
  Elem acc = 0;
  for (int i = f.deg(); i >= 0; --i) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

Poly compose(const Field& F, const Poly& f, const Poly& g) {
  Poly acc;
  for (int i = f.deg(); i >= 0; --i) acc = add(F, mul(F, acc, g), Poly::constant(f[i]));
  return acc;
}

Poly derivative(const Field& F, const Poly& f) {
  if (f.deg() <= 0) return Poly();
  std::vector<Elem> r(f.deg());
  for (int i = 1; i <= f.deg(); ++i) r[i - 1] = F.mul(F.from_int(i), f[i]);
  return Poly(std::move(r));
}

namespace {

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// x^{q^k} mod f for k = 0..d.
std::vector<Poly> frobenius_powers(const Field& F, const Poly& f, int d) {
  std::vector<Poly> out(d + 1);
  out[0] = mod(F, Poly::x(), f);
  for (int k = 1; k <= d; ++k) out[k] = powmod(F, out[k - 1], F.q(), f);
  return out;
}

// Kernel of a square matrix (rows are vectors) acting on row vectors.
std::vector<std::vector<Elem>> left_kernel(const Field& F, std::vector<std::vector<Elem>> m) {
  const int n = static_cast<int>(m.size());
  // Solve v m = 0: transpose and compute the right kernel.
  std::vector<std::vector<Elem>> a(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[j][i];
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    const Elem s = F.inv(a[row][col]);
    for (auto& x : a[row]) x = F.mul(x, s);
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Elem c = a[r][col];
      for (int j = 0; j < n; ++j) a[r][j] = F.sub(a[r][j], F.mul(c, a[row][j]));
    }
    pivcol.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(n, false);
  for (int c : pivcol) is_piv[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = F.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits a monic squarefree polynomial into irreducibles (Berlekamp).
std::vector<Poly> berlekamp(const Field& F, const Poly& g) {
  const int n = g.deg();
  if (n <= 1) return {g};
  std::vector<std::vector<Elem>> Q(n, std::vector<Elem>(n, 0));
  const Poly xq = powmod(F, Poly::x(), F.q(), g);
  Poly cur = Poly::constant(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) Q[i][j] = cur[j];
    Q[i][i] = F.sub(Q[i][i], 1);
    cur = mulmod(F, cur, xq, g);
  }
  auto kernel = left_kernel(F, Q);
  const size_t r = kernel.size();
  std::vector<Poly> parts{g};
  for (const auto& v : kernel) {
    if (parts.size() == r) break;
    const Poly h(v);
    if (h.deg() <= 0) continue;
    std::vector<Poly> next;
    for (const Poly& u : parts) {
      if (u.deg() <= 1) {
        next.push_back(u);
        continue;
      }
      Poly rest = u;
      for (Elem c = 0; c < F.q() && rest.deg() > 0; ++c) {
        Poly d = gcd(F, rest, sub(F, h, Poly::constant(c)));
        if (d.deg() > 0 && d.deg() < rest.deg()) {
          next.push_back(d);
          rest = divmod(F, rest, d).first;
        } else if (d.deg() == rest.deg()) {
          break;
        }
      }
      if (rest.deg() > 0) next.push_back(monic(F, rest));
    }
    parts = std::move(next);
  }
  return parts;
}

Poly pth_root(const Field& F, const Poly& c) {
  const int p = F.p();
  std::vector<Elem> r(c.deg() / p + 1, 0);
  const std::uint64_t e = F.q() / static_cast<std::uint64_t>(p);
  for (int i = 0; i <= c.deg(); i += p) r[i / p] = F.pow(c[i], e);
  return Poly(std::move(r));
}

void squarefree(const Field& F, const Poly& f, int scale_mult, std::vector<Factor>& out) {
  if (f.deg() <= 0) return;
  Poly c = gcd(F, f, derivative(F, f));
  Poly w = divmod(F, f, c).first;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(F, w, c);
    Poly z = divmod(F, w, y).first;
    if (z.deg() > 0) out.push_back({monic(F, z), i * scale_mult});
    ++i;
    w = y;
    c = divmod(F, c, y).first;
  }
  if (c.deg() > 0) squarefree(F, pth_root(F, monic(F, c)), scale_mult * F.p(), out);
}

}  // namespace

bool is_irreducible(const Field& F, const Poly& f) {
  if (f.deg() < 1) throw InvalidDegree("irreducibility of a constant");
  const int d = f.deg();
  if (d == 1) return true;
  const Poly g = monic(F, f);
  if (g[0] == 0) return false;
  auto fr = frobenius_powers(F, g, d);
  if (fr[d] != mod(F, Poly::x(), g)) return false;
  for (long long r : prime_divisors(d)) {
    Poly h = sub(F, fr[d / r], Poly::x());
    if (gcd(F, g, h).deg() != 0) return false;
  }
  return true;
}

std::uint64_t count_irreducibles(std::uint64_t q, int d) {
  __int128 s = 0;
  for (long long e : divisors(d)) {
    __int128 t = 1;
    for (long long i = 0; i < d / e; ++i) t *= q;
    s += moebius(e) * t;
  }
  return static_cast<std::uint64_t>(s / d);
}

std::vector<Poly> enumerate_irreducibles(const Field& F, int d, std::size_t limit) {
  if (d < 1) throw InvalidDegree("degree must be positive");
  std::vector<Poly> out;
  const Elem q = F.q();
  std::vector<Elem> c(d + 1, 0);
  c[d] = 1;
  while (true) {
    if (d == 1 || c[0] != 0) {
      Poly f(c);
      if (is_irreducible(F, f)) {
        out.push_back(f);
        if (limit && out.size() >= limit) break;
      }
    }
    int i = 0;
    while (i < d && ++c[i] == q) c[i++] = 0;
    if (i == d) break;
  }
  return out;
}

std::uint64_t count_irreducibles_with_constant(const Field& F, int d, Elem theta) {
  if (d < 1) throw InvalidDegree("degree must be positive");
  if (theta == 0) throw InvalidConstantTerm("constant term must be nonzero");
  const long long q = F.q();
  __int128 s = 0;
  for (long long k : divisors(d)) {
    auto S = kth_powers(F, static_cast<std::uint64_t>(k));
    if (!std::binary_search(S.begin(), S.end(), theta)) continue;
    __int128 t = 1;
    for (long long i = 0; i < d / k; ++i) t *= q;
    s += static_cast<__int128>(moebius(k)) * std::gcd(q - 1, k) * (t - 1);
  }
  const __int128 den = static_cast<__int128>(d) * (q - 1);
  if (s % den != 0) throw InternalError("non-integral irreducible count");
  return static_cast<std::uint64_t>(s / den);
}

std::vector<Factor> factor(const Field& F, const Poly& f, Elem* unit) {
  if (f.is_zero()) throw DivisionByZero("factorization of zero");
  if (unit) *unit = f.lead();
  std::vector<Factor> sqf;
  squarefree(F, monic(F, f), 1, sqf);
  std::vector<Factor> out;
  for (const auto& [g, m] : sqf)
    for (Poly& h : berlekamp(F, g)) out.push_back({monic(F, h), m});
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return encoding_less(a.f, b.f); });
  // The same irreducible never appears in two squarefree layers, but merge
  // defensively.
  std::vector<Factor> merged;
  for (auto& fa : out) {
    if (!merged.empty() && merged.back().f == fa.f)
      merged.back().mult += fa.mult;
    else
      merged.push_back(fa);
  }
  return merged;
}

Poly min_poly_of_element(const Field& big, Elem x, const Field& base) {
  const Embedding& e = embedding(base, big);
  Poly acc = Poly::constant(1);
  Elem y = x;
  do {
    acc = mul(big, acc, Poly::x_minus(big, y));
    y = big.pow(y, base.q());
  } while (y != x);
  std::vector<Elem> c(acc.deg() + 1);
  for (int i = 0; i <= acc.deg(); ++i) c[i] = e.preimage(acc[i]);
  return Poly(std::move(c));
}

Poly crt_combine(const Field& F, const std::vector<std::pair<Poly, Poly>>& pairs) {
  if (pairs.empty()) return Poly();
  Poly acc = mod(F, pairs[0].first, pairs[0].second);
  Poly m = pairs[0].second;
  for (size_t i = 1; i < pairs.size(); ++i) {
    const auto& [fi, mi] = pairs[i];
    XGcd x = xgcd(F, m, mi);
    if (x.g.deg() != 0) throw NotCoprime("CRT moduli are not coprime");
    // acc + m * s * (fi - acc)  (mod m * mi), since s m = 1 mod mi
    Poly diff = sub(F, fi, acc);
    Poly step = mul(F, m, mod(F, mul(F, x.s, diff), mi));
    m = mul(F, m, mi);
    acc = mod(F, add(F, acc, step), m);
  }
  return acc;
}

std::string format(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.deg(); k >= 0; --k) {
    const Elem c = f[k];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly parse(const Field& F, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  auto bad = [&](const std::string& why) { return ParseError("polynomial '" + text + "': " + why); };
  auto read_uint = [&](size_t& i) -> unsigned long long {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw bad("expected a number");
    unsigned long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned>(s[i] - '0');
      if (v > (1ull << 40)) throw bad("number too large");
      ++i;
    }
    return v;
  };
  std::vector<Elem> c;
  size_t i = 0;
  while (i < s.size()) {
    unsigned long long coef = 1, k = 0;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = read_uint(i);
      has_coef = true;
    }
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) throw bad("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'x') throw bad("expected x after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        k = read_uint(i);
      }
    } else if (!has_coef) {
      throw bad("expected a term");
    }
    if (coef >= F.q()) throw bad("coefficient out of range");
    if (k > 4096) throw bad("degree too large");
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] = F.add(c[k], static_cast<Elem>(coef));
    if (i < s.size()) {
      if (s[i] != '+') throw bad(std::string("unexpected '") + s[i] + "'");
      ++i;
      if (i >= s.size()) throw bad("trailing '+'");
    }
  }
  return Poly(std::move(c));
}

}  // namespace poly
}  // namespace fqc
