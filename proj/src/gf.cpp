#include "fqc/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace fqc {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Digits = std::vector<int>;

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- polynomials over F_p as ascending int vectors ------------------------

void trim(Digits& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int inv_mod(int x, int p) {
  int r = 1, b = x % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Digits pmod(Digits f, const Digits& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  const int li = inv_mod(g.back(), p);
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int c = f.back() * li % p;
    for (int i = 0; i <= dg; ++i)
      f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    trim(f);
  }
  return f;
}

Digits pmulmod(const Digits& f, const Digits& g, const Digits& m, int p) {
  if (f.empty() || g.empty()) return {};
  Digits r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
  return pmod(std::move(r), m, p);
}

Digits ppowmod(Digits b, long long e, const Digits& m, int p) {
  Digits r{1};
  b = pmod(b, m, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, b, m, p);
    b = pmulmod(b, b, m, p);
    e >>= 1;
  }
  return r;
}

Digits pgcd(Digits f, Digits g, int p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Digits r = pmod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// Rabin's test for a monic f of degree a over F_p.
bool prime_field_irreducible(const Digits& f, int p) {
  const int a = static_cast<int>(f.size()) - 1;
  if (a == 1) return true;
  const Digits x{0, 1};
  // x^{p^k} mod f for k = 0..a
  std::vector<Digits> frob(a + 1);
  frob[0] = pmod(x, f, p);
  for (int k = 1; k <= a; ++k) frob[k] = ppowmod(frob[k - 1], p, f, p);
  auto minus_x = [&](Digits h) {
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = (h[1] - 1 + p) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frob[a]).empty()) return false;
  for (long long r : prime_factors(a)) {
    Digits g = pgcd(f, minus_x(frob[a / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// --- elements as digit vectors, used only while building tables ------------

Digits to_digits(Elem x, int p, int a) {
  Digits d(a, 0);
  for (int i = 0; i < a; ++i) {
    d[i] = static_cast<int>(x % p);
    x /= p;
  }
  return d;
}

Elem from_digits(const Digits& d, int p) {
  Elem r = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) r = r * p + d[i];
  return r;
}

struct SlowField {
  int p, a;
  Digits mod;
  Elem mul(Elem x, Elem y) const {
    if (a == 1) return static_cast<Elem>((static_cast<long long>(x) * y) % p);
    Digits r = pmulmod(to_digits(x, p, a), to_digits(y, p, a), mod, p);
    r.resize(a, 0);
    return from_digits(r, p);
  }
  Elem pow(Elem x, long long e) const {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
};

std::shared_ptr<detail::FieldData> build_field(int p, int a) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->a = a;
  Elem q = 1;
  for (int i = 0; i < a; ++i) q *= static_cast<Elem>(p);
  d->q = q;

  // Least-encoded monic irreducible of degree a.
  if (a == 1) {
    d->modulus = {0, 1};
  } else {
    for (Elem low = 0; low < q; ++low) {
      Digits f = to_digits(low, p, a);
      f.push_back(1);
      if (f[0] == 0) continue;
      if (prime_field_irreducible(f, p)) {
        d->modulus = f;
        break;
      }
    }
  }
  SlowField slow{p, a, d->modulus};

  // Least-encoded primitive element.
  const long long n = static_cast<long long>(q) - 1;
  const auto factors = prime_factors(n);
  Elem g = 1;
  for (Elem c = 1; c < q; ++c) {
    bool ok = true;
    for (long long r : factors)
      if (slow.pow(c, n / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = c;
      break;
    }
  }
  d->generator = g;

  // Multiplication by g as an F_p-linear map on digit vectors.
  std::vector<Digits> gx(a);
  for (int i = 0; i < a; ++i) {
    Elem xi = 1;
    for (int k = 0; k < i; ++k) xi *= static_cast<Elem>(p);
    gx[i] = to_digits(slow.mul(g, xi), p, a);
  }
  d->exp.assign(2 * static_cast<size_t>(n) + 2, 0);
  d->log.assign(q, 0);
  Elem cur = 1;
  Digits acc(a);
  for (long long k = 0; k < n; ++k) {
    d->exp[k] = cur;
    d->log[cur] = static_cast<std::uint32_t>(k);
    Digits cd = to_digits(cur, p, a);
    std::fill(acc.begin(), acc.end(), 0);
    for (int i = 0; i < a; ++i)
      if (cd[i])
        for (int j = 0; j < a; ++j) acc[j] = (acc[j] + cd[i] * gx[i][j]) % p;
    cur = from_digits(acc, p);
  }
  for (size_t k = n; k < d->exp.size(); ++k) d->exp[k] = d->exp[k - n];

  if (q <= 256) {
    d->add_tab.resize(static_cast<size_t>(q) * q);
    d->mul_tab.resize(static_cast<size_t>(q) * q);
    for (Elem x = 0; x < q; ++x)
      for (Elem y = 0; y < q; ++y) {
        Digits dx = to_digits(x, p, a), dy = to_digits(y, p, a);
        for (int i = 0; i < a; ++i) dx[i] = (dx[i] + dy[i]) % p;
        d->add_tab[x * q + y] = static_cast<std::uint8_t>(from_digits(dx, p));
        d->mul_tab[x * q + y] = static_cast<std::uint8_t>(
            (x == 0 || y == 0) ? 0 : d->exp[d->log[x] + d->log[y]]);
      }
  }
  return d;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Field Field::make(int p, int a) {
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  if (a < 1) throw InvalidField("extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < a; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldSize) throw InvalidField("field size exceeds 2^20");
  }
  static std::map<std::pair<int, int>, std::shared_ptr<const detail::FieldData>> cache;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_pair(p, a);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_field(p, a)).first;
  return Field(it->second);
}

Field Field::parse(const std::string& text) {
  int p = 0, a = 1;
  char caret = 0;
  std::istringstream in(text);
  if (!(in >> p)) throw ParseError("field '" + text + "': expected p^a");
  if (in >> caret) {
    if (caret != '^' || !(in >> a)) throw ParseError("field '" + text + "': expected p^a");
    std::string rest;
    if (in >> rest) throw ParseError("field '" + text + "': trailing text");
  }
  return make(p, a);
}

std::string Field::name() const { return std::to_string(p()) + "^" + std::to_string(a()); }

bool Field::operator==(const Field& o) const {
  if (!d_ || !o.d_) return d_ == o.d_;
  return d_->p == o.d_->p && d_->a == o.d_->a;
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const std::uint64_t n = q() - 1;
  return d_->exp[(static_cast<std::uint64_t>(d_->log[x]) * (e % n)) % n];
}

Elem Field::from_int(long long v) const {
  long long r = v % p();
  if (r < 0) r += p();
  return static_cast<Elem>(r);
}

std::uint64_t Field::order(Elem x) const {
  if (x == 0) throw DivisionByZero("order of zero");
  const std::uint64_t n = q() - 1;
  return n / std::gcd<std::uint64_t>(n, log(x));
}

// --- embeddings -------------------------------------------------------------

Embedding::Embedding(const Field& small, const Field& big) : small_(small), big_(big) {
  if (small.p() != big.p() || big.a() % small.a() != 0)
    throw NotASubfield(small.name() + " is not a subfield of " + big.name());
  const auto& f = small.modulus();
  Elem root = 0;
  if (small.a() > 1) {
    bool found = false;
    for (Elem y = 0; y < big.q() && !found; ++y) {
      Elem acc = 0;
      for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        acc = big.add(big.mul(acc, y), static_cast<Elem>(f[i]));
      if (acc == 0) {
        root = y;
        found = true;
      }
    }
    if (!found) throw InternalError("no root of subfield modulus");
  }
  std::vector<Elem> powers(small.a());
  Elem cur = 1;
  for (int i = 0; i < small.a(); ++i) {
    powers[i] = cur;
    cur = big.mul(cur, root);
  }
  image_.assign(small.q(), 0);
  preimage_.assign(big.q(), kNone);
  const Elem p = static_cast<Elem>(small.p());
  for (Elem x = 0; x < small.q(); ++x) {
    Elem acc = 0, t = x;
    for (int i = 0; i < small.a(); ++i) {
      const Elem c = t % p;
      t /= p;
      if (c) acc = big.add(acc, big.mul(c, powers[i]));
    }
    image_[x] = acc;
    preimage_[acc] = x;
  }
}

Elem Embedding::preimage(Elem y) const {
  const Elem r = preimage_.at(y);
  if (r == kNone) throw NotASubfield("element not in subfield image");
  return r;
}

const Embedding& embedding(const Field& small, const Field& big) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Embedding>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(small.p(), small.a(), big.a());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Embedding>(small, big)).first;
  return *it->second;
}

Elem norm(const Field& big, Elem x, const Field& base) {
  const Embedding& e = embedding(base, big);
  if (x == 0) return 0;
  const std::uint64_t Q = big.q(), q = base.q();
  return e.preimage(big.pow(x, (Q - 1) / (q - 1)));
}

std::vector<Elem> kth_powers(const Field& F, std::uint64_t k) {
  if (k == 0) throw InvalidDegree("k must be positive");
  std::vector<bool> seen(F.q(), false);
  for (Elem x = 0; x < F.q(); ++x) seen[F.pow(x, k)] = true;
  std::vector<Elem> out;
  for (Elem x = 0; x < F.q(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

int degree_over(const Field& big, Elem x, const Field& base) {
  (void)embedding(base, big);
  const std::uint64_t q = base.q();
  Elem y = big.pow(x, q);
  int k = 1;
  while (y != x) {
    y = big.pow(y, q);
    ++k;
  }
  return k;
}

// --- coordinates over a subfield ------------------------------------------

namespace {

// Inverse of a square matrix over F_p; returns empty on singularity.
std::vector<std::vector<int>> invert_mod_p(std::vector<std::vector<int>> m, int p) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return {};
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const int s = inv_mod(m[col][col], p);
    for (int j = 0; j < n; ++j) {
      m[col][j] = m[col][j] * s % p;
      inv[col][j] = inv[col][j] * s % p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const int c = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] = ((m[r][j] - c * m[col][j]) % p + p) % p;
        inv[r][j] = ((inv[r][j] - c * inv[col][j]) % p + p) % p;
      }
    }
  }
  return inv;
}

}  // namespace

SubfieldBasis::SubfieldBasis(const Field& big, const Field& base, Elem gen)
    : big_(big), base_(base), gen_(gen) {
  const Embedding& e = embedding(base, big);
  const int A = big.a(), b = base.a();
  l_ = A / b;
  const int p = big.p();
  // Column k = i*b + j holds the digits of gen^i * e(p^j).
  std::vector<std::vector<int>> m(A, std::vector<int>(A, 0));
  Elem gi = 1;
  for (int i = 0; i < l_; ++i) {
    Elem pj = 1;
    for (int j = 0; j < b; ++j) {
      const Digits dg = to_digits(big.mul(gi, e(pj)), p, A);
      for (int r = 0; r < A; ++r) m[r][i * b + j] = dg[r];
      pj *= static_cast<Elem>(p);
    }
    gi = big.mul(gi, gen);
  }
  inv_ = invert_mod_p(m, p);
  if (inv_.empty()) throw InvalidDegree("element does not generate the extension");
}

std::vector<Elem> SubfieldBasis::coords(Elem x) const {
  const int A = big_.a(), b = base_.a(), p = big_.p();
  const Digits dx = to_digits(x, p, A);
  std::vector<Elem> out(l_, 0);
  for (int i = 0; i < l_; ++i) {
    Digits c(b, 0);
    for (int j = 0; j < b; ++j) {
      long long s = 0;
      for (int r = 0; r < A; ++r) s += static_cast<long long>(inv_[i * b + j][r]) * dx[r];
      c[j] = static_cast<int>(s % p);
    }
    out[i] = from_digits(c, p);
  }
  return out;
}

Elem SubfieldBasis::combine(const std::vector<Elem>& coeffs) const {
  const Embedding& e = embedding(base_, big_);
  Elem acc = 0, gi = 1;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    acc = big_.add(acc, big_.mul(e(coeffs[i]), gi));
    gi = big_.mul(gi, gen_);
  }
  return acc;
}

}  // namespace fqc
